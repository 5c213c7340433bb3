// Copyright 2026 The majsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "majsim/runner.hpp"

namespace majsim::dsl {

namespace {

constexpr double kZero = 1e-12;
constexpr std::string_view kLogicalLabels[] = {"00", "01", "10", "11"};

std::string fmt_part(double x) {
  if (std::abs(x) < kZero) return "0";
  return fmt::format("{:.11e}", x);
}

double stderr_of(double p, std::uint64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

nlohmann::ordered_json complex_json(cplx z) {
  return nlohmann::ordered_json::array({std::abs(z.real()) < kZero ? 0.0 : z.real(),
                                        std::abs(z.imag()) < kZero ? 0.0 : z.imag()});
}

}  // namespace

std::string format_real(double x) { return fmt_part(x); }

std::string format_complex(cplx z) {
  const std::string re = fmt_part(z.real());
  std::string im = fmt_part(std::abs(z.imag()));
  const bool neg = z.imag() < 0 && std::abs(z.imag()) >= kZero;
  return fmt::format("{}{}{}i", re, neg ? "-" : "+", im);
}

std::string render_text(const Report& r) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  line(fmt::format("source: {}", r.source.empty() ? "-" : r.source));
  line(fmt::format("seed: {}", r.seed));
  line(fmt::format("shots: {}", r.shots));
  line(fmt::format("modes: {}", r.n_modes));
  line("trace (shot 0):");
  for (const auto& t : r.trace) {
    if (t.event.empty()) {
      line(fmt::format("  [{}] {}", t.line, t.statement));
    } else {
      line(fmt::format("  [{}] {} => {}", t.line, t.statement, t.event));
    }
  }
  line("measurements (shot 0):");
  for (const auto& m : r.measurements) {
    line(fmt::format("  {}: {} outcome={:+d} raw={:+d} p={} norm={}->{}", m.label, m.observable, m.outcome, m.raw,
                     fmt_part(m.probability), fmt_part(m.pre_norm), fmt_part(m.post_norm)));
  }
  for (const auto& p : r.prints) {
    line(fmt::format("print [{}] {}: {}", p.line, p.kind, p.title));
    if (p.phase) line(fmt::format("  phase: {}", format_complex(*p.phase)));
    if (p.deviation) line(fmt::format("  deviation: {}", fmt_part(*p.deviation)));
    if (p.kind == "matrix") {
      for (int i = 0; i < p.values.rows(); ++i) {
        std::string row = fmt::format("  {}:", p.row_labels[i]);
        for (int j = 0; j < p.values.cols(); ++j) row += " " + format_complex(p.values(i, j));
        line(row);
      }
    } else {
      for (int j = 0; j < p.values.cols(); ++j) {
        if (p.kind == "basis") line(fmt::format("  {}:", p.col_labels[j]));
        for (int i = 0; i < p.values.rows(); ++i) {
          if (std::abs(p.values(i, j)) < kZero) continue;
          line(fmt::format("    |{}> {}", p.row_labels[i], format_complex(p.values(i, j))));
        }
      }
    }
  }
  line("final state (shot 0):");
  for (int k = 0; k < r.final_amplitudes.size(); ++k) {
    if (std::abs(r.final_amplitudes(k)) < kZero) continue;
    line(fmt::format("  |{}> {}", r.final_labels[k], format_complex(r.final_amplitudes(k))));
  }
  line(fmt::format("  norm: {}", fmt_part(r.final_norm)));
  if (r.sparse_parity_ok) line(fmt::format("  sparse parity: {}", *r.sparse_parity_ok ? "ok" : "violated"));
  if (r.n_modes == 4) {
    if (r.logical) {
      std::string l = "  logical:";
      for (int k = 0; k < 4; ++k) {
        if (std::abs(r.logical->amplitudes(k)) < kZero) continue;
        l += fmt::format(" |{}> {}", kLogicalLabels[k], format_complex(r.logical->amplitudes(k)));
      }
      line(l);
    } else {
      line("  logical: outside computational span");
    }
  }
  line("statistics:");
  for (const auto& [label, s] : r.stats) {
    const double f = static_cast<double>(s.plus) / static_cast<double>(r.shots);
    line(fmt::format("  {}: even={} odd={} freq_even={} stderr={}", label, s.plus, s.minus, fmt_part(f),
                     fmt_part(stderr_of(f, r.shots))));
  }
  const double fe = static_cast<double>(r.all_even) / static_cast<double>(r.shots);
  line(fmt::format("  all_even: count={} freq={} stderr={}", r.all_even, fmt_part(fe), fmt_part(stderr_of(fe, r.shots))));
  return out;
}

std::string render_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["source"] = r.source;
  j["seed"] = r.seed;
  j["shots"] = r.shots;
  j["modes"] = r.n_modes;
  j["trace"] = json::array();
  for (const auto& t : r.trace) j["trace"].push_back({{"line", t.line}, {"statement", t.statement}, {"event", t.event}});
  j["measurements"] = json::array();
  for (const auto& m : r.measurements) {
    j["measurements"].push_back({{"label", m.label},
                                 {"observable", m.observable},
                                 {"outcome", m.outcome},
                                 {"raw", m.raw},
                                 {"probability", m.probability},
                                 {"pre_norm", m.pre_norm},
                                 {"post_norm", m.post_norm}});
  }
  j["prints"] = json::array();
  for (const auto& p : r.prints) {
    json pj{{"line", p.line}, {"kind", p.kind}, {"title", p.title}, {"rows", p.row_labels}, {"cols", p.col_labels}};
    json vals = json::array();
    for (int i = 0; i < p.values.rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < p.values.cols(); ++c) row.push_back(complex_json(p.values(i, c)));
      vals.push_back(row);
    }
    pj["values"] = vals;
    if (p.phase) pj["phase"] = complex_json(*p.phase);
    if (p.deviation) pj["deviation"] = *p.deviation;
    j["prints"].push_back(pj);
  }
  json fs = json::object();
  for (int k = 0; k < r.final_amplitudes.size(); ++k) {
    if (std::abs(r.final_amplitudes(k)) < kZero) continue;
    fs[r.final_labels[k]] = complex_json(r.final_amplitudes(k));
  }
  j["final_state"] = fs;
  j["norm"] = r.final_norm;
  if (r.sparse_parity_ok) j["sparse_parity_ok"] = *r.sparse_parity_ok;
  if (r.n_modes == 4) {
    if (r.logical) {
      json l = json::object();
      for (int k = 0; k < 4; ++k) l[std::string(kLogicalLabels[k])] = complex_json(r.logical->amplitudes(k));
      j["logical"] = l;
    } else {
      j["logical"] = nullptr;
    }
  }
  json st = json::object();
  for (const auto& [label, s] : r.stats) st[label] = {{"even", s.plus}, {"odd", s.minus}};
  j["statistics"] = st;
  j["all_even"] = r.all_even;
  return j.dump(2) + "\n";
}

}  // namespace majsim::dsl
