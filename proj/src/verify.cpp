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

#include "majsim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "majsim/encoding.hpp"
#include "majsim/gates.hpp"
#include "majsim/measurement.hpp"
#include "majsim/protocol.hpp"

namespace majsim {

bool VerifyResult::all_pass() const { return failures() == 0; }

int VerifyResult::failures() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; }));
}

namespace {

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : opts_(o) {}

  void add(std::string group, std::string check, double dev, double tol, std::string detail = {}) {
    rows_.push_back({std::move(group), std::move(check), dev, tol, dev <= tol, std::move(detail)});
  }
  void flag(std::string group, std::string check, bool ok, std::string detail = {}) {
    rows_.push_back({std::move(group), std::move(check), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)});
  }

  std::vector<VerifyRow> take() { return std::move(rows_); }

  void algebra() {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const FockSpace s(n);
      for (int i = 1; i <= 2 * n; ++i) {
        for (int j = 1; j <= 2 * n; ++j) {
          const Matrix gi = majorana(s, i).matrix(), gj = majorana(s, j).matrix();
          Matrix want = Matrix::Zero(s.dim(), s.dim());
          if (i == j) want = 2.0 * Matrix::Identity(s.dim(), s.dim());
          worst = std::max(worst, max_abs(gi * gj + gj * gi - want));
        }
      }
    }
    add("algebra", "{g_i, g_j} = 2 delta_ij, n <= 4", worst, kTolExact);
  }

  void one_qubit() {
    const FockSpace s2(2);
    for (auto conv : {BraidConvention::mem, BraidConvention::ivanov}) {
      for (auto sec : {Sector::even, Sector::odd}) {
        const Matrix m = sector_matrix(braid(s2, 2, 3, conv), one_qubit_basis(s2, sec)).matrix;
        add("one-qubit", fmt::format("B23 {} {}", to_string(conv), to_string(sec)),
            max_abs(m - reference::b23(conv)), kTolExact);
      }
    }
    for (auto sec : {Sector::even, Sector::odd}) {
      const Basis b = one_qubit_basis(s2, sec);
      const auto r = phase_gate(s2, {1, 2}, -kPi / 4);
      const Matrix rbr = sector_matrix(r * braid(s2, 2, 3) * r, b).matrix;
      add("one-qubit", fmt::format("R B23 R = iH ({})", to_string(sec)),
          max_abs(rbr - kI * reference::hadamard()), kTolExact);
    }
    for (auto conv : {BraidConvention::mem, BraidConvention::ivanov}) {
      for (const auto& e : duality_check(conv).entries) {
        add("duality", fmt::format("{} {} {}", e.name, to_string(conv), e.sector), e.aligned_deviation, kTolExact,
            fmt::format("exact {:.3g}, phase {:.6g}{:+.6g}i", e.deviation, e.phase.real(), e.phase.imag()));
      }
    }
    const FockSpace s2b(2);
    const Matrix even = sector_matrix(phase_gate(s2b, {3, 4}, -kPi / 4), one_qubit_basis(s2b, Sector::even)).matrix;
    const Matrix odd = sector_matrix(phase_gate(s2b, {3, 4}, -kPi / 4), one_qubit_basis(s2b, Sector::odd)).matrix;
    Matrix de = Matrix::Zero(2, 2), dodd = Matrix::Zero(2, 2);
    de(0, 0) = 1.0;
    de(1, 1) = kI;
    dodd(0, 0) = kI;
    dodd(1, 1) = 1.0;
    add("one-qubit", "R_B even = diag(1, i)", max_abs(even - de), kTolExact);
    add("one-qubit", "R_B odd = diag(i, 1)", max_abs(odd - dodd), kTolExact);
  }

  void bases() {
    const FockSpace s4(4);
    bool ok = true;
    for (const auto& v : sparse_even_basis(s4).vectors) ok = ok && sparse_parity_ok(v.state);
    flag("bases", "sparse computational states satisfy both quad parities", ok);
    ok = true;
    for (const auto& v : sparse_noncomp_basis(s4).vectors) ok = ok && !sparse_parity_ok(v.state);
    flag("bases", "sparse noncomputational states violate them", ok);
    const FockSpace s3(3);
    Matrix tot = Matrix::Identity(8, 8);
    for (int k = 1; k <= 3; ++k) tot = tot * pair_parity_op(s3, 2 * k - 1, 2 * k).matrix();
    for (auto sec : {Sector::even, Sector::odd}) {
      double dev = 0.0;
      const double want = sec == Sector::even ? 1.0 : -1.0;
      for (const auto& v : dense_basis(s3, sec).vectors) {
        dev = std::max(dev, std::abs(v.state.amplitudes().dot(tot * v.state.amplitudes()) - want));
      }
      add("bases", fmt::format("dense {} total parity", to_string(sec)), dev, kTolExact);
    }
  }

  void dense_gates() {
    for (const char* n : {"CNOT+", "CNOT-", "CY", "CiZ", "Y2", "H", "X", "Y", "Z", "B45"}) {
      const GateMatrix g = named_gate(n);
      add("gates", fmt::format("{} ({}) from braids", n, to_string(natural_sector(n))), g.deviation, kTolSeq,
          g.provenance);
    }
    const Matrix s = reference::phase_diag(-kPi / 4);
    Matrix is = Matrix::Identity(4, 4);
    is.block(2, 2, 2, 2) = s;
    const Matrix cy = is * reference::cnot() * is.adjoint();
    add("gates", "CY by target conjugation", max_abs(cy - reference::cy()), kTolExact);
    add("gates", "CNOT CY = diag(1, 1, i, -i)", max_abs(reference::cnot() * cy - reference::ciz()), kTolExact);
    for (const char* n : {"SWAP", "SWAP'"}) {
      const GateMatrix g = named_gate(n);
      add("gates", fmt::format("{} from four braids", n), g.deviation, kTolSeq, g.provenance);
    }
  }

  void displays() {
    const auto rep = display_check(BraidConvention::mem, opts_.flip_b45);
    for (const auto& e : rep.entries) {
      add("even-sector", fmt::format("{} display{}", e.name, opts_.flip_b45 ? " [B45 flipped]" : ""),
          e.aligned_deviation, kTolSeq,
          fmt::format("phase {:.6g}{:+.6g}i", e.phase.real(), e.phase.imag()));
    }
    add("even-sector", "(B65 B54)(B45 B56) = I", rep.inverse_deviation, kTolSeq);
  }

  void collapse_chain() {
    const FockSpace s4(4);
    const auto u = braid(s4, 4, 5) * braid(s4, 5, 6);
    const auto obs = pair_observable(s4, 4, 5);
    const Basis sparse = sparse_even_basis(s4), sp = sp_basis(s4), ce = collapsed_even_basis(s4),
                co = collapsed_odd_basis(s4);
    double d_sp = 0.0, d_p = 0.0, d_e = 0.0, d_o = 0.0;
    for (int j = 0; j < 4; ++j) {
      const StateVector x = sparse[j].apply(u);
      d_sp = std::max(d_sp, align(Matrix(x.amplitudes()), Matrix(sp[j].amplitudes())).deviation);
      const auto plus = measure_outcome(x, obs, 1, "M1");
      const auto minus = measure_outcome(x, obs, -1, "M1");
      d_p = std::max({d_p, std::abs(plus.record.probability - 0.5), std::abs(minus.record.probability - 0.5)});
      d_e = std::max(d_e, align(Matrix(plus.state.amplitudes()), Matrix(ce[j].amplitudes())).deviation);
      d_o = std::max(d_o, align(Matrix(minus.state.amplitudes()), Matrix(co[j].amplitudes())).deviation);
    }
    add("collapse", "B45 B56 on sparse basis = SP basis (per column, up to phase)", d_sp, kTolSeq);
    add("collapse", "P(M1 = +-1) = 1/2", d_p, kTolExact);
    add("collapse", "M1 even collapse", d_e, kTolSeq);
    add("collapse", "M1 odd collapse", d_o, kTolSeq);
    add("collapse", "B68^2 B57^2 maps odd collapse to even collapse", l2_mapping_deviation(process1_l2()), kTolSeq);
    add("collapse", "Y2 B57^2 maps odd collapse to even collapse", l2_mapping_deviation(y2_l2()), kTolSeq);
  }

  void protocols() {
    const Matrix cnot = reference::cnot();
    std::vector<BranchResult> p1;
    for (auto mode : {ProtocolMode::process1, ProtocolMode::process2}) {
      const auto br = extract_branches(mode, cnot);
      if (mode == ProtocolMode::process1) p1 = br;
      for (const auto& b : br) {
        add(to_string(mode), fmt::format("branch M1={:+d} M2={:+d}", b.m1, b.m2),
            (b.success && b.parity_ok) ? b.deviation : std::numeric_limits<double>::infinity(), kTolSeq,
            fmt::format("phase {:.6g}{:+.6g}i", b.phase.real(), b.phase.imag()));
      }
    }
    const CorrectionScheme y2{dense_cnot_plus_4(), y2_l2(), standard_p()};
    const auto br = extract_branches(ProtocolMode::general, cnot, y2);
    for (size_t k = 0; k < br.size(); ++k) {
      const double dev = br[k].success ? align(br[k].logical, p1[k].logical).deviation
                                       : std::numeric_limits<double>::infinity();
      add("y2-variant", fmt::format("agrees with process1 on M1={:+d} M2={:+d}", br[k].m1, br[k].m2), dev, kTolSeq);
    }
  }

  void statistics() {
    for (int n = 1; n <= 3; ++n) {
      const ChainStats st = chain_stats(n, opts_.shots, ProtocolMode::discard, opts_.seed);
      add("statistics", fmt::format("discard chain N={} rate vs 2^-{}", n, 2 * n),
          std::abs(st.rate - st.expected_rate) / st.std_error, 3.0,
          fmt::format("rate {:.4f} expected {:.6f} (deviation in standard errors)", st.rate, st.expected_rate));
    }
    for (auto mode : {ProtocolMode::process1, ProtocolMode::process2}) {
      const ChainStats st = chain_stats(3, opts_.shots, mode, opts_.seed);
      const bool ok = st.successes == st.shots && st.n_modes == 4 && st.max_corrections_per_gate <= 4;
      flag("statistics", fmt::format("{} chain N=3 always succeeds", to_string(mode)), ok,
           fmt::format("{}/{} shots, {} modes, <= {} corrections per gate", st.successes, st.shots, st.n_modes,
                       st.max_corrections_per_gate));
    }
  }

 private:
  VerifyOptions opts_;
  std::vector<VerifyRow> rows_;
};

}  // namespace

VerifyResult verify_suite(const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  Suite s(options);
  s.algebra();
  s.one_qubit();
  s.bases();
  s.dense_gates();
  s.displays();
  s.collapse_chain();
  s.protocols();
  s.statistics();
  VerifyResult r;
  r.rows = s.take();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string render_table(const VerifyResult& r) {
  size_t wg = 5, wc = 5;
  for (const auto& row : r.rows) {
    wg = std::max(wg, row.group.size());
    wc = std::max(wc, row.check.size());
  }
  std::string out = fmt::format("{:<4}  {:<{}}  {:<{}}  {:>10}  {:>8}  {}\n", "", "group", wg, "check", wc,
                                "deviation", "tol", "detail");
  for (const auto& row : r.rows) {
    out += fmt::format("{:<4}  {:<{}}  {:<{}}  {:>10.3g}  {:>8.0e}  {}\n", row.pass ? "PASS" : "FAIL", row.group, wg,
                       row.check, wc, row.deviation, row.tol, row.detail);
  }
  out += fmt::format("{} checks, {} failed, {:.2f} s\n", r.rows.size(), r.failures(), r.seconds);
  return out;
}

}  // namespace majsim
