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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "majsim/gates.hpp"
#include "majsim/protocol.hpp"
#include "majsim/runner.hpp"
#include "majsim/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

using majsim::dsl::format_complex;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw majsim::Error(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("MAJSIM_SEED");
  if (!env || !*env) return 0;
  try {
    size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("MAJSIM_SEED", "must be an unsigned integer");
}

std::map<std::string, int> parse_forces(const std::vector<std::string>& items) {
  std::map<std::string, int> out;
  for (const auto& f : items) {
    const auto eq = f.find('=');
    const std::string label = f.substr(0, eq);
    const std::string val = eq == std::string::npos ? "" : f.substr(eq + 1);
    if (label.empty() || (val != "+1" && val != "-1" && val != "1")) {
      throw CLI::ValidationError("--force", fmt::format("expected LABEL=+1 or LABEL=-1, got '{}'", f));
    }
    out[label] = val == "-1" ? -1 : 1;
  }
  return out;
}

void print_matrix(const majsim::Matrix& m, const std::vector<std::string>& labels) {
  for (int i = 0; i < m.rows(); ++i) {
    std::string row = fmt::format("  {}:", i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i));
    for (int j = 0; j < m.cols(); ++j) row += " " + format_complex(m(i, j));
    std::cout << row << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majsim: Majorana braiding and measurement simulator"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t seed = 0, shots = 1;
  std::vector<std::string> forces;
  bool json = false;
  auto* run = app.add_subcommand("run", "run a circuit script");
  run->add_option("FILE", file, "script path")->required();
  auto* seed_opt = run->add_option("--seed", seed, "base seed (default: MAJSIM_SEED or 0)");
  run->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
  run->add_option("--force", forces, "force a measurement outcome, LABEL=+1|-1");
  run->add_flag("--json", json, "emit JSON instead of text");

  std::string gname, sector, convention = "mem";
  bool show_matrix = false;
  auto* gate = app.add_subcommand("gate", "build a named gate from braids and compare it with its target");
  gate->add_option("NAME", gname, "gate name")->required();
  gate->add_option("--sector", sector, "even|odd|full");
  gate->add_flag("--matrix", show_matrix, "print the normalized matrix");
  gate->add_option("--convention", convention, "mem|ivanov")->check(CLI::IsMember({"mem", "ivanov"}));

  bool flip = false;
  std::uint64_t vseed = 2026, vshots = 10000;
  auto* verify = app.add_subcommand("verify", "run every golden check");
  verify->add_flag("--inject-b45-flip", flip, "fault injection: reverse B45 in the even-sector displays");
  verify->add_option("--seed", vseed, "seed for the statistics checks");
  verify->add_option("--shots", vshots, "shots for the statistics checks")->check(CLI::PositiveNumber);

  int chain = 1;
  std::string mode = "discard";
  std::uint64_t bshots = 10000, bseed = 0;
  auto* bench = app.add_subcommand("bench", "CNOT chain statistics");
  bench->add_option("--chain", chain, "chain length")->check(CLI::PositiveNumber);
  bench->add_option("--mode", mode, "discard|process1|process2")
      ->check(CLI::IsMember({"discard", "process1", "process2"}));
  bench->add_option("--shots", bshots, "shots")->check(CLI::PositiveNumber);
  auto* bseed_opt = bench->add_option("--seed", bseed, "base seed (default: MAJSIM_SEED or 0)");

  std::string bname;
  auto* basis = app.add_subcommand("basis", "print a named basis");
  basis->add_option("NAME", bname, "basis name")->required();

  std::string ffile;
  auto* fmtc = app.add_subcommand("fmt", "pretty-print a script in canonical form");
  fmtc->add_option("FILE", ffile, "script path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) {
      majsim::dsl::RunOptions opts;
      opts.seed = seed_opt->count() ? seed : default_seed();
      opts.shots = shots;
      opts.forced = parse_forces(forces);
      opts.source = file;
      const auto circuit = majsim::dsl::parse(read_file(file));
      const auto rep = majsim::dsl::run(circuit, opts);
      std::cout << (json ? majsim::dsl::render_json(rep) : majsim::dsl::render_text(rep));
      return kOk;
    }
    if (*gate) {
      const auto conv = convention == "ivanov" ? majsim::BraidConvention::ivanov : majsim::BraidConvention::mem;
      std::optional<majsim::Sector> sec;
      if (!sector.empty()) sec = majsim::parse_sector(sector);
      const auto g = majsim::named_gate(gname, sec, conv);
      const std::string name = majsim::canonical_gate_name(gname);
      std::cout << fmt::format("gate: {}\n", name);
      std::cout << fmt::format("sector: {}\n", majsim::to_string(sec.value_or(majsim::natural_sector(name))));
      std::cout << fmt::format("convention: {}\n", convention);
      std::cout << fmt::format("construction: {}\n", g.provenance);
      std::cout << fmt::format("phase: {}\n", format_complex(g.phase));
      std::cout << fmt::format("deviation: {:.3e}\n", g.deviation);
      std::cout << fmt::format("unitary: {}\n", g.is_unitary() ? "yes" : "no");
      std::string b = "basis:";
      for (const auto& l : g.basis) b += " " + l;
      std::cout << b << "\n";
      if (show_matrix) {
        std::cout << "matrix (construction / phase):\n";
        print_matrix(g.normalized(), g.basis);
      }
      return kOk;
    }
    if (*verify) {
      majsim::VerifyOptions vo;
      vo.flip_b45 = flip;
      vo.seed = vseed;
      vo.shots = vshots;
      const auto r = majsim::verify_suite(vo);
      std::cout << majsim::render_table(r);
      return r.all_pass() ? kOk : kVerifyFailed;
    }
    if (*bench) {
      const auto s = majsim::chain_stats(chain, bshots, majsim::parse_mode(mode),
                                         bseed_opt->count() ? bseed : default_seed());
      std::cout << fmt::format("mode: {}\nchain: {}\nshots: {}\nmeasurements_per_shot: {}\n", mode, s.n, s.shots,
                               s.measurements);
      std::cout << fmt::format("successes: {}\nrate: {:.6f}\nexpected: {:.6f}\nstd_error: {:.6f}\n", s.successes,
                               s.rate, s.expected_rate, s.std_error);
      std::cout << fmt::format("modes: {}\ncorrections_total: {}\nmax_corrections_per_gate: {}\n", s.n_modes,
                               s.corrections_total, s.max_corrections_per_gate);
      return kOk;
    }
    if (*basis) {
      const auto b = majsim::named_basis(bname);
      std::cout << fmt::format("basis: {}\npairing: {}\n", b.name, b[0].basis_pairing().str());
      for (const auto& v : b.vectors) {
        std::cout << fmt::format("{}:\n", v.label);
        for (int k = 0; k < v.state.space().dim(); ++k) {
          const auto a = v.state.amplitudes()(k);
          if (std::abs(a) < 1e-12) continue;
          std::cout << fmt::format("  |{}> {}\n", v.state.space().label(k), format_complex(a));
        }
      }
      return kOk;
    }
    if (*fmtc) {
      std::cout << majsim::dsl::pretty_print(majsim::dsl::parse(read_file(ffile)));
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const majsim::dsl::ParseError& e) {
    std::cerr << (file.empty() ? ffile : file) << ":" << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
