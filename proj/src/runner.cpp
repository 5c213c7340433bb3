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

#include "majsim/runner.hpp"

#include <unordered_map>

#include <fmt/format.h>

#include "majsim/gates.hpp"
#include "majsim/protocol.hpp"

namespace majsim::dsl {

RuntimeError::RuntimeError(Loc loc, const std::string& message)
    : Error(fmt::format("{}:{}: runtime error: {}", loc.line, loc.col, message)), loc_(loc) {}

namespace {

constexpr double kShowTol = 1e-12;

class Machine {
 public:
  Machine(const Circuit& c, const RunOptions& o) : circ_(c), opts_(o), space_(c.n_modes()) {}

  Report execute() {
    Report rep;
    rep.source = opts_.source;
    rep.seed = opts_.seed;
    rep.shots = opts_.shots;
    rep.n_modes = space_.n_modes();
    for (std::uint64_t shot = 0; shot < opts_.shots; ++shot) {
      Shot st{StateVector::basis_state(space_, std::string(space_.n_modes(), '0')), {}, shot == 0 ? &rep : nullptr,
              OutcomePolicy::sampled(opts_.seed, shot)};
      for (const auto& [label, v] : opts_.forced) st.policy.force(label, v);
      for (const auto& s : circ_.stmts) step(s, st);
      bool all_even = true;
      for (const auto& [var, outcome] : st.bound) {
        auto& ls = rep.stats[var];
        (outcome == 1 ? ls.plus : ls.minus)++;
        all_even = all_even && outcome == 1;
      }
      if (all_even) ++rep.all_even;
      if (shot == 0) finish(st, rep);
    }
    return rep;
  }

 private:
  struct Shot {
    StateVector state;
    std::map<std::string, int> bound;
    Report* rep;  // non-null on the recorded shot
    OutcomePolicy policy;
  };

  const Circuit& circ_;
  const RunOptions& opts_;
  FockSpace space_;
  std::unordered_map<const Stmt*, Operator> cache_;

  const Operator& op_for(const Stmt& s) {
    auto it = cache_.find(&s);
    if (it != cache_.end()) return it->second;
    Operator op = Operator::identity(space_);
    switch (s.kind) {
      case StmtKind::braid: op = braid(space_, s.indices[0], s.indices[1]); break;
      case StmtKind::phase: op = phase_gate(space_, circ_.pairs.at(s.name), s.angle.radians()); break;
      case StmtKind::gate: {
        std::vector<int> map;
        for (const auto& p : s.pairs) {
          map.push_back(circ_.pairs.at(p).a);
          map.push_back(circ_.pairs.at(p).b);
        }
        op = embed(gate_operator(s.name), space_, map);
        break;
      }
      default: break;
    }
    return cache_.emplace(&s, std::move(op)).first->second;
  }

  static void trace(Shot& st, const Stmt& s, std::string event = {}) {
    if (st.rep) st.rep->trace.push_back({s.loc.line, pretty_print(s), std::move(event)});
  }

  void step(const Stmt& s, Shot& st) {
    try {
      dispatch(s, st);
    } catch (const RuntimeError&) {
      throw;
    } catch (const Error& e) {
      throw RuntimeError(s.loc, e.what());
    }
  }

  void dispatch(const Stmt& s, Shot& st) {
    switch (s.kind) {
      case StmtKind::space:
      case StmtKind::pair:
        break;
      case StmtKind::prepare: {
        Vector v = Vector::Zero(space_.dim());
        for (const auto& k : s.kets) v(space_.index_of(k.bits)) += static_cast<double>(k.sign);
        st.state = StateVector::normalized(space_, v);
        trace(st, s);
        break;
      }
      case StmtKind::braid:
      case StmtKind::phase:
      case StmtKind::gate:
        st.state = st.state.apply(op_for(s));
        trace(st, s);
        break;
      case StmtKind::measure2:
      case StmtKind::measure4: {
        const auto& i = s.indices;
        const Observable obs = s.kind == StmtKind::measure2
                                   ? pair_observable(space_, i[0], i[1])
                                   : quad_observable(space_, i[0], i[1], i[2], i[3]);
        const Measurement m = measure(st.state, obs, st.policy, s.var);
        st.state = m.state;
        st.bound[s.var] = m.record.outcome;
        if (st.rep) st.rep->measurements.push_back(m.record);
        trace(st, s, fmt::format("{} = {} (outcome {:+d}, p = {})", s.var, m.record.outcome == 1 ? "even" : "odd",
                                 m.record.outcome, format_real(m.record.probability)));
        break;
      }
      case StmtKind::if_: {
        const auto it = st.bound.find(s.var);
        if (it == st.bound.end()) throw RuntimeError(s.loc, fmt::format("variable '{}' is unbound on this branch", s.var));
        const bool taken = (it->second == 1) == s.want_even;
        if (st.rep) st.rep->trace.push_back({s.loc.line, fmt::format("if {} == {}", s.var, s.want_even ? "even" : "odd"),
                                             taken ? "taken" : "skipped"});
        if (taken) {
          for (const auto& b : s.body) step(b, st);
        }
        break;
      }
      case StmtKind::print:
        if (st.rep) print(s, st);
        break;
    }
  }

  void print(const Stmt& s, Shot& st) {
    PrintBlock pb;
    pb.line = s.loc.line;
    switch (s.print) {
      case PrintKind::state: {
        pb.kind = "state";
        pb.title = "state";
        std::vector<int> rows;
        for (int k = 0; k < space_.dim(); ++k) {
          if (std::abs(st.state.amplitudes()(k)) > kShowTol) rows.push_back(k);
        }
        pb.values = Matrix(rows.size(), 1);
        for (size_t r = 0; r < rows.size(); ++r) {
          pb.row_labels.push_back(space_.label(rows[r]));
          pb.values(r, 0) = st.state.amplitudes()(rows[r]);
        }
        pb.col_labels = {"amplitude"};
        break;
      }
      case PrintKind::matrix: {
        const GateMatrix g = named_gate(s.name);
        pb.kind = "matrix";
        pb.title = fmt::format("{} ({}; {})", s.name, to_string(natural_sector(s.name)), g.provenance);
        pb.values = g.normalized();
        pb.row_labels = g.basis;
        pb.col_labels = g.basis;
        pb.phase = g.phase;
        pb.deviation = g.deviation;
        break;
      }
      case PrintKind::basis: {
        const EncodedBasis b = named_basis(s.name);
        const Matrix cols = b.columns();
        const FockSpace bs = b[0].space();
        pb.kind = "basis";
        pb.title = fmt::format("{} (pairing {})", s.name, b[0].basis_pairing().str());
        std::vector<int> rows;
        for (int k = 0; k < cols.rows(); ++k) {
          if (cols.row(k).cwiseAbs().maxCoeff() > kShowTol) rows.push_back(k);
        }
        pb.values = Matrix(rows.size(), cols.cols());
        for (size_t r = 0; r < rows.size(); ++r) {
          pb.row_labels.push_back(bs.label(rows[r]));
          pb.values.row(r) = cols.row(rows[r]);
        }
        pb.col_labels = b.labels();
        break;
      }
    }
    st.rep->prints.push_back(std::move(pb));
    trace(st, s);
  }

  void finish(const Shot& st, Report& rep) {
    for (int k = 0; k < space_.dim(); ++k) rep.final_labels.push_back(space_.label(k));
    rep.final_amplitudes = st.state.amplitudes();
    rep.final_norm = st.state.amplitudes().norm();
    if (space_.n_modes() == 4) {
      rep.sparse_parity_ok = sparse_parity_ok(st.state);
      try {
        rep.logical = decode_logical(st.state);
      } catch (const SectorLeakage&) {
        rep.logical.reset();
      }
    }
  }
};

}  // namespace

Report run(const Circuit& circuit, const RunOptions& options) {
  if (circuit.n_majoranas == 0) throw RuntimeError({1, 1}, "circuit declares no space");
  if (options.shots < 1) throw DomainError("shots must be at least 1");
  return Machine(circuit, options).execute();
}

}  // namespace majsim::dsl
