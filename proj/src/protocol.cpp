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

#include "majsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace majsim {

std::string to_string(ProtocolMode m) {
  switch (m) {
    case ProtocolMode::process1: return "process1";
    case ProtocolMode::process2: return "process2";
    case ProtocolMode::discard: return "discard";
    case ProtocolMode::general: return "general";
  }
  return "?";
}

ProtocolMode parse_mode(const std::string& s) {
  if (s == "process1") return ProtocolMode::process1;
  if (s == "process2") return ProtocolMode::process2;
  if (s == "discard") return ProtocolMode::discard;
  if (s == "general") return ProtocolMode::general;
  throw DomainError(fmt::format("unknown mode '{}' (expected discard, process1 or process2)", s));
}

namespace {

constexpr double kQuarter = -kPi / 4;

// One element of the dense CNOT sequence, in application order.
struct Element {
  std::string name;
  Operator op;
  int repeat;  // phase elements: 3 realizes the inverse
};

Operator sequence_operator(const std::vector<Element>& elems) {
  Operator out = Operator::identity(elems.front().op.space());
  for (const auto& e : elems) out = e.op.pow(e.repeat) * out;
  return out;
}

// Switches the three parity-sensitive phase elements of CNOT+ into CNOT-
// by turning on two more copies of each (G(-pi/4) = G(pi/4)^3).
std::vector<Element> switched(std::vector<Element> elems, std::vector<std::string>* log) {
  for (int idx : {0, 2, 5}) {
    auto& e = elems[idx];
    e.repeat = (e.repeat + 2) % 4;
    if (log) log->push_back(fmt::format("switch element {} {}: x{}", idx + 1, e.name, e.repeat));
  }
  return elems;
}

struct Context {
  FockSpace s4{4};
  Operator u = Operator::identity(s4);  // B45 B56
  Operator v = Operator::identity(s4);  // B65 B54
  Operator frame = Operator::identity(s4);
  Operator frame_inv = Operator::identity(s4);
  Operator b57sq = Operator::identity(s4);
  Operator b68sq = Operator::identity(s4);
  Operator b46sq = Operator::identity(s4);
  Operator total_parity = Operator::identity(s4);
  Observable m1{Operator::identity(s4), "", 1};
  Observable m2{Operator::identity(s4), "", 1};
  std::vector<Element> cnot_plus;
  Operator cnot_plus_op = Operator::identity(s4);
  Operator cnot_switched_op = Operator::identity(s4);
  Matrix even_collapse;  // columns: P+ U |sparse_j>, normalized
  Matrix odd_collapse;   // columns: P- U |sparse_j>, normalized

  Context() {
    u = braid(s4, 4, 5) * braid(s4, 5, 6);
    v = braid(s4, 6, 5) * braid(s4, 5, 4);
    frame = phase_gate(s4, {7, 8}, kQuarter);
    frame_inv = frame.adjoint();
    b57sq = braid(s4, 5, 7).pow(2);
    b68sq = braid(s4, 6, 8).pow(2);
    b46sq = braid(s4, 4, 6).pow(2);
    total_parity = quad_parity_op(s4, 1, 2, 3, 4) * quad_parity_op(s4, 5, 6, 7, 8);
    m1 = pair_observable(s4, 4, 5);
    m2 = quad_observable(s4, 5, 6, 7, 8);
    const auto ra = phase_gate(s4, {1, 2}, kQuarter);
    const auto rb = phase_gate(s4, {3, 6}, kQuarter);
    const auto rd = phase_gate(s4, {7, 8}, kQuarter);
    const auto b = braid(s4, 6, 7);
    cnot_plus = {{"R_A", ra, 3}, {"R_B", rb, 1}, {"R_D", rd, 1}, {"B67", b, 1},
                 {"R_D", rd, 1}, {"R_B", rb, 1}, {"B67", b, 1}};
    cnot_plus_op = sequence_operator(cnot_plus);
    cnot_switched_op = sequence_operator(switched(cnot_plus, nullptr));
    const Matrix sparse = sparse_even_basis(s4).columns();
    const Matrix pu = projector(m1.op, 1).matrix() * u.matrix() * sparse;
    const Matrix mu = projector(m1.op, -1).matrix() * u.matrix() * sparse;
    even_collapse = pu.colwise().normalized();
    odd_collapse = mu.colwise().normalized();
  }
};

const Context& ctx() {
  static const Context c;
  return c;
}

void check_input(const StateVector& s) {
  const auto& c = ctx();
  if (!(s.space() == c.s4)) throw DomainError("protocol input must live on 4 modes");
  if (std::abs(s.expectation(c.total_parity) - 1.0) > kTolSeq) {
    throw DomainError("input outside even sector");
  }
}

RunReport pipeline(ProtocolMode mode, const StateVector& input, OutcomePolicy& policy,
                   const CorrectionScheme* scheme) {
  check_input(input);
  const auto& c = ctx();
  RunReport rep;
  rep.mode = mode;
  StateVector s = input.apply(c.u);

  auto m1 = measure(s, c.m1, policy, "M1");
  rep.records.push_back(m1.record);
  s = m1.state;

  Operator gate = c.cnot_plus_op;
  if (mode == ProtocolMode::general) gate = scheme->gate;
  if (m1.record.outcome == -1) {
    switch (mode) {
      case ProtocolMode::discard:
        rep.success = false;
        rep.final_state = s;
        return rep;
      case ProtocolMode::process1:
        s = s.apply(c.b68sq);
        s = s.apply(c.b57sq);
        rep.corrections.push_back("SWAP stage: B68^2");
        rep.corrections.push_back("X_C(x)X_D: B57^2");
        break;
      case ProtocolMode::process2:
        switched(c.cnot_plus, &rep.corrections);
        gate = c.cnot_switched_op;
        break;
      case ProtocolMode::general:
        if (scheme->l2) {
          s = s.apply(*scheme->l2);
          rep.corrections.push_back("L2");
        }
        break;
    }
  }

  s = s.apply(c.frame_inv).apply(gate).apply(c.frame);
  s = s.apply(c.v);

  auto m2 = measure(s, c.m2, policy, "M2");
  rep.records.push_back(m2.record);
  s = m2.state;
  if (m2.record.outcome == -1) {
    if (mode == ProtocolMode::discard) {
      rep.success = false;
      rep.final_state = s;
      return rep;
    }
    s = s.apply(mode == ProtocolMode::general ? scheme->p : c.b46sq);
    rep.corrections.push_back(mode == ProtocolMode::general ? "P" : "X_B(x)X_C: B46^2");
  }
  rep.final_state = s;
  rep.n_corrections = static_cast<int>(rep.corrections.size());
  try {
    rep.output = decode_logical(s);
  } catch (const SectorLeakage&) {
    rep.output.reset();
  }
  return rep;
}

}  // namespace

Operator dense_gate_operator(const Matrix& gate4) {
  if (gate4.rows() != 4 || gate4.cols() != 4) throw DomainError("dense gate must be 4x4");
  return lift(ctx().s4, dense_frame_basis(ctx().s4), gate4);
}

Operator dense_cnot_plus_4() { return ctx().cnot_plus_op; }
Operator dense_cnot_minus_4() { return ctx().cnot_switched_op; }
Operator process1_l2() { return ctx().b57sq * ctx().b68sq; }
Operator y2_l2() { return dense_gate_operator(reference::y2()) * ctx().b57sq; }
Operator standard_p() { return ctx().b46sq; }

double l2_mapping_deviation(const Operator& l2) {
  const auto& c = ctx();
  const Matrix m = c.even_collapse.adjoint() * l2.matrix() * c.odd_collapse;
  const cplx ph = m(0, 0);
  return max_abs(m - ph * Matrix::Identity(4, 4)) + std::abs(1.0 - std::abs(ph));
}

RunReport cnot_process1(const StateVector& state, OutcomePolicy& policy) {
  return pipeline(ProtocolMode::process1, state, policy, nullptr);
}

RunReport cnot_process2(const StateVector& state, OutcomePolicy& policy) {
  return pipeline(ProtocolMode::process2, state, policy, nullptr);
}

RunReport cnot_discard(const StateVector& state, OutcomePolicy& policy) {
  return pipeline(ProtocolMode::discard, state, policy, nullptr);
}

RunReport general_corrected_gate(const CorrectionScheme& scheme, const StateVector& state,
                                 OutcomePolicy& policy) {
  if (scheme.l2) {
    const double dev = l2_mapping_deviation(*scheme.l2);
    if (dev > kTolSeq) {
      throw DomainError(fmt::format(
          "L2 fails the basis-mapping check (odd collapse -> even collapse, deviation {:.3e})", dev));
    }
  }
  return pipeline(ProtocolMode::general, state, policy, &scheme);
}

RunReport run_logical(ProtocolMode mode, const LogicalTwoQubit& input, OutcomePolicy& policy,
                      const Matrix& expected_gate, const std::optional<CorrectionScheme>& scheme) {
  const StateVector s = encode_logical(input);
  RunReport rep = [&] {
    switch (mode) {
      case ProtocolMode::process1: return cnot_process1(s, policy);
      case ProtocolMode::process2: return cnot_process2(s, policy);
      case ProtocolMode::discard: return cnot_discard(s, policy);
      case ProtocolMode::general:
        if (!scheme) throw DomainError("general mode needs a correction scheme");
        return general_corrected_gate(*scheme, s, policy);
    }
    throw DomainError("bad mode");
  }();
  rep.input = input;
  if (rep.success && rep.output) {
    const Eigen::Vector4cd expected = expected_gate * input.amplitudes;
    const cplx ov = expected.dot(rep.output->amplitudes);
    if (std::abs(ov) > 0.5) rep.branch_phase = ov / std::abs(ov);
  }
  return rep;
}

std::vector<BranchResult> extract_branches(ProtocolMode mode, const Matrix& expected_gate,
                                           const std::optional<CorrectionScheme>& scheme) {
  std::vector<BranchResult> out;
  for (int m1 : {1, -1}) {
    for (int m2 : {1, -1}) {
      BranchResult br;
      br.m1 = m1;
      br.m2 = m2;
      br.logical = Matrix::Zero(4, 4);
      for (int j = 0; j < 4; ++j) {
        Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
        e(j) = 1.0;
        auto policy = OutcomePolicy::forced({m1, m2});
        const RunReport rep = run_logical(mode, LogicalTwoQubit(e), policy, expected_gate, scheme);
        for (const auto& r : rep.records) br.min_probability = std::min(br.min_probability, r.probability);
        br.success = br.success && rep.success && rep.output.has_value();
        br.parity_ok = br.parity_ok && sparse_parity_ok(rep.final_state);
        if (rep.output) br.logical.col(j) = rep.output->amplitudes;
      }
      if (br.success) {
        const Alignment al = align(br.logical, expected_gate);
        br.phase = al.phase;
        br.deviation = al.deviation;
      } else {
        br.deviation = std::numeric_limits<double>::infinity();
      }
      out.push_back(br);
    }
  }
  return out;
}

ChainStats chain_stats(int n, std::uint64_t shots, ProtocolMode mode, std::uint64_t seed) {
  if (n < 1) throw DomainError("chain length must be at least 1");
  if (shots < 1) throw DomainError("shot count must be at least 1");
  if (mode == ProtocolMode::general) throw DomainError("chain_stats supports discard, process1, process2");
  ChainStats st;
  st.n = n;
  st.shots = shots;
  st.measurements = 2 * n;
  const StateVector input = encode_logical(LogicalTwoQubit::basis("10"));
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    auto policy = OutcomePolicy::sampled(seed, shot);
    StateVector s = input;
    bool ok = true;
    bool all_even = true;
    for (int g = 0; g < n && ok; ++g) {
      const RunReport rep = pipeline(mode, s, policy, nullptr);
      for (const auto& r : rep.records) all_even = all_even && r.outcome == 1;
      ok = rep.success;
      st.corrections_total += rep.n_corrections;
      st.max_corrections_per_gate = std::max(st.max_corrections_per_gate, rep.n_corrections);
      st.n_modes = std::max(st.n_modes, rep.final_state.space().n_modes());
      s = rep.final_state;
    }
    if (ok) ++st.successes;
    if (ok && all_even) ++st.all_even_shots;
  }
  st.rate = static_cast<double>(st.successes) / static_cast<double>(shots);
  st.expected_rate = mode == ProtocolMode::discard ? std::ldexp(1.0, -st.measurements) : 1.0;
  st.std_error = std::sqrt(st.expected_rate * (1.0 - st.expected_rate) / static_cast<double>(shots));
  return st;
}

bool sparse_parity_ok(const StateVector& s, double tol) {
  if (s.space().n_modes() != 4) return false;
  const double a = s.expectation(quad_parity_op(s.space(), 1, 2, 3, 4));
  const double b = s.expectation(quad_parity_op(s.space(), 5, 6, 7, 8));
  return std::abs(a + 1.0) <= tol && std::abs(b + 1.0) <= tol;
}

}  // namespace majsim
