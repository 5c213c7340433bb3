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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majsim/encoding.hpp"
#include "majsim/measurement.hpp"

namespace majsim {

enum class ProtocolMode { process1, process2, discard, general };

std::string to_string(ProtocolMode m);
ProtocolMode parse_mode(const std::string& s);

struct RunReport {
  ProtocolMode mode = ProtocolMode::process1;
  std::optional<LogicalTwoQubit> input;
  std::vector<MeasurementRecord> records;
  std::vector<std::string> corrections;
  StateVector final_state = StateVector::basis_state(FockSpace(4), "0000");
  std::optional<LogicalTwoQubit> output;  // decoded final state
  // output = branch_phase * expected, when an expected logical state is known.
  std::optional<cplx> branch_phase;
  bool success = true;
  int n_corrections = 0;
  int n_modes = 4;
};

struct CorrectionScheme {
  Operator gate;                 // acts on the dense frame (see dense_gate_operator)
  std::optional<Operator> l2;    // applied after an undesired M1; none = no parity correction
  Operator p;                    // applied after an undesired M2
};

// Dense two-qubit matrix (in dense-plus order) lifted onto the dense frame basis.
Operator dense_gate_operator(const Matrix& gate4);
// Dense CNOT+ / CNOT- sequences on A=(1,2), B=(3,6), D=(7,8), braiding gamma6 gamma7.
Operator dense_cnot_plus_4();
Operator dense_cnot_minus_4();
// B68^2 B57^2: target exchange followed by X_C (x) X_D.
Operator process1_l2();
// lift(Y (+) Y^T) B57^2.
Operator y2_l2();
// X_B (x) X_C as B46^2.
Operator standard_p();

RunReport cnot_process1(const StateVector& state, OutcomePolicy& policy);
RunReport cnot_process2(const StateVector& state, OutcomePolicy& policy);
RunReport cnot_discard(const StateVector& state, OutcomePolicy& policy);
RunReport general_corrected_gate(const CorrectionScheme& scheme, const StateVector& state,
                                 OutcomePolicy& policy);

// Deviation of L2 from mapping the odd collapse onto the even collapse with
// one common phase; general_corrected_gate rejects L2 above 1e-9.
double l2_mapping_deviation(const Operator& l2);

// Runs with the logical input and sets branch_phase against expected_gate * input.
RunReport run_logical(ProtocolMode mode, const LogicalTwoQubit& input, OutcomePolicy& policy,
                      const Matrix& expected_gate,
                      const std::optional<CorrectionScheme>& scheme = std::nullopt);

struct BranchResult {
  int m1 = 1;
  int m2 = 1;
  Matrix logical;       // columns: decoded outputs for inputs 00, 01, 10, 11
  cplx phase{1.0, 0.0};  // logical = phase * expected
  double deviation = 0.0;
  double min_probability = 1.0;
  bool parity_ok = true;
  bool success = true;
};

// All four forced (M1, M2) branches over the four logical basis inputs.
std::vector<BranchResult> extract_branches(ProtocolMode mode, const Matrix& expected_gate,
                                           const std::optional<CorrectionScheme>& scheme =
                                               std::nullopt);

struct ChainStats {
  int n = 0;
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  double rate = 0.0;
  double expected_rate = 0.0;
  double std_error = 0.0;
  int measurements = 0;             // per shot
  std::uint64_t corrections_total = 0;
  int max_corrections_per_gate = 0;
  int n_modes = 4;
  std::uint64_t all_even_shots = 0;  // shots whose every measurement reported +1
};

ChainStats chain_stats(int n, std::uint64_t shots, ProtocolMode mode, std::uint64_t seed);

// gamma1..4 and gamma5..8 both at -1.
bool sparse_parity_ok(const StateVector& s, double tol = kTolSeq);

}  // namespace majsim
