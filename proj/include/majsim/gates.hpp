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

#include <optional>
#include <string>
#include <vector>

#include "majsim/fock.hpp"

namespace majsim {

enum class BraidConvention { mem, ivanov };

cplx convention_phase(BraidConvention c);
std::string to_string(BraidConvention c);

enum class Sector { even, odd, full };

std::string to_string(Sector s);
Sector parse_sector(const std::string& s);

struct GateMatrix {
  Matrix matrix;
  std::vector<std::string> basis;
  std::string provenance;
  // Filled by named_gate: the target matrix, the phase with
  // matrix = phase * reference, and the residual after that alignment.
  std::optional<Matrix> reference;
  cplx phase{1.0, 0.0};
  double deviation = 0.0;
  std::optional<Operator> op;

  Matrix normalized() const { return matrix / phase; }
  bool is_unitary(double tol = kTolSeq) const;
};

// phase * exp(pi/4 gamma_j gamma_i) = phase * (I + gamma_j gamma_i) / sqrt(2).
Operator braid(const FockSpace& space, int i, int j,
               BraidConvention convention = BraidConvention::mem);

// 1 on the empty mode, exp(-2 i theta) on the occupied mode.
Operator phase_gate(const FockSpace& space, Pair mode, double theta);

// <b_i| U |b_j>; throws SectorLeakage if U b_j leaves span(basis) beyond tol.
GateMatrix sector_matrix(const Operator& u, const Basis& basis, double tol = kTolSeq);
// <to_i| U |from_j>; throws SectorLeakage if U maps span(from) outside span(to).
GateMatrix transition_matrix(const Operator& u, const Basis& from, const Basis& to,
                             double tol = kTolSeq);

// Extends a matrix on span(basis) by the identity on the orthogonal complement.
Operator lift(const FockSpace& space, const Basis& basis, const Matrix& m);

// One-qubit bases on two modes and dense two-qubit bases on three modes.
Basis one_qubit_basis(const FockSpace& space2, Sector s);
Basis dense_sector_basis(const FockSpace& space3, Sector s);

namespace reference {
Matrix b23(BraidConvention c);
Matrix hadamard();
Matrix pauli_x();
Matrix pauli_y();  // (HZ)^2 with normalized H
Matrix pauli_z();
Matrix phase_diag(double theta);
Matrix b45_dense();
Matrix cnot();
Matrix cy();
Matrix ciz();
Matrix swap();
Matrix swap_prime();
Matrix y2();
// 8x8 even-sector displays; row j is the image of basis state j.
Matrix b45b56_even();
Matrix b65b54_even();
std::vector<std::string> even_sector_order();
}  // namespace reference

std::vector<std::string> gate_names();
// Accepts ASCII spellings (CNOT-, SWAP', R(-pi/4)) and the unicode ones.
std::string canonical_gate_name(const std::string& name);

// Natural sector: full for SWAP/SWAP', odd for CNOT-, even otherwise.
Sector natural_sector(const std::string& name);
// 2 for one-qubit gates and SWAPs, 3 for dense two-qubit gates.
int gate_mode_count(const std::string& name);

// Built from braids and phase gates, then aligned against the reference.
GateMatrix named_gate(const std::string& name, std::optional<Sector> sector = std::nullopt,
                      BraidConvention convention = BraidConvention::mem);

// Full construction on its own 2- or 3-mode space.
Operator gate_operator(const std::string& name, BraidConvention convention = BraidConvention::mem);

// Re-expresses a parity-even operator on a small space in Majorana monomials and
// maps small index k to index_map[k-1] of the big space.
Operator embed(const Operator& small, const FockSpace& big, const std::vector<int>& index_map);

struct CheckEntry {
  std::string name;
  std::string sector;
  double deviation = 0.0;          // exact comparison
  cplx phase{1.0, 0.0};            // best global phase
  double aligned_deviation = 0.0;  // after removing that phase
  bool pass = false;
};

struct DualityReport {
  BraidConvention convention;
  std::vector<CheckEntry> entries;
  bool all_pass() const;
};

// h_override replaces the normalized Hadamard (fault injection).
DualityReport duality_check(BraidConvention convention = BraidConvention::mem,
                            std::optional<Matrix> h_override = std::nullopt,
                            double tol = kTolExact);

struct DisplayReport {
  std::vector<CheckEntry> entries;
  double inverse_deviation = 0.0;  // |V U - I| on the even sector
  bool all_pass() const;
};

DisplayReport display_check(BraidConvention convention = BraidConvention::mem,
                             bool flip_b45 = false, double tol = kTolSeq);

}  // namespace majsim
