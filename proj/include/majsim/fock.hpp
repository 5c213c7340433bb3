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

#include "majsim/core.hpp"

namespace majsim {

inline constexpr int kMaxModes = 12;

// Ordered pair of 1-based Majorana indices; the mode annihilator is
// (gamma_a + i gamma_b) / 2.
struct Pair {
  int a = 0;
  int b = 0;
  bool operator==(const Pair&) const = default;
};

class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<Pair> pairs);

  static Pairing canonical(int n_modes);

  const std::vector<Pair>& pairs() const { return pairs_; }
  int n_modes() const { return static_cast<int>(pairs_.size()); }
  const Pair& operator[](int mode) const { return pairs_.at(mode); }

  // Throws DomainError unless the pairs perfectly match 1..n_majoranas.
  void validate(int n_majoranas) const;
  std::string str() const;

  bool operator==(const Pairing&) const = default;

 private:
  std::vector<Pair> pairs_;
};

class FockSpace {
 public:
  explicit FockSpace(int n_modes);

  int n_modes() const { return n_modes_; }
  int n_majoranas() const { return 2 * n_modes_; }
  int dim() const { return 1 << n_modes_; }
  const Pairing& canonical_pairing() const { return canonical_; }

  // Mode 1 is the most significant bit of the basis index.
  bool occupied(int index, int mode) const {
    return (index >> (n_modes_ - mode)) & 1;
  }
  std::string label(int index) const;
  int index_of(const std::string& bits) const;

  bool operator==(const FockSpace& o) const { return n_modes_ == o.n_modes_; }

 private:
  int n_modes_;
  Pairing canonical_;
};

FockSpace build_space(int n_modes);

class Operator {
 public:
  Operator(const FockSpace& space, Matrix matrix);
  static Operator identity(const FockSpace& space);

  const FockSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  Operator operator*(const Operator& rhs) const;
  Operator operator*(cplx s) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator adjoint() const;
  Operator pow(int k) const;

  bool is_hermitian(double tol = kTolExact) const;
  bool is_unitary(double tol = kTolSeq) const;

 private:
  FockSpace space_;
  Matrix matrix_;
};

class StateVector {
 public:
  // Throws DomainError if the amplitudes are not unit norm within 1e-12.
  StateVector(const FockSpace& space, Vector amplitudes,
              std::optional<Pairing> basis_pairing = std::nullopt);
  // Normalizes first; throws on a (numerically) zero vector.
  static StateVector normalized(const FockSpace& space, Vector amplitudes,
                                std::optional<Pairing> basis_pairing = std::nullopt);
  static StateVector basis_state(const FockSpace& space, const std::string& bits);

  const FockSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amp_; }
  const Pairing& basis_pairing() const { return pairing_; }

  cplx inner(const StateVector& other) const { return amp_.dot(other.amp_); }
  StateVector apply(const Operator& op) const;
  double expectation(const Operator& op) const;

 private:
  FockSpace space_;
  Vector amp_;
  Pairing pairing_;
};

struct LabeledState {
  std::string label;
  StateVector state;
};

// Ordered labeled basis of a subspace.
struct Basis {
  std::string name;
  std::vector<LabeledState> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
  const StateVector& operator[](int k) const { return vectors.at(k).state; }
  // Columns are the basis vectors.
  Matrix columns() const;
  std::vector<std::string> labels() const;
};

// Canonical occupation states with the given bit-string labels.
Basis occupation_basis(const FockSpace& space, const std::vector<std::string>& labels,
                       std::string name = {});

Operator majorana(const FockSpace& space, int i);
// -i gamma_a gamma_b; +1 on an empty mode of the pairing (a, b).
Operator pair_parity_op(const FockSpace& space, int a, int b);
// gamma_a gamma_b gamma_c gamma_d; -1 on even joint parity of two canonical modes.
Operator quad_parity_op(const FockSpace& space, int a, int b, int c, int d);
// Projector onto eigenvalue sign (+1 or -1) of an involutive observable.
Operator projector(const Operator& observable, int sign);

std::vector<LabeledState> pairing_basis(const FockSpace& space, const Pairing& pairing);
Basis pairing_basis_named(const FockSpace& space, const Pairing& pairing, std::string name);

std::optional<cplx> phase_match(const Matrix& a, const Matrix& b, double tol);
std::optional<cplx> phase_match(const Operator& a, const Operator& b, double tol);
std::optional<cplx> phase_match(const StateVector& a, const StateVector& b, double tol);

// Best single phase aligning a to b (taken at b's largest entry) and the
// max-entry residual |a - phase * b| after alignment.
struct Alignment {
  cplx phase{1.0, 0.0};
  double deviation = 0.0;
};
Alignment align(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);

}  // namespace majsim
