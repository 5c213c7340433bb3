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

#include "majsim/fock.hpp"

#include <bit>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace majsim {

SectorLeakage::SectorLeakage(double magnitude)
    : Error(fmt::format("sector leakage: magnitude {:.3e}", magnitude)), magnitude_(magnitude) {}

Pairing::Pairing(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

Pairing Pairing::canonical(int n_modes) {
  std::vector<Pair> p;
  for (int k = 1; k <= n_modes; ++k) p.push_back({2 * k - 1, 2 * k});
  return Pairing(std::move(p));
}

void Pairing::validate(int n_majoranas) const {
  if (2 * n_modes() != n_majoranas) {
    throw DomainError(fmt::format("pairing has {} pairs, space needs {}", n_modes(),
                                  n_majoranas / 2));
  }
  std::set<int> seen;
  for (const auto& [a, b] : pairs_) {
    for (int x : {a, b}) {
      if (x < 1 || x > n_majoranas) {
        throw DomainError(fmt::format("Majorana index {} out of range 1..{}", x, n_majoranas));
      }
      if (!seen.insert(x).second) {
        throw DomainError(fmt::format("Majorana index {} appears twice in pairing", x));
      }
    }
  }
}

std::string Pairing::str() const {
  std::string s = "[";
  for (size_t k = 0; k < pairs_.size(); ++k) {
    if (k) s += ",";
    s += fmt::format("({},{})", pairs_[k].a, pairs_[k].b);
  }
  return s + "]";
}

FockSpace::FockSpace(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1) throw DomainError("mode count must be positive");
  if (n_modes > kMaxModes) throw DomainError("mode count exceeds cap");
  canonical_ = Pairing::canonical(n_modes);
}

std::string FockSpace::label(int index) const {
  std::string s(n_modes_, '0');
  for (int m = 1; m <= n_modes_; ++m) {
    if (occupied(index, m)) s[m - 1] = '1';
  }
  return s;
}

int FockSpace::index_of(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != n_modes_) {
    throw DomainError(fmt::format("label '{}' has {} bits, space has {} modes", bits,
                                  bits.size(), n_modes_));
  }
  int idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError(fmt::format("bad occupation label '{}'", bits));
    idx = (idx << 1) | (c == '1');
  }
  return idx;
}

FockSpace build_space(int n_modes) { return FockSpace(n_modes); }

Operator::Operator(const FockSpace& space, Matrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
    throw DomainError("operator dimension does not match space");
  }
}

Operator Operator::identity(const FockSpace& space) {
  return Operator(space, Matrix::Identity(space.dim(), space.dim()));
}

Operator Operator::operator*(const Operator& rhs) const {
  return Operator(space_, matrix_ * rhs.matrix_);
}
Operator Operator::operator*(cplx s) const { return Operator(space_, matrix_ * s); }
Operator Operator::operator+(const Operator& rhs) const {
  return Operator(space_, matrix_ + rhs.matrix_);
}
Operator Operator::operator-(const Operator& rhs) const {
  return Operator(space_, matrix_ - rhs.matrix_);
}
Operator Operator::adjoint() const { return Operator(space_, matrix_.adjoint()); }

Operator Operator::pow(int k) const {
  if (k < 0) return adjoint().pow(-k);
  Matrix r = Matrix::Identity(space_.dim(), space_.dim());
  for (int i = 0; i < k; ++i) r = matrix_ * r;
  return Operator(space_, r);
}

bool Operator::is_hermitian(double tol) const {
  return max_abs(matrix_ - matrix_.adjoint()) <= tol;
}

bool Operator::is_unitary(double tol) const {
  const Matrix id = Matrix::Identity(space_.dim(), space_.dim());
  return max_abs(matrix_.adjoint() * matrix_ - id) <= tol;
}

StateVector::StateVector(const FockSpace& space, Vector amplitudes,
                         std::optional<Pairing> basis_pairing)
    : space_(space),
      amp_(std::move(amplitudes)),
      pairing_(basis_pairing.value_or(space.canonical_pairing())) {
  if (amp_.size() != space_.dim()) throw DomainError("state dimension does not match space");
  if (std::abs(amp_.norm() - 1.0) > kTolExact) {
    throw DomainError(fmt::format("state not normalized (norm {:.15g})", amp_.norm()));
  }
}

StateVector StateVector::normalized(const FockSpace& space, Vector amplitudes,
                                    std::optional<Pairing> basis_pairing) {
  const double n = amplitudes.norm();
  if (n < kTolExact) throw DomainError("cannot normalize a zero vector");
  return StateVector(space, amplitudes / n, std::move(basis_pairing));
}

StateVector StateVector::basis_state(const FockSpace& space, const std::string& bits) {
  Vector v = Vector::Zero(space.dim());
  v(space.index_of(bits)) = 1.0;
  return StateVector(space, v);
}

StateVector StateVector::apply(const Operator& op) const {
  if (!(op.space() == space_)) throw DomainError("operator acts on a different space");
  return normalized(space_, op.matrix() * amp_, pairing_);
}

double StateVector::expectation(const Operator& op) const {
  return amp_.dot(op.matrix() * amp_).real();
}

Matrix Basis::columns() const {
  if (vectors.empty()) return Matrix();
  Matrix m(vectors.front().state.space().dim(), size());
  for (int k = 0; k < size(); ++k) m.col(k) = vectors[k].state.amplitudes();
  return m;
}

std::vector<std::string> Basis::labels() const {
  std::vector<std::string> out;
  for (const auto& v : vectors) out.push_back(v.label);
  return out;
}

Basis occupation_basis(const FockSpace& space, const std::vector<std::string>& labels,
                       std::string name) {
  Basis b{std::move(name), {}};
  for (const auto& l : labels) b.vectors.push_back({l, StateVector::basis_state(space, l)});
  return b;
}

Operator majorana(const FockSpace& space, int i) {
  if (i < 1 || i > space.n_majoranas()) {
    throw DomainError(fmt::format("Majorana index {} out of range 1..{}", i, space.n_majoranas()));
  }
  const int mode = (i + 1) / 2;
  const bool odd = i % 2 == 1;
  const int n = space.n_modes();
  const int flip = 1 << (n - mode);
  // Modes left of `mode` sit in the high bits; their occupation sets the string sign.
  const int string_mask = ~((flip << 1) - 1) & (space.dim() - 1);
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (int s = 0; s < space.dim(); ++s) {
    const double sign = (std::popcount(static_cast<unsigned>(s & string_mask)) & 1) ? -1.0 : 1.0;
    cplx amp = sign;
    if (!odd) amp *= (s & flip) ? -kI : kI;
    m(s ^ flip, s) = amp;
  }
  return Operator(space, m);
}

Operator pair_parity_op(const FockSpace& space, int a, int b) {
  if (a == b) throw DomainError(fmt::format("parity indices must differ (got {} {})", a, b));
  return majorana(space, a) * majorana(space, b) * (-kI);
}

Operator quad_parity_op(const FockSpace& space, int a, int b, int c, int d) {
  const std::set<int> s{a, b, c, d};
  if (s.size() != 4) throw DomainError("quad parity indices must be distinct");
  return majorana(space, a) * majorana(space, b) * majorana(space, c) * majorana(space, d);
}

Operator projector(const Operator& observable, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("projector sign must be +1 or -1");
  const auto id = Operator::identity(observable.space());
  return (id + observable * static_cast<double>(sign)) * 0.5;
}

std::vector<LabeledState> pairing_basis(const FockSpace& space, const Pairing& pairing) {
  pairing.validate(space.n_majoranas());
  const int n = space.n_modes();
  const int dim = space.dim();
  Matrix proj = Matrix::Identity(dim, dim);
  std::vector<Matrix> create;
  for (const auto& [a, b] : pairing.pairs()) {
    proj = proj * projector(pair_parity_op(space, a, b), +1).matrix();
    create.push_back((majorana(space, a).matrix() - kI * majorana(space, b).matrix()) * 0.5);
  }
  Vector vac;
  for (int j = 0; j < dim; ++j) {
    if (proj.col(j).norm() > 1e-9) {
      // proj(j, j) is real positive, so this also fixes the phase.
      vac = proj.col(j) / proj.col(j).norm();
      break;
    }
  }
  std::vector<LabeledState> out;
  for (int idx = 0; idx < dim; ++idx) {
    Vector v = vac;
    for (int k = n; k >= 1; --k) {
      if (space.occupied(idx, k)) v = create[k - 1] * v;
    }
    out.push_back({space.label(idx), StateVector::normalized(space, v, pairing)});
  }
  return out;
}

Basis pairing_basis_named(const FockSpace& space, const Pairing& pairing, std::string name) {
  return Basis{std::move(name), pairing_basis(space, pairing)};
}

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Alignment align(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch");
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Alignment out;
  if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
    const cplx ratio = a(r, c) / b(r, c);
    out.phase = ratio / std::abs(ratio);
  }
  out.deviation = max_abs(a - out.phase * b);
  return out;
}

std::optional<cplx> phase_match(const Matrix& a, const Matrix& b, double tol) {
  const Alignment al = align(a, b);
  if (al.deviation > tol) return std::nullopt;
  if (max_abs(a - b) <= tol) return cplx{1.0, 0.0};
  return al.phase;
}

std::optional<cplx> phase_match(const Operator& a, const Operator& b, double tol) {
  return phase_match(a.matrix(), b.matrix(), tol);
}

std::optional<cplx> phase_match(const StateVector& a, const StateVector& b, double tol) {
  return phase_match(Matrix(a.amplitudes()), Matrix(b.amplitudes()), tol);
}

}  // namespace majsim
