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

// Independent reference constructions for the tests. Nothing here calls the
// library: Majoranas come from explicit Pauli Kronecker products and braids
// from the matrix exponential.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cplx = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

inline M pauli(char c) {
  M m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -I, I, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = M::Identity(2, 2);
  }
  return m;
}

// Mode 1 is the leftmost tensor factor.
inline M gamma(int n_modes, int k) {
  const int mode = (k + 1) / 2;
  M out = M::Identity(1, 1);
  for (int m = 1; m <= n_modes; ++m) {
    char c = 'I';
    if (m < mode) c = 'Z';
    if (m == mode) c = k % 2 ? 'X' : 'Y';
    out = Eigen::kroneckerProduct(out, pauli(c)).eval();
  }
  return out;
}

inline M id(int n_modes) { return M::Identity(1 << n_modes, 1 << n_modes); }

inline M braid(int n_modes, int i, int j, cplx phase = I) {
  const M g = (kPi / 4.0) * gamma(n_modes, j) * gamma(n_modes, i);
  return phase * g.exp();
}

// -i g_a g_b, +1 when the pair is empty.
inline M pair_parity(int n_modes, int a, int b) { return -I * gamma(n_modes, a) * gamma(n_modes, b); }

inline M phase(int n_modes, int a, int b, double theta) {
  const M occ = 0.5 * (id(n_modes) - pair_parity(n_modes, a, b));
  return id(n_modes) + (std::exp(-2.0 * I * theta) - 1.0) * occ;
}

inline M quad(int n_modes, int a, int b, int c, int d) {
  return gamma(n_modes, a) * gamma(n_modes, b) * gamma(n_modes, c) * gamma(n_modes, d);
}

inline V ket(const std::string& bits) {
  V v = V::Zero(1 << bits.size());
  v(std::stoi(bits, nullptr, 2)) = 1.0;
  return v;
}

inline V collapse(const M& proj, const V& s) {
  const V v = proj * s;
  return v / v.norm();
}

// Largest |a - phase * b| after fixing the phase on b's largest entry.
inline double phase_dev(const M& a, const M& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const cplx ph = a(r, c) / b(r, c);
  return (a - (ph / std::abs(ph)) * b).cwiseAbs().maxCoeff();
}

inline M cnot() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

}  // namespace oracle
