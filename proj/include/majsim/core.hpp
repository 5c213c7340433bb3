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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace majsim {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Algebraic identities vs. composed sequences.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolSeq = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to a library call (index out of range, wrong space size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SectorLeakage : public Error {
 public:
  explicit SectorLeakage(double magnitude);
  double magnitude() const { return magnitude_; }

 private:
  double magnitude_;
};

}  // namespace majsim
