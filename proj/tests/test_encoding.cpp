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


#include <random>

#include <gtest/gtest.h>

#include "majsim/encoding.hpp"
#include "majsim/measurement.hpp"
#include "majsim/protocol.hpp"
#include "oracle.hpp"

namespace majsim {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

oracle::M u_oracle() { return oracle::braid(4, 4, 5) * oracle::braid(4, 5, 6); }

TEST(Sparse, ComputationalStatesObeyQuadParities) {
  const FockSpace s(4);
  for (const auto& v : sparse_even_basis(s).vectors) {
    EXPECT_NEAR(v.state.expectation(quad_parity_op(s, 1, 2, 3, 4)), -1.0, 1e-12) << v.label;
    EXPECT_NEAR(v.state.expectation(quad_parity_op(s, 5, 6, 7, 8)), -1.0, 1e-12) << v.label;
  }
  for (const auto& v : sparse_noncomp_basis(s).vectors) {
    EXPECT_NEAR(v.state.expectation(quad_parity_op(s, 1, 2, 3, 4)), 1.0, 1e-12) << v.label;
  }
  EXPECT_THROW(sparse_even_basis(FockSpace(3)), DomainError);
}

TEST(Dense, SectorsByTotalParity) {
  const FockSpace s(3);
  EXPECT_EQ(dense_basis(s, Sector::even).labels(), (std::vector<std::string>{"000", "011", "101", "110"}));
  EXPECT_EQ(dense_basis(s, Sector::odd).labels(), (std::vector<std::string>{"001", "010", "100", "111"}));
}

TEST(Logical, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    Eigen::Vector4cd a;
    for (int k = 0; k < 4; ++k) a(k) = cplx(g(rng), g(rng));
    a.normalize();
    const LogicalTwoQubit back = decode_logical(encode_logical(LogicalTwoQubit(a)));
    EXPECT_LT((back.amplitudes - a).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_EQ(encode_logical(LogicalTwoQubit::basis("10")).amplitudes()(0b1100), cplx(1.0));
  EXPECT_THROW(LogicalTwoQubit::basis("2"), DomainError);
}

TEST(Logical, DecodeReportsLeakage) {
  const FockSpace s(4);
  Vector v = Vector::Zero(16);
  v(0b0000) = kS;
  v(0b0101) = kS;
  try {
    decode_logical(StateVector(s, v));
    FAIL() << "expected SectorLeakage";
  } catch (const SectorLeakage& e) {
    EXPECT_NEAR(e.magnitude(), kS, 1e-12);
  }
}

// Printed SP vectors sit on canonical kets; attaching the same amplitudes to
// the relabeled kets gives a different state.
TEST(SpBasis, EqualsBraidedSparseBasis) {
  const FockSpace s(4);
  const Basis sparse = sparse_even_basis(s), sp = sp_basis(s), spr = sp_basis(s, SpReading::relabeled_kets);
  const oracle::M u = u_oracle();
  for (int j = 0; j < 4; ++j) {
    const oracle::V x = u * sparse[j].amplitudes();
    EXPECT_LT(oracle::phase_dev(x, sp[j].amplitudes()), 1e-12) << j;
    EXPECT_NEAR(std::abs(spr[j].amplitudes().dot(x)), kS, 1e-12) << j;
  }
}

TEST(SpBasis, PrintedAmplitudes) {
  const FockSpace s(4);
  const Basis sp = sp_basis(s);
  EXPECT_NEAR(std::abs(sp[0].amplitudes()(0b0000) - kS * kI), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp[0].amplitudes()(0b0110) - kS), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp[1].amplitudes()(0b0011) + kS), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp[1].amplitudes()(0b0101) - kS * kI), 0.0, 1e-15);
}

TEST(Collapse, PairMeasurementSplitsEvenly) {
  const FockSpace s(4);
  const Basis sparse = sparse_even_basis(s), ce = collapsed_even_basis(s), co = collapsed_odd_basis(s);
  const oracle::M u = u_oracle();
  const oracle::M pi45 = oracle::pair_parity(4, 4, 5);
  const oracle::M pp = 0.5 * (oracle::id(4) + pi45), pm = 0.5 * (oracle::id(4) - pi45);
  for (int j = 0; j < 4; ++j) {
    const oracle::V x = u * sparse[j].amplitudes();
    EXPECT_NEAR((pp * x).squaredNorm(), 0.5, 1e-12);
    EXPECT_LT(oracle::phase_dev(oracle::collapse(pp, x), ce[j].amplitudes()), 1e-12) << j;
    EXPECT_LT(oracle::phase_dev(oracle::collapse(pm, x), co[j].amplitudes()), 1e-12) << j;
  }
}

TEST(Collapse, CollapsedStatesHaveDefinitePairC) {
  const FockSpace s(4);
  for (const auto& v : collapsed_even_basis(s).vectors) {
    EXPECT_NEAR(v.state.expectation(pair_parity_op(s, 4, 5)), 1.0, 1e-12);
  }
  for (const auto& v : collapsed_odd_basis(s).vectors) {
    EXPECT_NEAR(v.state.expectation(pair_parity_op(s, 4, 5)), -1.0, 1e-12);
  }
}

// X_C (x) X_D as B57^2 sends the odd collapse to the corrected kets with
// per-vector signs (+, -, +, -) relative to the listed kets.
TEST(Collapse, DoubleBraidFlipsCAndD) {
  const FockSpace s(4);
  const Basis co = collapsed_odd_basis(s), corr = corrected_basis(s);
  const oracle::M b57 = oracle::braid(4, 5, 7);
  const oracle::M x = b57 * b57;
  std::vector<cplx> ratios;
  for (int j = 0; j < 4; ++j) {
    const oracle::V out = x * co[j].amplitudes();
    const cplx r = corr[j].amplitudes().dot(out);
    EXPECT_NEAR(std::abs(r), 1.0, 1e-12) << j;
    ratios.push_back(r);
  }
  const cplx common = ratios[0];
  const cplx want[] = {1.0, -1.0, 1.0, -1.0};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(ratios[j] / common - want[j]), 0.0, 1e-12) << j;
}

TEST(DenseFrame, BasisIsRelabeledPairingStates) {
  const FockSpace s(4);
  const auto all = pairing_basis(s, relabeled_pairing());
  const Basis f = dense_frame_basis(s);
  const int idx[] = {0b0000, 0b0101, 0b1001, 0b1100};
  for (int j = 0; j < 4; ++j) {
    EXPECT_LT((f[j].amplitudes() - all[idx[j]].state.amplitudes()).norm(), 1e-14);
  }
}

TEST(Named, EveryBasisIsOrthonormal) {
  for (const auto& n : basis_names()) {
    const Basis b = named_basis(n);
    const Matrix c = b.columns();
    EXPECT_LT(max_abs(c.adjoint() * c - Matrix::Identity(b.size(), b.size())), 1e-12) << n;
  }
  EXPECT_THROW(named_basis("nope"), DomainError);
}

}  // namespace
}  // namespace majsim
