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

#include "majsim/protocol.hpp"
#include "oracle.hpp"

namespace majsim {
namespace {

using oracle::I;

// Process I rebuilt from oracle matrices: reported outcome r of M1 projects
// with (1 + r Pi45) / 2, of M2 with (1 - r g5 g6 g7 g8) / 2.
oracle::V process1_oracle(const oracle::V& in, int m1, int m2) {
  const int n = 4;
  const double q = -oracle::kPi / 4;
  auto pw = [](const oracle::M& m, int k) {
    oracle::M out = oracle::id(4);
    for (int i = 0; i < k; ++i) out = m * out;
    return out;
  };
  oracle::V s = oracle::braid(n, 4, 5) * oracle::braid(n, 5, 6) * in;
  s = oracle::collapse(0.5 * (oracle::id(n) + m1 * oracle::pair_parity(n, 4, 5)), s);
  if (m1 == -1) s = pw(oracle::braid(n, 5, 7), 2) * pw(oracle::braid(n, 6, 8), 2) * s;
  const oracle::M ra = oracle::phase(n, 1, 2, q), rb = oracle::phase(n, 3, 6, q), rd = oracle::phase(n, 7, 8, q);
  const oracle::M b = oracle::braid(n, 6, 7);
  const oracle::M gate = b * rb * rd * b * rd * rb * pw(ra, 3);
  s = rd * gate * rd.adjoint() * s;
  s = oracle::braid(n, 6, 5) * oracle::braid(n, 5, 4) * s;
  s = oracle::collapse(0.5 * (oracle::id(n) - m2 * oracle::quad(n, 5, 6, 7, 8)), s);
  if (m2 == -1) s = pw(oracle::braid(n, 4, 6), 2) * s;
  return s;
}

const char* kInputs[] = {"0000", "0011", "1100", "1111"};

TEST(Process1, MatchesOraclePipelineExactly) {
  for (int j = 0; j < 4; ++j) {
    for (int m1 : {1, -1}) {
      for (int m2 : {1, -1}) {
        auto policy = OutcomePolicy::forced({m1, m2});
        const StateVector in = StateVector::basis_state(FockSpace(4), kInputs[j]);
        const RunReport rep = cnot_process1(in, policy);
        const oracle::V want = process1_oracle(in.amplitudes(), m1, m2);
        EXPECT_LT((rep.final_state.amplitudes() - want).norm(), 1e-12) << kInputs[j] << " " << m1 << m2;
      }
    }
  }
}

struct Expected {
  ProtocolMode mode;
  cplx phase[4];  // order (M1, M2): (+,+), (+,-), (-,+), (-,-)
};

// Regression values for the per-branch global phases.
TEST(Branches, FrozenPhases) {
  const Expected table[] = {
      {ProtocolMode::process1, {-1.0, I, -I, -1.0}},
      {ProtocolMode::process2, {-1.0, I, -1.0, -I}},
  };
  for (const auto& e : table) {
    const auto br = extract_branches(e.mode, reference::cnot());
    ASSERT_EQ(br.size(), 4u);
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(br[k].success);
      EXPECT_TRUE(br[k].parity_ok);
      EXPECT_LT(br[k].deviation, 1e-9);
      EXPECT_NEAR(std::abs(br[k].phase - e.phase[k]), 0.0, 1e-9) << to_string(e.mode) << " " << k;
      EXPECT_NEAR(br[k].min_probability, 0.5, 1e-12);
    }
  }
}

TEST(Branches, DiscardSucceedsOnlyOnEvenEven) {
  const auto br = extract_branches(ProtocolMode::discard, reference::cnot());
  EXPECT_TRUE(br[0].success);
  EXPECT_LT(br[0].deviation, 1e-9);
  for (int k = 1; k < 4; ++k) EXPECT_FALSE(br[k].success);
}

TEST(Deterministic, RandomSuperpositionsAndBranches) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 50; ++t) {
    Eigen::Vector4cd a;
    for (int k = 0; k < 4; ++k) a(k) = cplx(g(rng), g(rng));
    a.normalize();
    const int m1 = coin(rng) ? 1 : -1, m2 = coin(rng) ? 1 : -1;
    const Eigen::Vector4cd want = reference::cnot() * a;
    for (auto run : {cnot_process1, cnot_process2}) {
      auto policy = OutcomePolicy::forced({m1, m2});
      const RunReport rep = run(encode_logical(LogicalTwoQubit(a)), policy);
      ASSERT_TRUE(rep.output.has_value());
      EXPECT_GT(std::abs(want.dot(rep.output->amplitudes)), 1 - 1e-9);
      EXPECT_TRUE(sparse_parity_ok(rep.final_state));
      EXPECT_EQ(rep.final_state.space().n_modes(), 4);
    }
  }
}

TEST(Locality, CorrectionsTouchOnlyTheirMajoranas) {
  // Odd-M1 repair and the M2 fix commute with every Majorana outside their sets.
  const FockSpace s(4);
  const Matrix l2 = process1_l2().matrix(), p = standard_p().matrix();
  for (int k = 1; k <= 8; ++k) {
    const Matrix g = majorana(s, k).matrix();
    if (k != 5 && k != 6 && k != 7 && k != 8) EXPECT_LT(max_abs(l2 * g - g * l2), 1e-12) << k;
    if (k != 4 && k != 6) EXPECT_LT(max_abs(p * g - g * p), 1e-12) << k;
  }
}

TEST(General, Y2AgreesWithProcess1) {
  const CorrectionScheme y2{dense_cnot_plus_4(), y2_l2(), standard_p()};
  const auto a = extract_branches(ProtocolMode::general, reference::cnot(), y2);
  const auto b = extract_branches(ProtocolMode::process1, reference::cnot());
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(a[k].success);
    EXPECT_LT(align(a[k].logical, b[k].logical).deviation, 1e-9) << k;
  }
  EXPECT_LT(l2_mapping_deviation(y2_l2()), 1e-9);
}

TEST(General, IdentityGateWithStandardFix) {
  const CorrectionScheme id{Operator::identity(FockSpace(4)), std::nullopt, standard_p()};
  const auto br = extract_branches(ProtocolMode::general, Matrix::Identity(4, 4), id);
  for (const auto& b : br) {
    if (b.m1 == 1) {
      EXPECT_TRUE(b.success);
      EXPECT_LT(b.deviation, 1e-9);
    }
  }
}

TEST(General, RejectsBadL2) {
  const CorrectionScheme bad{dense_cnot_plus_4(), Operator::identity(FockSpace(4)), standard_p()};
  auto policy = OutcomePolicy::forced({-1, 1});
  EXPECT_THROW(general_corrected_gate(bad, encode_logical(LogicalTwoQubit::basis("00")), policy), DomainError);
  EXPECT_GT(l2_mapping_deviation(Operator::identity(FockSpace(4))), 0.5);
}

TEST(Inputs, RejectOddOrWrongSpace) {
  auto policy = OutcomePolicy::forced({1, 1});
  EXPECT_THROW(cnot_process1(StateVector::basis_state(FockSpace(4), "0001"), policy), DomainError);
  EXPECT_THROW(cnot_process1(StateVector::basis_state(FockSpace(3), "000"), policy), DomainError);
}

TEST(Chain, DiscardRateAndCorrectedCertainty) {
  for (int n = 1; n <= 3; ++n) {
    const ChainStats d = chain_stats(n, 10000, ProtocolMode::discard, 2026);
    EXPECT_DOUBLE_EQ(d.expected_rate, std::ldexp(1.0, -2 * n));
    EXPECT_LT(std::abs(d.rate - d.expected_rate), 3 * d.std_error) << n;
  }
  for (auto mode : {ProtocolMode::process1, ProtocolMode::process2}) {
    const ChainStats c = chain_stats(3, 2000, mode, 11);
    EXPECT_EQ(c.successes, c.shots);
    EXPECT_EQ(c.n_modes, 4);
    EXPECT_LE(c.max_corrections_per_gate, 4);
  }
  EXPECT_THROW(chain_stats(0, 10, ProtocolMode::discard, 1), DomainError);
}

TEST(Modes, ParseAndPrint) {
  for (auto m : {ProtocolMode::process1, ProtocolMode::process2, ProtocolMode::discard}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_mode("process3"), DomainError);
}

}  // namespace
}  // namespace majsim
