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

#include "majsim/measurement.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace majsim {

RngStream::RngStream(std::uint64_t seed, std::uint64_t shot)
    : key_(mix(mix(seed) ^ (shot * kShotStride))) {}

std::uint64_t RngStream::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RngStream::next_u64() { return mix(key_ + kGolden * ++counter_); }

double RngStream::next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

RngStream rng_stream(std::uint64_t seed, std::uint64_t shot) { return RngStream(seed, shot); }

OutcomePolicy OutcomePolicy::sampled(std::uint64_t seed, std::uint64_t shot) {
  OutcomePolicy p;
  p.mode_ = Mode::sampled;
  p.rng_.emplace(seed, shot);
  return p;
}

OutcomePolicy OutcomePolicy::forced(std::vector<int> sequence) {
  for (int v : sequence) {
    if (v != 1 && v != -1) throw DomainError("forced outcomes must be +1 or -1");
  }
  OutcomePolicy p;
  p.mode_ = Mode::forced;
  p.sequence_ = std::move(sequence);
  return p;
}

OutcomePolicy OutcomePolicy::enumerate() {
  OutcomePolicy p;
  p.mode_ = Mode::enumerate;
  return p;
}

OutcomePolicy& OutcomePolicy::force(const std::string& label, int outcome) {
  if (outcome != 1 && outcome != -1) throw DomainError("forced outcomes must be +1 or -1");
  overrides_[label] = outcome;
  return *this;
}

std::optional<int> OutcomePolicy::override_for(const std::string& label) const {
  const auto it = overrides_.find(label);
  if (it == overrides_.end()) return std::nullopt;
  return it->second;
}

int OutcomePolicy::choose(const std::string& label, double p_plus) {
  if (auto o = override_for(label)) return *o;
  switch (mode_) {
    case Mode::forced:
      if (cursor_ >= sequence_.size()) {
        throw DomainError(fmt::format("forced outcome sequence exhausted at measurement {}", label));
      }
      return sequence_[cursor_++];
    case Mode::sampled:
      return rng_->next_double() < p_plus ? 1 : -1;
    case Mode::enumerate:
      break;
  }
  throw DomainError("enumerate policy has no single outcome; use enumerate_branches");
}

Observable pair_observable(const FockSpace& space, int a, int b) {
  return {pair_parity_op(space, a, b), fmt::format("-i g{} g{}", a, b), 1};
}

Observable quad_observable(const FockSpace& space, int a, int b, int c, int d) {
  return {quad_parity_op(space, a, b, c, d), fmt::format("g{} g{} g{} g{}", a, b, c, d), -1};
}

namespace {

void check_involution(const Operator& op) {
  const Matrix& m = op.matrix();
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  if (max_abs(m * m - id) > kTolSeq || max_abs(m - m.adjoint()) > kTolSeq) {
    throw DomainError("observable must be Hermitian and square to identity");
  }
}

double plus_probability(const StateVector& s, const Observable& obs) {
  const int eig = obs.report_sign;  // eigenvalue that reports +1
  const Vector& a = s.amplitudes();
  return (0.5 * (a + static_cast<double>(eig) * (obs.op.matrix() * a))).squaredNorm();
}

}  // namespace

Measurement measure_outcome(const StateVector& state, const Observable& obs, int outcome,
                            const std::string& label) {
  if (outcome != 1 && outcome != -1) throw DomainError(fmt::format("outcome must be +1 or -1, got {}", outcome));
  check_involution(obs.op);
  const int eig = outcome * obs.report_sign;
  const Vector& a = state.amplitudes();
  const Vector v = 0.5 * (a + static_cast<double>(eig) * (obs.op.matrix() * a));
  const double p = v.squaredNorm();
  if (p < kTolExact) {
    throw ZeroProbabilityOutcome(fmt::format(
        "measurement {}: outcome {:+d} has zero probability (p = {:.3e})", label, outcome, p));
  }
  MeasurementRecord r{label, obs.description, outcome, eig, p, state.amplitudes().norm(), 0.0};
  StateVector post = StateVector::normalized(state.space(), v, state.basis_pairing());
  r.post_norm = post.amplitudes().norm();
  return {r, post};
}

Measurement measure(const StateVector& state, const Observable& obs, OutcomePolicy& policy,
                    const std::string& label) {
  const double p_plus = std::clamp(plus_probability(state, obs), 0.0, 1.0);
  const int outcome = policy.choose(label, p_plus);
  return measure_outcome(state, obs, outcome, label);
}

std::vector<Measurement> enumerate_branches(const StateVector& state, const Observable& obs,
                                            const std::string& label) {
  check_involution(obs.op);
  const double p_plus = plus_probability(state, obs);
  std::vector<Measurement> out;
  if (p_plus >= kTolExact) out.push_back(measure_outcome(state, obs, 1, label));
  if (1.0 - p_plus >= kTolExact) out.push_back(measure_outcome(state, obs, -1, label));
  return out;
}

}  // namespace majsim
