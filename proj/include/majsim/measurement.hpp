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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "majsim/fock.hpp"

namespace majsim {

// Counter-based stream: key = mix(mix(seed) ^ (shot * kShotStride)),
// u_k = mix(key + kGolden * (k + 1)), where mix is the SplitMix64 finalizer.
class RngStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kShotStride = 0xD1B54A32D192ED03ULL;

  RngStream(std::uint64_t seed, std::uint64_t shot);

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double next_double();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

RngStream rng_stream(std::uint64_t seed, std::uint64_t shot);

class ZeroProbabilityOutcome : public Error {
 public:
  using Error::Error;
};

class OutcomePolicy {
 public:
  enum class Mode { sampled, forced, enumerate };

  static OutcomePolicy sampled(std::uint64_t seed, std::uint64_t shot = 0);
  static OutcomePolicy forced(std::vector<int> sequence);
  static OutcomePolicy enumerate();

  // Per-label override on top of any mode, e.g. {"M1", -1}.
  OutcomePolicy& force(const std::string& label, int outcome);

  Mode mode() const { return mode_; }
  std::optional<int> override_for(const std::string& label) const;
  // Picks a reported outcome (+1 / -1) for a measurement with P(+1) = p_plus.
  int choose(const std::string& label, double p_plus);

 private:
  Mode mode_ = Mode::sampled;
  std::optional<RngStream> rng_;
  std::vector<int> sequence_;
  size_t cursor_ = 0;
  std::map<std::string, int> overrides_;
};

// An involutive observable plus how its eigenvalue is reported:
// reported = report_sign * eigenvalue, raw = eigenvalue.
struct Observable {
  Operator op;
  std::string description;
  int report_sign = 1;
};

Observable pair_observable(const FockSpace& space, int a, int b);
Observable quad_observable(const FockSpace& space, int a, int b, int c, int d);

struct MeasurementRecord {
  std::string label;
  std::string observable;
  int outcome = 0;      // reported, +1 means even parity
  int raw = 0;          // eigenvalue of the observable operator itself
  double probability = 0.0;
  double pre_norm = 0.0;
  double post_norm = 0.0;
};

struct Measurement {
  MeasurementRecord record;
  StateVector state;
};

// Throws ZeroProbabilityOutcome when a forced outcome has p < 1e-12.
Measurement measure(const StateVector& state, const Observable& obs, OutcomePolicy& policy,
                    const std::string& label);

// Collapse onto a specific reported outcome.
Measurement measure_outcome(const StateVector& state, const Observable& obs, int outcome,
                            const std::string& label);

// Both branches with p >= 1e-12.
std::vector<Measurement> enumerate_branches(const StateVector& state, const Observable& obs,
                                            const std::string& label);

}  // namespace majsim
