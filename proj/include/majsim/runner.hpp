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

#include "majsim/dsl.hpp"
#include "majsim/encoding.hpp"
#include "majsim/measurement.hpp"

namespace majsim::dsl {

class RuntimeError : public Error {
 public:
  RuntimeError(Loc loc, const std::string& message);
  Loc loc() const { return loc_; }

 private:
  Loc loc_;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::uint64_t shots = 1;
  std::map<std::string, int> forced;  // measurement variable -> reported outcome
  std::string source;
};

struct TraceEntry {
  int line = 0;
  std::string statement;
  std::string event;
};

struct PrintBlock {
  int line = 0;
  std::string kind;  // state | matrix | basis
  std::string title;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix values;
  std::optional<cplx> phase;  // matrix: construction = phase * printed values
  std::optional<double> deviation;
};

struct LabelStats {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
};

struct Report {
  std::string source;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1;
  int n_modes = 0;
  // First shot in full.
  std::vector<TraceEntry> trace;
  std::vector<MeasurementRecord> measurements;
  std::vector<PrintBlock> prints;
  std::vector<std::string> final_labels;
  Vector final_amplitudes;
  double final_norm = 0.0;
  std::optional<LogicalTwoQubit> logical;
  std::optional<bool> sparse_parity_ok;
  // All shots.
  std::map<std::string, LabelStats> stats;
  std::uint64_t all_even = 0;
};

Report run(const Circuit& circuit, const RunOptions& options);

std::string format_real(double x);
// "re+imi" with 12 significant digits; parts below 1e-12 print as 0.
std::string format_complex(cplx z);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace majsim::dsl
