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
#include <string>
#include <vector>

namespace majsim {

struct VerifyRow {
  std::string group;
  std::string check;
  double deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool flip_b45 = false;  // fault injection for the even-sector displays
  std::uint64_t seed = 2026;
  std::uint64_t shots = 10000;
};

struct VerifyResult {
  std::vector<VerifyRow> rows;
  double seconds = 0.0;
  bool all_pass() const;
  int failures() const;
};

VerifyResult verify_suite(const VerifyOptions& options = {});
std::string render_table(const VerifyResult& r);

}  // namespace majsim
