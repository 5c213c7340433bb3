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

#include <map>
#include <string>
#include <vector>

#include "majsim/core.hpp"
#include "majsim/fock.hpp"

namespace majsim::dsl {

struct Loc {
  int line = 0;
  int col = 0;
  bool operator==(const Loc&) const = default;
};

class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, semantic };
  ParseError(Kind kind, Loc loc, const std::string& message, const std::string& hint = {});

  Kind kind() const { return kind_; }
  Loc loc() const { return loc_; }
  const std::string& message() const { return message_; }
  const std::string& hint() const { return hint_; }

 private:
  Kind kind_;
  Loc loc_;
  std::string message_;
  std::string hint_;
};

std::string to_string(ParseError::Kind k);

// num * pi / den, reduced, den > 0.
struct Angle {
  long num = 0;
  long den = 1;
  double radians() const { return static_cast<double>(num) * kPi / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Angle&) const = default;
};

struct KetTerm {
  int sign = 1;
  std::string bits;
  bool operator==(const KetTerm&) const = default;
};

enum class StmtKind { space, pair, prepare, braid, phase, gate, measure2, measure4, if_, print };
enum class PrintKind { state, matrix, basis };

struct Stmt {
  StmtKind kind = StmtKind::space;
  Loc loc;
  int count = 0;                    // space
  std::string name;                 // pair / phase pair / gate name / print target
  std::vector<int> indices;         // pair, braid, measure
  std::vector<KetTerm> kets;        // prepare
  Angle angle;                      // phase
  std::vector<std::string> pairs;   // gate operands
  std::string var;                  // measure target, if variable
  bool want_even = true;            // if
  std::vector<Stmt> body;           // if
  PrintKind print = PrintKind::state;

  // Structural equality ignores source locations.
  bool same_as(const Stmt& o) const;
};

struct Circuit {
  int n_majoranas = 0;
  std::map<std::string, Pair> pairs;  // declared plus predeclared canonical names
  std::vector<Stmt> stmts;

  int n_modes() const { return n_majoranas / 2; }
  bool same_as(const Circuit& o) const;
};

Circuit parse(const std::string& text);
std::string pretty_print(const Circuit& c);
std::string pretty_print(const Stmt& s, int indent = 0);

}  // namespace majsim::dsl
