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

#include "majsim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <set>

#include <fmt/format.h>

#include "majsim/encoding.hpp"
#include "majsim/gates.hpp"

namespace majsim::dsl {

ParseError::ParseError(Kind kind, Loc loc, const std::string& message, const std::string& hint)
    : Error(fmt::format("{}:{}: {} error: {}{}", loc.line, loc.col, to_string(kind), message,
                        hint.empty() ? "" : fmt::format(" (hint: {})", hint))),
      kind_(kind),
      loc_(loc),
      message_(message),
      hint_(hint) {}

std::string to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::lexical: return "lexical";
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::semantic: return "semantic";
  }
  return "?";
}

std::string Angle::str() const {
  if (num == 0) return "0";
  std::string s = num == 1 ? "pi" : num == -1 ? "-pi" : fmt::format("{}pi", num);
  if (den != 1) s += fmt::format("/{}", den);
  return s;
}

bool Stmt::same_as(const Stmt& o) const {
  if (kind != o.kind || count != o.count || name != o.name || indices != o.indices ||
      kets != o.kets || !(angle == o.angle) || pairs != o.pairs || var != o.var ||
      want_even != o.want_even || print != o.print || body.size() != o.body.size()) {
    return false;
  }
  for (size_t k = 0; k < body.size(); ++k) {
    if (!body[k].same_as(o.body[k])) return false;
  }
  return true;
}

bool Circuit::same_as(const Circuit& o) const {
  if (n_majoranas != o.n_majoranas || pairs != o.pairs || stmts.size() != o.stmts.size()) return false;
  for (size_t k = 0; k < stmts.size(); ++k) {
    if (!stmts[k].same_as(o.stmts[k])) return false;
  }
  return true;
}

namespace {

using K = ParseError::Kind;

enum class Tok { word, lbrace, rbrace, newline, end };

struct Token {
  Tok kind;
  std::string text;
  Loc loc;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_+-'()/|<>=*.").find(c) !=
                                                           std::string_view::npos;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      out.push_back({Tok::newline, "\n", {line, col}});
      ++line;
      col = 1;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '{' || c == '}') {
      out.push_back({c == '{' ? Tok::lbrace : Tok::rbrace, std::string(1, c), {line, col}});
      ++col;
      ++i;
    } else if (word_char(c)) {
      const Loc start{line, col};
      size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({Tok::word, text.substr(i, j - i), start});
      col += static_cast<int>(j - i);
      i = j;
    } else {
      const auto uc = static_cast<unsigned char>(c);
      const std::string shown = uc >= 0x20 && uc < 0x7f ? std::string(1, c) : fmt::format("\\x{:02x}", uc);
      throw ParseError(K::lexical, {line, col}, fmt::format("unexpected character '{}'", shown),
                       "allowed: letters, digits, _ + - ' ( ) / | < > = * . { } #");
    }
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"space", "pair",     "prepare", "braid", "phase", "gate",
                                       "measure2", "measure4", "if",   "print", "even",  "odd",
                                       "state", "matrix",   "basis"};
  return k;
}

bool is_ident(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Circuit run() {
    skip_newlines();
    while (peek().kind != Tok::end) {
      if (peek().kind == Tok::rbrace) fail(K::syntax, peek(), "unmatched '}'", "remove it or open a block with 'if VAR == even {'");
      circ_.stmts.push_back(statement());
      const Token& t = peek();
      if (t.kind != Tok::newline && t.kind != Tok::end) {
        fail(K::syntax, t, fmt::format("expected end of line, found '{}'", t.text),
             "one statement per line outside blocks");
      }
      skip_newlines();
    }
    return circ_;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Circuit circ_;
  std::set<std::string> user_pairs_;
  std::set<std::string> bound_;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }

  [[noreturn]] void fail(K kind, const Token& t, const std::string& msg, const std::string& hint = {}) {
    throw ParseError(kind, t.loc, msg, hint);
  }

  std::string found(const Token& t) const {
    switch (t.kind) {
      case Tok::word: return fmt::format("'{}'", t.text);
      case Tok::lbrace: return "'{'";
      case Tok::rbrace: return "'}'";
      case Tok::newline: return "end of line";
      case Tok::end: return "end of input";
    }
    return "?";
  }

  const Token& word(const std::string& what, const std::string& usage) {
    const Token& t = peek();
    if (t.kind != Tok::word) fail(K::syntax, t, fmt::format("expected {}, found {}", what, found(t)), usage);
    return take();
  }

  void need_space(const Token& t) {
    if (circ_.n_majoranas == 0) {
      fail(K::semantic, t, fmt::format("'{}' before the space is declared", t.text), "start with 'space N'");
    }
  }

  int integer(const std::string& usage) {
    const Token& t = word("integer", usage);
    if (!std::all_of(t.text.begin(), t.text.end(), ::isdigit) || t.text.size() > 6) {
      fail(K::syntax, t, fmt::format("expected integer, found '{}'", t.text), usage);
    }
    return std::stoi(t.text);
  }

  void in_range(const Token& t, int i) {
    if (i < 1 || i > circ_.n_majoranas) {
      fail(K::semantic, t, fmt::format("undeclared Majorana index {} (space has {})", i, circ_.n_majoranas),
           fmt::format("indices run 1..{}", circ_.n_majoranas));
    }
  }

  int index(const std::string& usage) {
    const Token& t = peek();
    const int i = integer(usage);
    in_range(t, i);
    return i;
  }

  // Distinctness is a property of the statement itself and is reported
  // before anything that depends on the declared space.
  std::vector<int> distinct_indices(int n, const Token& kw, const std::string& usage, const std::string& msg) {
    std::vector<const Token*> toks;
    std::vector<int> idx;
    for (int q = 0; q < n; ++q) {
      toks.push_back(&peek());
      idx.push_back(integer(usage));
    }
    distinct(kw, idx, msg);
    need_space(kw);
    for (int q = 0; q < n; ++q) in_range(*toks[q], idx[q]);
    return idx;
  }

  std::string pair_name(const std::string& usage) {
    const Token& t = word("pair name", usage);
    if (!circ_.pairs.count(t.text)) {
      fail(K::semantic, t, fmt::format("unknown pair '{}'", t.text), "declare it with 'pair NAME I J'");
    }
    return t.text;
  }

  void distinct(const Token& at, const std::vector<int>& idx, const std::string& msg) {
    if (std::set<int>(idx.begin(), idx.end()).size() != idx.size()) fail(K::semantic, at, msg);
  }

  std::string variable(const std::string& usage) {
    const Token& t = word("variable name", usage);
    if (!is_ident(t.text) || keywords().count(t.text)) {
      fail(K::syntax, t, fmt::format("'{}' is not a valid variable name", t.text), usage);
    }
    return t.text;
  }

  Stmt statement() {
    const Token& kw = peek();
    if (kw.kind != Tok::word) fail(K::syntax, kw, fmt::format("expected a statement, found {}", found(kw)));
    take();
    Stmt s;
    s.loc = kw.loc;
    const std::string& k = kw.text;
    if (k != "space" && k != "braid" && k != "measure2" && k != "measure4") need_space(kw);
    if (k == "space") {
      s.kind = StmtKind::space;
      if (circ_.n_majoranas) fail(K::semantic, kw, "space declared twice");
      const Token& t = peek();
      s.count = integer("space N  (N = number of Majoranas, even)");
      if (s.count < 2 || s.count % 2 || s.count > 2 * kMaxModes) {
        fail(K::semantic, t, fmt::format("space must be an even count in 2..{}, got {}", 2 * kMaxModes, s.count));
      }
      circ_.n_majoranas = s.count;
      for (int m = 1; m <= s.count / 2; ++m) {
        circ_.pairs[std::string(1, static_cast<char>('A' + m - 1))] = {2 * m - 1, 2 * m};
      }
    } else if (k == "pair") {
      s.kind = StmtKind::pair;
      const std::string usage = "pair NAME I J";
      const Token& n = word("pair name", usage);
      if (!is_ident(n.text) || keywords().count(n.text)) {
        fail(K::syntax, n, fmt::format("'{}' is not a valid pair name", n.text), usage);
      }
      if (circ_.pairs.count(n.text)) {
        fail(K::semantic, n, fmt::format("pair '{}' already declared", n.text),
             user_pairs_.count(n.text) ? "pick another name" : "A, B, C, ... name the canonical modes");
      }
      s.name = n.text;
      s.indices = {index(usage), index(usage)};
      distinct(n, s.indices, "pair indices must differ");
      circ_.pairs[s.name] = {s.indices[0], s.indices[1]};
      user_pairs_.insert(s.name);
    } else if (k == "prepare") {
      s.kind = StmtKind::prepare;
      prepare(s);
    } else if (k == "braid") {
      s.kind = StmtKind::braid;
      s.indices = distinct_indices(2, kw, "braid I J", "braid indices must differ");
    } else if (k == "phase") {
      s.kind = StmtKind::phase;
      s.name = pair_name("phase NAME ANGLE");
      s.angle = angle(word("angle", "phase NAME ANGLE  (e.g. -pi/4)"));
    } else if (k == "gate") {
      s.kind = StmtKind::gate;
      gate(s);
    } else if (k == "measure2" || k == "measure4") {
      const int n = k == "measure2" ? 2 : 4;
      s.kind = n == 2 ? StmtKind::measure2 : StmtKind::measure4;
      const std::string usage = n == 2 ? "measure2 I J -> VAR" : "measure4 I J K L -> VAR";
      s.indices = distinct_indices(n, kw, usage, "measured Majorana indices must be distinct");
      const Token& arrow = word("'->'", usage);
      if (arrow.text != "->") fail(K::syntax, arrow, fmt::format("expected '->', found '{}'", arrow.text), usage);
      const Token& vt = peek();
      s.var = variable(usage);
      if (bound_.count(s.var)) {
        fail(K::semantic, vt, fmt::format("variable '{}' is already bound; measurement results cannot be re-assigned", s.var),
             "use a fresh variable name");
      }
      bound_.insert(s.var);
    } else if (k == "if") {
      s.kind = StmtKind::if_;
      conditional(s);
    } else if (k == "print") {
      s.kind = StmtKind::print;
      print(s);
    } else {
      fail(K::syntax, kw, fmt::format("unknown statement '{}'", k),
           "space, pair, prepare, braid, phase, gate, measure2, measure4, if, print");
    }
    return s;
  }

  void prepare(Stmt& s) {
    const std::string usage = "prepare |0101> [+|- |1010> ...]";
    int sign = 1;
    if (peek().kind == Tok::word && (peek().text == "+" || peek().text == "-")) sign = take().text == "-" ? -1 : 1;
    for (;;) {
      const Token& t = word("ket", usage);
      static const std::regex ket("\\|([01]+)>");
      std::smatch m;
      if (!std::regex_match(t.text, m, ket)) {
        if (!t.text.empty() && t.text.front() == '|') {
          fail(K::lexical, t, fmt::format("malformed ket '{}'", t.text), "kets look like |0110>");
        }
        fail(K::syntax, t, fmt::format("expected ket, found '{}'", t.text), usage);
      }
      const std::string bits = m[1];
      if (static_cast<int>(bits.size()) != circ_.n_modes()) {
        fail(K::semantic, t, fmt::format("ket has {} modes, space has {}", bits.size(), circ_.n_modes()));
      }
      if (!s.kets.empty()) {
        const auto ones = [](const std::string& b) { return std::count(b.begin(), b.end(), '1') % 2; };
        if (ones(bits) != ones(s.kets.front().bits)) {
          fail(K::semantic, t, "parity-inhomogeneous prepare: all kets must share fermion parity",
               "superpose kets of equal total occupation parity");
        }
      }
      s.kets.push_back({sign, bits});
      if (peek().kind == Tok::word && (peek().text == "+" || peek().text == "-")) {
        sign = take().text == "-" ? -1 : 1;
      } else {
        break;
      }
    }
  }

  Angle angle(const Token& t) {
    static const std::regex re("([+-]?)(\\d+)?\\*?pi(?:/(\\d+))?");
    if (t.text == "0") return {0, 1};
    std::smatch m;
    if (!std::regex_match(t.text, m, re)) {
      fail(K::syntax, t, fmt::format("expected angle as a rational multiple of pi, found '{}'", t.text),
           "e.g. -pi/4, pi/10, -2pi/5, 0");
    }
    long num = m[2].matched ? std::stol(m[2]) : 1;
    const long den = m[3].matched ? std::stol(m[3]) : 1;
    if (den == 0) fail(K::semantic, t, "angle denominator is zero");
    if (m[1] == "-") num = -num;
    const long g = std::gcd(num, den);
    return g ? Angle{num / g, den / g} : Angle{0, 1};
  }

  void gate(Stmt& s) {
    const std::string usage = "gate NAME PAIR...  (e.g. gate CNOT+ A B C)";
    const Token& g = word("gate name", usage);
    try {
      s.name = canonical_gate_name(g.text);
    } catch (const DomainError&) {
      fail(K::semantic, g, fmt::format("unknown gate '{}'", g.text), fmt::format("known: {}", fmt::join(gate_names(), ", ")));
    }
    const int need = gate_mode_count(s.name);
    while (peek().kind == Tok::word && !keywords().count(peek().text)) s.pairs.push_back(pair_name(usage));
    if (static_cast<int>(s.pairs.size()) != need) {
      fail(K::semantic, g, fmt::format("gate {} acts on {} pairs, got {}", s.name, need, s.pairs.size()), usage);
    }
    std::vector<int> idx;
    for (const auto& p : s.pairs) {
      idx.push_back(circ_.pairs.at(p).a);
      idx.push_back(circ_.pairs.at(p).b);
    }
    distinct(g, idx, "gate operands share a Majorana index");
  }

  void conditional(Stmt& s) {
    const std::string usage = "if VAR == even|odd { ... }";
    const Token& vt = peek();
    s.var = variable(usage);
    if (!bound_.count(s.var)) {
      fail(K::semantic, vt, fmt::format("variable '{}' is not bound by an earlier measurement", s.var),
           "measure2 I J -> VAR or measure4 I J K L -> VAR first");
    }
    const Token& eq = word("'=='", usage);
    if (eq.text != "==") fail(K::syntax, eq, fmt::format("expected '==', found '{}'", eq.text), usage);
    const Token& par = word("even or odd", usage);
    if (par.text != "even" && par.text != "odd") {
      fail(K::syntax, par, fmt::format("expected even or odd, found '{}'", par.text), usage);
    }
    s.want_even = par.text == "even";
    skip_newlines();
    if (peek().kind != Tok::lbrace) fail(K::syntax, peek(), fmt::format("expected '{{', found {}", found(peek())), usage);
    take();
    skip_newlines();
    while (peek().kind != Tok::rbrace) {
      if (peek().kind == Tok::end) fail(K::syntax, peek(), "unterminated block", "close it with '}'");
      const Stmt inner = statement();
      if (inner.kind == StmtKind::space || inner.kind == StmtKind::pair) {
        throw ParseError(K::semantic, inner.loc, "declarations are not allowed inside a block");
      }
      s.body.push_back(inner);
      skip_newlines();
    }
    take();
  }

  void print(Stmt& s) {
    const std::string usage = "print state | print matrix GATE | print basis NAME";
    const Token& what = word("state, matrix or basis", usage);
    if (what.text == "state") {
      s.print = PrintKind::state;
    } else if (what.text == "matrix") {
      s.print = PrintKind::matrix;
      const Token& g = word("gate name", usage);
      try {
        s.name = canonical_gate_name(g.text);
      } catch (const DomainError&) {
        fail(K::semantic, g, fmt::format("unknown gate '{}'", g.text), fmt::format("known: {}", fmt::join(gate_names(), ", ")));
      }
    } else if (what.text == "basis") {
      s.print = PrintKind::basis;
      const Token& b = word("basis name", usage);
      const auto names = basis_names();
      if (std::find(names.begin(), names.end(), b.text) == names.end()) {
        fail(K::semantic, b, fmt::format("unknown basis '{}'", b.text), fmt::format("known: {}", fmt::join(names, ", ")));
      }
      s.name = b.text;
    } else {
      fail(K::syntax, what, fmt::format("expected state, matrix or basis, found '{}'", what.text), usage);
    }
  }
};

}  // namespace

Circuit parse(const std::string& text) { return Parser(text).run(); }

std::string pretty_print(const Stmt& s, int indent) {
  const std::string pad(indent, ' ');
  switch (s.kind) {
    case StmtKind::space: return pad + fmt::format("space {}", s.count);
    case StmtKind::pair: return pad + fmt::format("pair {} {} {}", s.name, s.indices[0], s.indices[1]);
    case StmtKind::prepare: {
      std::string out = pad + "prepare";
      for (size_t k = 0; k < s.kets.size(); ++k) {
        const auto& t = s.kets[k];
        if (k == 0) {
          out += t.sign < 0 ? " - " : " ";
        } else {
          out += t.sign < 0 ? " - " : " + ";
        }
        out += "|" + t.bits + ">";
      }
      return out;
    }
    case StmtKind::braid: return pad + fmt::format("braid {} {}", s.indices[0], s.indices[1]);
    case StmtKind::phase: return pad + fmt::format("phase {} {}", s.name, s.angle.str());
    case StmtKind::gate: return pad + fmt::format("gate {} {}", s.name, fmt::join(s.pairs, " "));
    case StmtKind::measure2:
    case StmtKind::measure4: {
      return pad + fmt::format("{} {} -> {}", s.kind == StmtKind::measure2 ? "measure2" : "measure4",
                               fmt::join(s.indices, " "), s.var);
    }
    case StmtKind::if_: {
      std::string out = pad + fmt::format("if {} == {} {{\n", s.var, s.want_even ? "even" : "odd");
      for (const auto& b : s.body) out += pretty_print(b, indent + 2) + "\n";
      return out + pad + "}";
    }
    case StmtKind::print:
      switch (s.print) {
        case PrintKind::state: return pad + "print state";
        case PrintKind::matrix: return pad + "print matrix " + s.name;
        case PrintKind::basis: return pad + "print basis " + s.name;
      }
  }
  return pad;
}

std::string pretty_print(const Circuit& c) {
  std::string out;
  for (const auto& s : c.stmts) out += pretty_print(s) + "\n";
  return out;
}

}  // namespace majsim::dsl
