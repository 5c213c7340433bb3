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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "majsim/dsl.hpp"
#include "majsim/protocol.hpp"
#include "majsim/runner.hpp"

namespace majsim::dsl {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string script(const std::string& name) { return slurp(fs::path(MAJSIM_SCRIPTS) / name); }

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(ParseError::Kind::syntax, {}, "none");
}

TEST(Parse, ThreeStatements) {
  const Circuit c = parse("space 8\nprepare |0000>\nbraid 4 5");
  EXPECT_EQ(c.stmts.size(), 3u);
  EXPECT_EQ(c.n_majoranas, 8);
  EXPECT_EQ(c.stmts[2].kind, StmtKind::braid);
  EXPECT_EQ(c.stmts[2].indices, (std::vector<int>{4, 5}));
  EXPECT_EQ(c.stmts[2].loc, (Loc{3, 1}));
}

TEST(Parse, BraidIndicesMustDiffer) {
  const ParseError e = parse_error("braid 4 4");
  EXPECT_EQ(e.kind(), ParseError::Kind::semantic);
  EXPECT_EQ(e.message(), "braid indices must differ");
  EXPECT_EQ(parse_error("space 8\nbraid 4 4").loc(), (Loc{2, 1}));
}

TEST(Parse, ConditionalNeedsBoundVariable) {
  const ParseError e = parse_error("space 8\nif m1 == odd { braid 5 7 braid 5 7 }");
  EXPECT_EQ(e.kind(), ParseError::Kind::semantic);
  EXPECT_EQ(e.loc(), (Loc{2, 4}));
  EXPECT_NO_THROW(parse("space 8\nmeasure2 4 5 -> m1\nif m1 == odd { braid 5 7 braid 5 7 }"));
}

TEST(Parse, ErrorKindsAndLocations) {
  struct Case {
    const char* text;
    ParseError::Kind kind;
    Loc loc;
  };
  const Case cases[] = {
      {"space 8\nbraid 4 5 ;", ParseError::Kind::lexical, {2, 11}},
      {"space 8\nprepare |00a0>", ParseError::Kind::lexical, {2, 9}},
      {"space 8\nbraid 4", ParseError::Kind::syntax, {2, 8}},
      {"space 8\nbraid 4 x", ParseError::Kind::syntax, {2, 9}},
      {"space 8\nfrobnicate 1", ParseError::Kind::syntax, {2, 1}},
      {"space 8\nmeasure2 4 5 => m", ParseError::Kind::syntax, {2, 14}},
      {"space 8\nbraid 4 9", ParseError::Kind::semantic, {2, 9}},
      {"space 7", ParseError::Kind::semantic, {1, 7}},
      {"space 8\nspace 8", ParseError::Kind::semantic, {2, 1}},
      {"space 8\nmeasure2 4 5 -> m\nmeasure2 4 5 -> m", ParseError::Kind::semantic, {3, 17}},
      {"space 4\nprepare |00> + |01>", ParseError::Kind::semantic, {2, 16}},
      {"space 8\nprepare |000>", ParseError::Kind::semantic, {2, 9}},
      {"space 8\ngate CNOT+ A B", ParseError::Kind::semantic, {2, 6}},
      {"space 8\ngate FOO A", ParseError::Kind::semantic, {2, 6}},
      {"space 8\nphase Q -pi/4", ParseError::Kind::semantic, {2, 7}},
      {"space 8\nphase A -pi/x", ParseError::Kind::syntax, {2, 9}},
      {"space 8\nprint basis nope", ParseError::Kind::semantic, {2, 13}},
      {"space 8\nmeasure2 4 5 -> m\nif m == odd {\n  space 4\n}", ParseError::Kind::semantic, {4, 3}},
      {"space 8\nmeasure2 4 5 -> m\nif m == odd {\n  braid 5 7\n", ParseError::Kind::syntax, {5, 1}},
  };
  for (const auto& c : cases) {
    const ParseError e = parse_error(c.text);
    EXPECT_EQ(e.kind(), c.kind) << c.text << "\n" << e.what();
    EXPECT_EQ(e.loc(), c.loc) << c.text << "\n" << e.what();
  }
}

TEST(Parse, SyntaxErrorsCarryHints) {
  const ParseError e = parse_error("space 8\nmeasure4 5 6 7 -> m");
  EXPECT_FALSE(e.hint().empty());
  EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
}

TEST(Parse, AnglesReduce) {
  const Circuit c = parse("space 4\nphase A -2pi/8\nphase B pi\nphase A 0\nphase B 3pi/6");
  EXPECT_EQ(c.stmts[1].angle, (Angle{-1, 4}));
  EXPECT_EQ(c.stmts[2].angle, (Angle{1, 1}));
  EXPECT_EQ(c.stmts[3].angle, (Angle{0, 1}));
  EXPECT_EQ(c.stmts[4].angle, (Angle{1, 2}));
  EXPECT_EQ(c.stmts[1].angle.str(), "-pi/4");
}

std::vector<fs::path> corpus(bool errors) {
  std::vector<fs::path> out;
  const fs::path dir = errors ? fs::path(MAJSIM_SCRIPTS) / "errors" : fs::path(MAJSIM_SCRIPTS);
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".mbc") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Corpus, ScriptsRoundTrip) {
  const auto files = corpus(false);
  EXPECT_GE(files.size(), 8u);
  for (const auto& f : files) {
    const Circuit c = parse(slurp(f));
    const std::string printed = pretty_print(c);
    const Circuit again = parse(printed);
    EXPECT_TRUE(c.same_as(again)) << f;
    EXPECT_EQ(printed, pretty_print(again)) << f;
  }
}

TEST(Corpus, ErrorScriptsDiagnose) {
  const auto files = corpus(true);
  EXPECT_GE(files.size(), 5u);
  for (const auto& f : files) {
    const ParseError e = parse_error(slurp(f));
    EXPECT_GT(e.loc().line, 0) << f;
    EXPECT_GT(e.loc().col, 0) << f;
  }
}

// Random well-formed programs survive print -> parse unchanged.
TEST(Property, RandomProgramsRoundTrip) {
  std::mt19937_64 rng(424242);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < 200; ++t) {
    const int n = 2 * pick(2, 5);
    std::string text = fmt::format("space {}\n", n);
    text += "pair P" + std::to_string(t) + fmt::format(" {} {}\n", 1, n);
    std::string ket(n / 2, '0');
    text += "prepare |" + ket + ">\n";
    int vars = 0;
    for (int k = 0; k < 12; ++k) {
      int i = pick(1, n), j = pick(1, n);
      while (j == i) j = pick(1, n);
      switch (pick(0, 5)) {
        case 0: text += fmt::format("braid {} {}\n", i, j); break;
        case 1: text += fmt::format("phase A {}pi/{}\n", pick(-3, 3), pick(1, 10)); break;
        case 2: text += fmt::format("measure2 {} {} -> v{}\n", i, j, vars++); break;
        case 3:
          if (vars) {
            text += fmt::format("if v{} == {} {{\n  braid {} {}\n  print state\n}}\n", pick(0, vars - 1),
                                pick(0, 1) ? "even" : "odd", i, j);
          }
          break;
        case 4: text += "gate H A B\n"; break;
        default: text += "print matrix CNOT+\n";
      }
    }
    const Circuit c = parse(text);
    EXPECT_TRUE(c.same_as(parse(pretty_print(c)))) << text;
  }
}

RunOptions forced(int m1, int m2) {
  RunOptions o;
  o.forced = {{"M1", m1}, {"M2", m2}};
  return o;
}

TEST(Run, Process1ScriptMatchesProtocol) {
  const Circuit c = parse(script("process1.mbc"));
  for (int m1 : {1, -1}) {
    for (int m2 : {1, -1}) {
      const Report r = run(c, forced(m1, m2));
      auto policy = OutcomePolicy::forced({m1, m2});
      const RunReport want = cnot_process1(encode_logical(LogicalTwoQubit::basis("10")), policy);
      EXPECT_LT((r.final_amplitudes - want.final_state.amplitudes()).norm(), 1e-12) << m1 << m2;
      ASSERT_TRUE(r.logical.has_value());
      EXPECT_NEAR(std::abs(r.logical->amplitudes(3)), 1.0, 1e-12);
    }
  }
}

TEST(Run, Process2ScriptMatchesProtocol) {
  const Circuit c = parse(script("process2.mbc"));
  for (int m1 : {1, -1}) {
    for (int m2 : {1, -1}) {
      const Report r = run(c, forced(m1, m2));
      auto policy = OutcomePolicy::forced({m1, m2});
      const RunReport want = cnot_process2(encode_logical(LogicalTwoQubit::basis("10")), policy);
      EXPECT_LT((r.final_amplitudes - want.final_state.amplitudes()).norm(), 1e-12) << m1 << m2;
    }
  }
}

TEST(Run, Y2ScriptMatchesGeneralScheme) {
  const Circuit c = parse(script("y2_variant.mbc"));
  const CorrectionScheme y2{dense_cnot_plus_4(), y2_l2(), standard_p()};
  for (int m1 : {1, -1}) {
    for (int m2 : {1, -1}) {
      const Report r = run(c, forced(m1, m2));
      auto policy = OutcomePolicy::forced({m1, m2});
      const RunReport want = general_corrected_gate(y2, encode_logical(LogicalTwoQubit::basis("10")), policy);
      EXPECT_LT((r.final_amplitudes - want.final_state.amplitudes()).norm(), 1e-12) << m1 << m2;
    }
  }
}

TEST(Run, DiscardFrequency) {
  RunOptions o;
  o.seed = 2026;
  o.shots = 10000;
  const Report r = run(parse(script("discard.mbc")), o);
  const double f = static_cast<double>(r.all_even) / 10000.0;
  EXPECT_LT(std::abs(f - 0.25), 3 * std::sqrt(0.25 * 0.75 / 10000.0));
  EXPECT_EQ(r.stats.at("M1").plus + r.stats.at("M1").minus, 10000u);
}

TEST(Run, PrintMatrixIsCnot) {
  const Report r = run(parse("space 6\nprint matrix CNOT+"), {});
  ASSERT_EQ(r.prints.size(), 1u);
  EXPECT_LT(max_abs(r.prints[0].values - reference::cnot()), 1e-9);
  EXPECT_NEAR(std::abs(*r.prints[0].phase + 1.0), 0.0, 1e-12);
}

TEST(Run, DenseScriptSequenceIsCnot) {
  const Report r = run(parse(script("dense_cnot.mbc")), {});
  // |101> -> |110> after the seven-factor word; the gate statement undoes it.
  ASSERT_GE(r.prints.size(), 1u);
  EXPECT_EQ(r.prints[0].row_labels, (std::vector<std::string>{"110"}));
  EXPECT_NEAR(std::abs(r.final_amplitudes(0b101)), 1.0, 1e-12);
}

TEST(Run, ReportsAreDeterministic) {
  for (const auto& f : corpus(false)) {
    RunOptions o;
    o.seed = 17;
    o.shots = 50;
    o.source = f.filename().string();
    const Circuit c = parse(slurp(f));
    EXPECT_EQ(render_text(run(c, o)), render_text(run(c, o))) << f;
    EXPECT_EQ(render_json(run(c, o)), render_json(run(c, o))) << f;
  }
}

TEST(Run, ZeroProbabilityIsARuntimeError) {
  const Circuit c = parse("space 4\nprepare |00>\nmeasure2 1 2 -> m");
  RunOptions o;
  o.forced = {{"m", -1}};
  try {
    run(c, o);
    FAIL() << "expected RuntimeError";
  } catch (const RuntimeError& e) {
    EXPECT_EQ(e.loc(), (Loc{3, 1}));
  }
}

TEST(Run, UnboundOnBranchIsARuntimeError) {
  // v is bound only inside the conditional; the outer test fails at run time
  // on the branch where the conditional was skipped.
  const Circuit c = parse("space 4\nprepare |00>\nmeasure2 1 2 -> m\nif m == odd {\n  measure2 3 4 -> v\n}\nif v == even {\n  braid 1 2\n}");
  try {
    run(c, {});
    FAIL() << "expected RuntimeError";
  } catch (const RuntimeError& e) {
    EXPECT_EQ(e.loc(), (Loc{7, 1}));
  }
}

TEST(Format, ComplexNumbers) {
  EXPECT_EQ(format_complex({0.5, -0.25}), "5.00000000000e-01-2.50000000000e-01i");
  EXPECT_EQ(format_complex({1e-13, 1.0}), "0+1.00000000000e+00i");
  EXPECT_EQ(format_complex({-1.0, -1e-14}), "-1.00000000000e+00+0i");
}

}  // namespace
}  // namespace majsim::dsl
