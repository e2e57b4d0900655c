// Copyright 2026 The Ontosem Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ontosem/error.hpp"
#include "test_support.hpp"

namespace ontosem {
namespace {

using test::normal;
using test::default_kb;

std::vector<CorpusCase> corpus(const std::string& text) {
  std::istringstream in(text);
  return load_corpus(in);
}

std::vector<GoldenCase> golden(const std::string& text) {
  std::istringstream in(text);
  return load_golden(in);
}

TEST(Interpret, ExpandsAndTraces) {
  auto r = interpret_text(default_kb(), "sheba is dead");
  EXPECT_EQ(normal(r.result),
            normal("E1 sheba:human . E1 s:physioState . DEATH(s) & in(sheba,s)"));
  EXPECT_TRUE(r.trace.is_chained());
  bool expanded = false;
  for (const auto& s : r.trace.steps()) expanded = expanded || s.rule == Rule::expand;
  EXPECT_TRUE(expanded);
  EXPECT_EQ(normal(r.condensed), normal("E1 sheba:thing . DEAD(sheba:human)"));
}

TEST(Interpret, NegatedDecomposition) {
  auto r = interpret_text(default_kb(), "jon did not paint a dog");
  EXPECT_EQ(normal(r.result),
            normal("E1 jon:human . E d:dog^a . A a:activity . PAINTING(a) -> "
                   "~do(a,jon) | ~theme(a,d)"));
  EXPECT_EQ(r.trace.steps().back().note, "negated decomposition");
}

TEST(Interpret, LogicalFormInput) {
  auto r = interpret(default_kb(), parse_lf("E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)"));
  EXPECT_EQ(normal(r.result), normal("E1 sheba:human . THIEF(sheba)"));
}

TEST(Interpret, DiscourseRetraction) {
  auto r = interpret_discourse(default_kb(), {"jon planned the trip", "it was lengthy"});
  EXPECT_EQ(normal(r.result), normal("E1 jon:human . E1 e:trip . PLAN(jon,e) & LENGTHY(e)"));
  EXPECT_EQ(r.sentences.size(), 2u);
}

TEST(Interpret, Errors) {
  EXPECT_THROW(interpret(default_kb(), Discourse{}), ParseError);
  EXPECT_THROW(interpret_discourse(default_kb(), {"the temperature is 90", "he is famous"}),
               ResolutionError);
}

TEST(Infer, JonIsWise) {
  auto r = infer(default_kb(), "exercising is wise", "jon is exercising");
  ASSERT_TRUE(r);
  EXPECT_EQ(normal(r->result), normal("E1 jon:human . E1 p:property . WISDOM(p) & has(jon,p)"));
  ASSERT_EQ(r->trace.size(), 1u);
  EXPECT_EQ(r->trace.steps()[0].rule, Rule::modus_ponens);
  EXPECT_FALSE(infer(default_kb(), "exercising is wise", "jon is aging"));
}

TEST(Corpus, LoadsGroupsAndInference) {
  auto cs = corpus("# comment\nliz is famous\n---\n@infer\nexercising is wise\njon is exercising\n");
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_FALSE(cs[0].inference);
  EXPECT_EQ(cs[0].line, 2u);
  EXPECT_TRUE(cs[1].inference);
  EXPECT_EQ(cs[1].lines.size(), 2u);
  EXPECT_THROW(corpus("@infer\nexercising is wise\n"), ParseError);
}

TEST(Corpus, GoldenFormat) {
  auto gs = golden("const-subst: E1 s:thing . THIEF(s:human)\nfinal: E1 s:human . THIEF(s)\n---\n");
  ASSERT_EQ(gs.size(), 1u);
  ASSERT_EQ(gs[0].steps.size(), 1u);
  EXPECT_EQ(gs[0].steps[0].first, Rule::const_subst);
  EXPECT_THROW(golden("final E1 x . P(x)\n"), ParseError);
  EXPECT_THROW(golden("frobnicate: E1 x . P(x)\n"), ParseError);
  EXPECT_THROW(golden("final: E1 x P(x)\n"), ParseError);
}

TEST(Corpus, EmptyCorpusPasses) {
  EXPECT_TRUE(run_corpus(default_kb(), {}, {}).empty());
}

TEST(Corpus, ShippedCorpusPasses) {
  std::ifstream c(default_data_dir() / "corpus" / "shipped.corpus");
  std::ifstream g(default_data_dir() / "corpus" / "shipped.golden");
  auto reports = run_corpus(default_kb(), load_corpus(c), load_golden(g));
  EXPECT_EQ(reports.size(), 22u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.label << "\n" << (r.diffs.empty() ? "" : r.diffs[0]);
  }
}

TEST(Corpus, CorruptedGoldenFails) {
  auto cs = corpus("sheba is a thief\n");
  auto ok = run_corpus(default_kb(), cs, golden("final: E1 sheba:human . THIEF(sheba)\n"));
  EXPECT_TRUE(ok.at(0).passed);
  auto bad = run_corpus(default_kb(), cs, golden("final: E1 sheba:thing . THIEF(sheba)\n"));
  EXPECT_FALSE(bad.at(0).passed);
  EXPECT_NE(bad[0].diffs.at(0).find("expected"), std::string::npos);
  auto step = run_corpus(default_kb(), cs,
                         golden("bridge: E1 sheba:thing . THIEF(sheba)\n"
                                "final: E1 sheba:human . THIEF(sheba)\n"));
  EXPECT_FALSE(step.at(0).passed);
  auto missing = run_corpus(default_kb(), cs, {});
  EXPECT_EQ(missing.at(0).diffs.at(0), "missing golden");
}

TEST(KnowledgeBase, LoadsWithoutDefinitions) {
  auto dir = default_data_dir();
  auto kb = KnowledgeBase::load(dir / "ontology.hier", dir / "core.lex");
  EXPECT_TRUE(kb.definitions.empty());
  auto r = interpret_text(kb, "liz is famous");
  EXPECT_EQ(normal(r.result), normal("E1 liz:human . FAMOUS(liz)"));
  EXPECT_THROW(KnowledgeBase::load(dir / "missing.hier", dir / "core.lex"), Error);
}

}  // namespace
}  // namespace ontosem
