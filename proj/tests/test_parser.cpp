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

#include <sstream>

#include "ontosem/error.hpp"
#include "ontosem/parser.hpp"
#include "test_support.hpp"

namespace ontosem {
namespace {

using test::normal;

const Lexicon& L() { return test::default_kb().lexicon; }

Lexicon lexicon_from(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::load(test::ontology(), in);
}

std::string condensed(const std::string& text) {
  ParsedText p = parse_text(L(), text);
  EXPECT_TRUE(p.single()) << text;
  return normal(p.discourse.sentences.at(0));
}

TEST(Lexicon, Entries) {
  EXPECT_EQ(L().name("das_kapital")->constant, "dasKapital");
  EXPECT_EQ(L().name("jon")->type, TypeTerm("human"));
  EXPECT_EQ(*L().noun("ham_sandwich"), TypeTerm("hamSandwich"));
  EXPECT_EQ(L().role("thief")->predicate, "THIEF");
  EXPECT_EQ(L().verb("painted")->object, TypeTerm("entity", ExistenceMode::abstract));
  EXPECT_TRUE(L().kind("exercising")->generic);
  EXPECT_FALSE(L().kind("aging")->generic);
  EXPECT_EQ(L().pronoun("it")->excludes, std::vector<std::string>{"human"});
  EXPECT_FALSE(L().pronoun("me")->anaphoric);
  EXPECT_EQ(L().possessive("his")->relation, "OWN");
  EXPECT_EQ(*L().determiner("another"), Quantifier::exists_unique);
  EXPECT_EQ(*L().determiner("a"), Quantifier::exists);
  EXPECT_TRUE(L().skipped("really"));
  EXPECT_TRUE(L().known("sandwich"));
  EXPECT_FALSE(L().known("wombat"));
  EXPECT_EQ(L().value()->predicate, "VALUE");
  EXPECT_EQ(camel_case("ham_sandwich"), "hamSandwich");
  EXPECT_EQ(camel_case("jon"), "jon");
}

TEST(Lexicon, SalienceComesAlong) {
  const auto& h = test::ontology();
  auto l = L().salience().lraps(h, "human", "sandwich");
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0].rel, "EAT");
  EXPECT_EQ(l[3].rel, "ORDER");
}

TEST(Lexicon, LoadErrors) {
  EXPECT_THROW(lexicon_from("noun wombat wombat\n"), Error);
  EXPECT_THROW(lexicon_from("frob x y\n"), ParseError);
  EXPECT_THROW(lexicon_from("verb see SEE human\n"), ParseError);
  EXPECT_THROW(lexicon_from("noun dog dog\nnoun dog dog\n"), ParseError);
}

TEST(Parser, SheebaIsAThief) {
  auto p = parse_text(L(), "Sheba is a thief.");
  EXPECT_EQ(p.pattern, SentencePattern::pn_is_a_n);
  EXPECT_EQ(to_string(p.pattern), "PN-is-a-N");
  EXPECT_EQ(normal(p.discourse.sentences[0]),
            normal("E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)"));
}

TEST(Parser, IntensionalObject) {
  EXPECT_EQ(condensed("jon painted a dog"),
            normal("E1 jon:human . E d:dog^a . PAINT(jon:human, d:entity^a)"));
  EXPECT_EQ(condensed("jon painted his own dog"),
            normal("E1 jon:human . E d:dog^a . OWN(jon:human, d:entity) & "
                   "PAINT(jon:human, d:entity^a)"));
  EXPECT_EQ(parse_text(L(), "jon painted his own dog").pattern,
            SentencePattern::pn_v_posspron_n);
}

TEST(Parser, Metonymy) {
  auto p = parse_text(L(), "the ham sandwich wants another beer");
  EXPECT_EQ(p.pattern, SentencePattern::det_n_v_det_n);
  EXPECT_EQ(normal(p.discourse.sentences[0]),
            normal("E1 x:hamSandwich . E1 y:beer^a . WANT(x:human, y:thing^a)"));
}

TEST(Parser, Negation) {
  auto p = parse_text(L(), "jon did not paint a dog");
  EXPECT_EQ(p.pattern, SentencePattern::pn_not_v_det_n);
  EXPECT_EQ(normal(p.discourse.sentences[0]),
            normal("E1 jon:human . E d:dog^a . ~PAINT(jon:human, d:entity^a)"));
}

TEST(Parser, CopulaForms) {
  EXPECT_EQ(parse_text(L(), "liz is famous").pattern, SentencePattern::pn_is_adj);
  EXPECT_EQ(condensed("liz is famous"), normal("E1 liz:thing . FAMOUS(liz:human)"));
  EXPECT_EQ(parse_text(L(), "sheba is an old dancer").pattern, SentencePattern::pn_is_adj_n);
  EXPECT_EQ(parse_text(L(), "aging is inevitable").pattern, SentencePattern::gerund_is_adj);
  EXPECT_EQ(parse_text(L(), "jon is aging").pattern, SentencePattern::pn_is_gerund);
  auto v = parse_text(L(), "the temperature is 90");
  EXPECT_EQ(v.pattern, SentencePattern::the_n_is_value);
  EXPECT_EQ(to_string(v.discourse.sentences[0]).find("VALUE(") != std::string::npos, true);
}

TEST(Parser, Copredication) {
  auto p = parse_text(L(), "jon read a book and then he burned it");
  EXPECT_EQ(p.pattern, SentencePattern::pn_v_det_n_and_then_pron_v_pron);
  ASSERT_EQ(p.discourse.sentences.size(), 2u);
  ASSERT_EQ(p.discourse.slots.size(), 2u);
  EXPECT_EQ(p.discourse.slots[0].constraint.base, "human");
  EXPECT_EQ(p.discourse.slots[1].constraint.base, "physical");
  EXPECT_EQ(p.discourse.slots[1].excludes, std::vector<std::string>{"human"});
}

TEST(Parser, DiscourseSlots) {
  auto p = parse_text(L(), "Jon owns Das Kapital. He does not agree with it.");
  EXPECT_EQ(p.pattern, SentencePattern::discourse);
  ASSERT_EQ(p.discourse.slots.size(), 2u);
  EXPECT_EQ(p.discourse.slots[1].constraint.base, "content");
  EXPECT_FALSE(p.discourse.slots[1].optional);
  auto t = parse_discourse(L(), {"pass that car, will you", "they are really annoying me"});
  EXPECT_EQ(t.clauses.front(), SentencePattern::imperative_v_det_n);
  ASSERT_EQ(t.discourse.slots.size(), 1u);
  EXPECT_EQ(t.discourse.slots[0].constraint.card, Cardinality::many);
  auto d = parse_discourse(L(), {"jon planned the trip", "the trip was lengthy"});
  ASSERT_EQ(d.discourse.slots.size(), 1u);
  EXPECT_TRUE(d.discourse.slots[0].optional);
}

TEST(Parser, DecimalsDoNotSplitSentences) {
  auto p = parse_text(L(), "the temperature is 90.5");
  EXPECT_TRUE(p.single());
  EXPECT_NE(to_string(p.discourse.sentences[0]).find("90.5"), std::string::npos);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_text(L(), "sheba is a wombat"), ParseError);
  EXPECT_THROW(parse_text(L(), ""), ParseError);
  try {
    parse_text(L(), "sheba thief");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no sentence pattern matches"), std::string::npos);
  }
}

}  // namespace
}  // namespace ontosem
