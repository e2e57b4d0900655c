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

#include "ontosem/error.hpp"
#include "ontosem/resolve.hpp"
#include "test_support.hpp"

namespace ontosem {
namespace {

using test::normal;

const TypeHierarchy& H() { return test::ontology(); }
const SalienceRegistry& R() { return test::default_kb().salience(); }

Resolution scope(const std::string& lf) { return resolve_scope(H(), R(), parse_lf(lf)); }

std::vector<Rule> rules(const DerivationTrace& t) {
  std::vector<Rule> out;
  for (const auto& s : t.steps()) out.push_back(s.rule);
  return out;
}

TEST(ResolveScope, ShebaIsAThief) {
  auto r = scope("E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)");
  EXPECT_EQ(normal(r.result), normal("E1 sheba:human . THIEF(sheba)"));
  EXPECT_EQ(rules(r.trace), (std::vector<Rule>{Rule::const_subst, Rule::unify_subsume}));
  EXPECT_EQ(normal(r.trace.steps()[0].after), normal("E1 sheba:thing . THIEF(sheba:human)"));
  EXPECT_TRUE(r.trace.is_chained());
}

TEST(ResolveScope, PaintingADogKeepsItAbstract) {
  auto r = scope("E1 jon:human . E d:dog^a . PAINT(jon:human, d:entity^a)");
  EXPECT_EQ(normal(r.result), normal("E1 jon:human . E d:dog^a . PAINT(jon,d)"));
}

TEST(ResolveScope, OwningTheDogMakesItActual) {
  auto r = scope(
      "E1 jon:human . E d:dog^a . OWN(jon:human, d:entity) & "
      "PAINT(jon:human, d:entity^a)");
  EXPECT_EQ(normal(r.result),
            normal("E1 jon:human . E d:dog . OWN(jon,d) & PAINT(jon,d)"));
  bool mode_step = false;
  for (const auto& s : r.trace.steps()) mode_step = mode_step || s.rule == Rule::unify_mode;
  EXPECT_TRUE(mode_step);
}

TEST(ResolveScope, PlannedTripStaysAbstract) {
  auto r = scope("E1 jon:human . E1 e:trip^a . PLAN(jon:human, e:event^a)");
  EXPECT_EQ(normal(r.result), normal("E1 jon:human . E1 e:trip^a . PLAN(jon,e)"));
  auto l = scope(
      "E1 jon:human . E1 e:trip^a . PLAN(jon:human, e:event^a) & LENGTHY(e:event)");
  EXPECT_EQ(normal(l.result),
            normal("E1 jon:human . E1 e:trip . PLAN(jon,e) & LENGTHY(e)"));
}

TEST(ResolveScope, Copredication) {
  auto r = scope(
      "E1 jon:entity . E b:book . READ(jon:human, b:content) & "
      "BURN(jon:human, b:physical)");
  EXPECT_EQ(normal(r.result),
            normal("E1 jon:human . E b:book . E c:content . CONTAINS(b,c) & "
                   "READ(jon,c) & BURN(jon,b)"));
  int bridges = 0;
  for (const auto& s : r.trace.steps()) bridges += s.rule == Rule::bridge;
  EXPECT_EQ(bridges, 1);
}

TEST(ResolveScope, HamSandwichMetonymy) {
  auto r = scope(
      "E1 x:hamSandwich . E1 y:beer^a . WANT(x:human, y:thing^a)");
  EXPECT_EQ(normal(r.result),
            normal("E1 x:hamSandwich . E1 z:human . E1 y:beer^a . EAT(z,x) & WANT(z,y)"));
}

TEST(ResolveScope, SingleUseIsUnchanged) {
  auto r = scope("E d:dog . P(d)");
  EXPECT_EQ(r.result, parse_lf("E d:dog . P(d)"));
  EXPECT_TRUE(r.trace.empty());
}

TEST(ResolveScope, FixedPoint) {
  for (const char* lf :
       {"E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)",
        "E1 jon:entity . E b:book . READ(jon:human, b:content) & BURN(jon:human, b:physical)",
        "E1 x:hamSandwich . E1 y:beer^a . WANT(x:human, y:thing^a)"}) {
    auto once = scope(lf);
    auto twice = resolve_scope(H(), R(), once.result);
    EXPECT_TRUE(twice.trace.empty()) << lf;
    EXPECT_EQ(twice.result, once.result);
  }
}

TEST(ResolveScope, BridgeUnderUniversalGoesToTheAntecedent) {
  auto r = scope("A a:activity . EXERCISING(a) -> (E1 p:property . WISDOM(p) & has(a:human,p))");
  EXPECT_EQ(normal(r.result),
            normal("A a:activity . A x:human^a . EXERCISING(a) & AGENT(a,x) -> "
                   "(E1 p:property . WISDOM(p) & has(x,p))"));
}

TEST(ResolveScope, FailureNamesTheTypes) {
  try {
    scope("E x:measure . RISING(x:process)");
    FAIL() << "expected UnificationError";
  } catch (const UnificationError& e) {
    EXPECT_EQ(e.var(), "x");
    EXPECT_EQ(e.left(), "measure");
    EXPECT_EQ(e.right(), "process");
  }
}

TEST(ResolveScope, CopulaReadings) {
  auto gt = scope("E1 x:temperature . E1 p:process . RISING(p) & be(x,p)");
  EXPECT_EQ(normal(gt.result),
            normal("E1 x:temperature . E1 p:process . RISING(p) & gt(x,p)"));
  EXPECT_EQ(gt.trace.steps()[0].rule, Rule::copula);
  auto id = scope("E1 x:temperature . E1 y:measure . VALUE(y,90) & be(x,y)");
  EXPECT_EQ(normal(id.result), normal("E1 x:temperature . VALUE(x,90)"));
}

Discourse das_kapital() {
  Discourse d;
  d.sentences = {
      parse_lf("E1 jon:human . E1 dasKapital:book . OWN(jon:human, dasKapital:entity)"),
      parse_lf("E1 he:human^a . E1 it:thing^a . ~AGREE(he:human, it:content)")};
  d.slots = {{1, "he", TypeTerm("human"), false, {}},
             {1, "it", TypeTerm("content"), false, {"human"}}};
  return d;
}

TEST(ResolveDiscourse, ItIsTheContentOfTheBook) {
  auto r = resolve_discourse(H(), R(), das_kapital());
  EXPECT_EQ(normal(r.result),
            normal("E1 jon:human . E1 dasKapital:book . E1 c:content . "
                   "CONTAINS(dasKapital,c) & OWN(jon,dasKapital) & ~AGREE(jon,c)"));
  int binds = 0;
  for (const auto& s : r.trace.steps()) binds += s.rule == Rule::anaphor_bind;
  EXPECT_EQ(binds, 2);
  EXPECT_TRUE(r.trace.is_chained());
}

TEST(ResolveDiscourse, TripIsRetracted) {
  Discourse d;
  d.sentences = {parse_lf("E1 jon:human . E1 e:trip^a . PLAN(jon:human, e:event^a)"),
                 parse_lf("E1 it:thing^a . LENGTHY(it:event)")};
  d.slots = {{1, "it", TypeTerm("event"), false, {"human"}}};
  auto r = resolve_discourse(H(), R(), d);
  EXPECT_EQ(normal(r.result),
            normal("E1 jon:human . E1 e:trip . PLAN(jon,e) & LENGTHY(e)"));
  bool retract = false;
  for (const auto& s : r.trace.steps()) retract = retract || s.rule == Rule::retract;
  EXPECT_TRUE(retract);
}

TEST(ResolveDiscourse, CardinalityPicksTheBridge) {
  Discourse d;
  d.sentences = {parse_lf("E c:car . true"),
                 parse_lf("E they:human^a:1+ . E me:human:1 . "
                          "ANNOYING(they:human, me:human)")};
  d.slots = {{1, "they", TypeTerm("human", ExistenceMode::abstract, Cardinality::many),
              false, {}}};
  auto r = resolve_discourse(H(), R(), d);
  EXPECT_EQ(normal(r.result),
            normal("E they:human:1+ . E c:car . E me:human:1 . RIDING(they,c) & "
                   "ANNOYING(they,me)"));
}

TEST(ResolveDiscourse, NoSlotsMatchesResolveScope) {
  Discourse d{{parse_lf("E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)")}, {}};
  EXPECT_EQ(normal(resolve_discourse(H(), R(), d).result),
            normal("E1 sheba:human . THIEF(sheba)"));
}

TEST(ResolveDiscourse, PronounWithoutAntecedent) {
  Discourse d;
  d.sentences = {parse_lf("E1 x:temperature . VALUE(x,90)"),
                 parse_lf("E1 he:human^a . FAMOUS(he:human)")};
  d.slots = {{1, "he", TypeTerm("human"), false, {}}};
  EXPECT_THROW(resolve_discourse(H(), R(), d), ResolutionError);
}

TEST(ResolveDiscourse, OptionalSlotMayIntroduce) {
  Discourse d;
  d.sentences = {parse_lf("E1 x:temperature . VALUE(x,90)"),
                 parse_lf("E1 t:book . P(t)")};
  d.slots = {{1, "t", TypeTerm("book"), true, {}}};
  auto r = resolve_discourse(H(), R(), d);
  EXPECT_EQ(normal(r.result), normal("E1 x:temperature . E1 t:book . VALUE(x,90) & P(t)"));
}

const char* kRule =
    "A a:activity . A x:human^a . EXERCISING(a) & AGENT(a,x) -> "
    "(E1 p:property . WISDOM(p) & has(x,p))";

TEST(ModusPonens, JonIsWise) {
  auto out = apply_modus_ponens(
      H(), parse_lf(kRule),
      parse_lf("E1 jon:human . E1 act:activity . EXERCISING(act) & AGENT(act,jon)"));
  ASSERT_TRUE(out);
  EXPECT_EQ(normal(*out), normal("E1 jon:human . E1 p:property . WISDOM(p) & has(jon,p)"));
}

TEST(ModusPonens, NoMatch) {
  EXPECT_FALSE(apply_modus_ponens(
      H(), parse_lf(kRule),
      parse_lf("E1 jon:human . E1 act:activity . DANCING(act) & AGENT(act,jon)")));
  // Rule variables range over their types only.
  EXPECT_FALSE(apply_modus_ponens(
      H(), parse_lf(kRule),
      parse_lf("E1 d:dog . E1 act:activity . EXERCISING(act) & AGENT(act,d)")));
}

TEST(ModusPonens, RuleMustBeAnImplication) {
  EXPECT_THROW(apply_modus_ponens(H(), parse_lf("A x . P(x)"), parse_lf("E y . P(y)")),
               ResolutionError);
  EXPECT_THROW(apply_modus_ponens(H(), parse_lf("E x . P(x) -> Q(x)"),
                                  parse_lf("E y . P(y)")),
               ResolutionError);
}

}  // namespace
}  // namespace ontosem
