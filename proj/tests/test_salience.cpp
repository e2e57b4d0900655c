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

#include <random>
#include <sstream>

#include "ontosem/error.hpp"
#include "test_support.hpp"

namespace ontosem {
namespace {

using test::cardinality;
using test::ontology;
using test::registry_from;

std::vector<std::string> names(const std::vector<RelationSignature>& sigs) {
  std::vector<std::string> out;
  for (const auto& s : sigs) out.push_back(s.rel);
  return out;
}

TEST(Lpap, DeclaredOrderForExactType) {
  auto l = cardinality().lpap(ontology(), "human");
  ASSERT_FALSE(l.empty());
  EXPECT_EQ(l.front(), "ARTICULATE");
  EXPECT_TRUE(cardinality().lpap(ontology(), "beer").empty());
  EXPECT_THROW(cardinality().lpap(ontology(), "wombat"), UnknownTypeError);
}

TEST(Lpap, MatchesAShuffledFixture) {
  const auto& h = ontology();
  std::vector<std::string> types = {"human", "dog", "car", "book"};
  std::mt19937 rng(11);
  std::map<std::string, std::vector<std::string>> expected;
  std::ostringstream text;
  for (int i = 0; i < 20; ++i) {
    const auto& t = types[rng() % types.size()];
    std::string p = "P" + std::to_string(i);
    expected[t].push_back(p);
    text << "prop " << p << " " << t << "\n";
  }
  auto reg = registry_from(h, text.str());
  for (const auto& t : types) EXPECT_EQ(reg.lpap(h, t), expected[t]) << t;
}

TEST(LpapStar, AscendsToBelowThing) {
  const auto& h = ontology();
  auto star = cardinality().lpap_star(h, "human");
  // human, mammal, animal, living, physical, entity
  ASSERT_EQ(star.size(), 6u);
  EXPECT_EQ(star[0], std::vector<std::string>{"ARTICULATE"});
  EXPECT_EQ(star[2], std::vector<std::string>{"HUNGRY"});
  EXPECT_EQ(star[4], std::vector<std::string>{"HEAVY"});
  EXPECT_EQ(star[5], std::vector<std::string>{"OLD"});
  EXPECT_TRUE(cardinality().lpap_star(h, "thing").empty());
}

TEST(Lraps, ExactPairInOrder) {
  const auto& h = ontology();
  auto l = cardinality().lraps(h, "human", "car");
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0].rel, "DRIVE");
  EXPECT_EQ(l[0].subject.card, Cardinality::one);
  EXPECT_EQ(l[0].object.card, Cardinality::one);
  EXPECT_EQ(l[1].rel, "RIDE");
  EXPECT_EQ(l[1].subject.card, Cardinality::many);
  EXPECT_TRUE(cardinality().lraps(h, "car", "human").empty());
  EXPECT_EQ(to_string(l[1]), "<RIDE,1+,1>");
}

TEST(LrapsStar, AscendsTheObjectOnly) {
  const auto& h = ontology();
  auto star = cardinality().lraps_star(h, "human", "car");
  // car, artifact, physical, entity
  ASSERT_EQ(star.size(), h.depth("car"));
  EXPECT_EQ(names(star[0]), (std::vector<std::string>{"DRIVE", "RIDE"}));
  EXPECT_EQ(names(star[1]), (std::vector<std::string>{"MAKE", "DESIGN"}));
  EXPECT_TRUE(cardinality().lraps_star(h, "human", "thing").empty());
  // The subject is never generalized.
  for (const auto& level : cardinality().lraps_star(h, "mammal", "car")) {
    EXPECT_TRUE(level.empty());
  }
}

TEST(Msr, CardinalityExamples) {
  const auto& h = ontology();
  using C = Cardinality;
  EXPECT_EQ(cardinality().msr(h, "human", C::one, "car", C::one)->rel, "DRIVE");
  EXPECT_EQ(cardinality().msr(h, "human", C::many, "car", C::one)->rel, "RIDE");
  EXPECT_EQ(cardinality().msr(h, "human", C::unconstrained, "book", C::unconstrained)->rel,
            "MAKE");
  EXPECT_FALSE(SalienceRegistry{}.msr(h, "human", C::one, "car", C::one));
  EXPECT_FALSE(cardinality().msr(h, "dog", C::one, "car", C::one));
}

TEST(Msr, EatIsMostSalientForSandwiches) {
  const auto& kb = test::default_kb();
  using C = Cardinality;
  EXPECT_EQ(kb.salience().msr(kb.hierarchy, "human", C::unconstrained,
                              "sandwich", C::unconstrained)->rel,
            "EAT");
  EXPECT_EQ(kb.salience().msr(kb.hierarchy, "human", C::unconstrained,
                              "hamSandwich", C::unconstrained)->rel,
            "EAT");
}

TEST(Msr, HeadRemovalPromotesTheNext) {
  SalienceRegistry reg = cardinality();
  ASSERT_TRUE(reg.remove_relation("human", "car", "DRIVE"));
  EXPECT_FALSE(reg.remove_relation("human", "car", "DRIVE"));
  EXPECT_EQ(reg.msr(ontology(), "human", Cardinality::one, "car",
                    Cardinality::one)->rel,
            "RIDE");
}

TEST(Registry, DeclarationsOnThingAreDroppedWithAWarning) {
  const auto& h = ontology();
  auto reg = registry_from(h, "prop REAL thing\nrel NEAR human thing\nprop TALL human\n");
  EXPECT_EQ(reg.warnings().size(), 2u);
  EXPECT_TRUE(reg.lpap(h, "thing").empty());
  EXPECT_EQ(reg.lpap(h, "human"), std::vector<std::string>{"TALL"});
}

TEST(Registry, RejectsMalformedLines) {
  const auto& h = ontology();
  EXPECT_THROW(registry_from(h, "rel DRIVE human\n"), ParseError);
  EXPECT_THROW(registry_from(h, "prop TALL wombat\n"), RegistryError);
  EXPECT_THROW(registry_from(h, "rel DRIVE human:2 car\n"), ParseError);
  EXPECT_THROW(registry_from(h, "rel DRIVE human car\nrel DRIVE human car\n"),
               RegistryError);
}

}  // namespace
}  // namespace ontosem
