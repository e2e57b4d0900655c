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

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontosem/formula.hpp"
#include "ontosem/hierarchy.hpp"
#include "ontosem/salience.hpp"
#include "ontosem/type_term.hpp"

namespace ontosem {

enum class DefinitionKind {
  definition,     // `def`: always expanded
  decomposition,  // `decomp`: event decomposition used under negation only
  modifier,       // `mod`: stacked on a condensed concept, kept opaque
};

// A condensed predicate and the expanded template it stands for. The body
// quantifies over exactly one abstract object (activity, attribute, state,
// process or property) at its top level.
struct ConceptDefinition {
  std::string head;
  DefinitionKind kind = DefinitionKind::definition;
  std::vector<std::pair<std::string, TypeTerm>> params;
  Formula body;
};

class DefinitionSet {
 public:
  // Throws DefinitionError on a duplicate head, free variables outside the
  // parameters, or a body not headed by an abstract-object quantifier.
  void add(const TypeHierarchy& h, ConceptDefinition def);

  const ConceptDefinition* find(const std::string& head) const;
  const std::map<std::string, ConceptDefinition>& all() const { return defs_; }
  bool empty() const { return defs_.empty(); }

  // Lines: `def|decomp|mod NAME(p:type, ...) := <LF>`, `#` comments.
  static DefinitionSet load(const TypeHierarchy& h, std::istream& in);
  static DefinitionSet load_file(const TypeHierarchy& h,
                                 const std::filesystem::path& path);

 private:
  std::map<std::string, ConceptDefinition> defs_;
};

// Types whose descendants count as abstract objects.
bool is_abstract_category(const TypeHierarchy& h, const std::string& type);

// Replaces every application of a `def` head by its instantiated body. The
// body's quantifier moves out to the nearest enclosing conjunction. A
// modifier over a defined concept, OLD(DANCER(x)), expands the concept and
// adds the conjunct (OLD(a) | OLD(x)) over its abstract object.
Formula expand(const DefinitionSet& defs, const Formula& f);

// Pushes negation through decomposable predicates:
//   ~P(x, y)  with  P := E a . C1 & ... & Cn
// becomes A a . C1 -> ~C2 | ... | ~Cn. A negated universal of that shape
// turns back into the existential, so double negation restores the body.
// Throws DefinitionError when the definition does not start with a plain
// existential over a conjunction.
Formula expand_negated(const DefinitionSet& defs, const Formula& f);

// Splits each disjunction that sits in a positive conjunctive position
// into separate readings.
std::vector<Formula> enumerate_readings(const Formula& f);

// How `x is y` links its two sides.
struct CopulaReading {
  enum class Kind { identity, relation };
  Kind kind = Kind::identity;
  std::string relation;             // for Kind::relation
  bool complement_is_subject = false;  // AGENT(act, jon) puts the complement first
};

// Identity when either type subsumes the other or the complement is untyped.
// Otherwise the complement's category decides: property -> has,
// state -> in, process -> gt, activity -> the most salient relation between
// the activity and the subject type, falling back to do.
// Returns nullopt when none applies.
std::optional<CopulaReading> copula_reading(
    const TypeHierarchy& h, const SalienceRegistry& reg,
    const TypeTerm& subject, const std::optional<TypeTerm>& complement);

// One side of a copula sentence: a bound variable, its type, its quantifier
// and the restriction the noun phrase contributes (RISING(p), VALUE(y,90)).
struct CopulaSide {
  std::string var;
  TypeTerm type;
  Quantifier quantifier = Quantifier::exists_unique;
  Formula restriction;
};

// Builds the resolved form of `subject is complement`. For identity the two
// variables merge into the subject at the unified type; otherwise the
// chosen relation links them. Throws UnificationError when no reading
// applies.
Formula interpret_copula(const TypeHierarchy& h, const SalienceRegistry& reg,
                         const CopulaSide& subject,
                         const CopulaSide& complement);

}  // namespace ontosem
