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

#include <optional>
#include <string>
#include <vector>

#include "ontosem/formula.hpp"
#include "ontosem/hierarchy.hpp"
#include "ontosem/salience.hpp"
#include "ontosem/trace.hpp"

namespace ontosem {

struct Resolution {
  Formula result;
  DerivationTrace trace;
};

// Reduces every be(x, y) through the copula table, then folds each
// variable's type obligations left to right:
//   - a Single outcome retypes the binder;
//   - a Bridged outcome keeps the variable at its own type, introduces a
//     fresh variable of the demanded type right after it (same quantifier),
//     moves the demanding occurrence onto it, and adds the salient relation
//     to the matrix (to the antecedent under a universal);
//   - a Failure throws UnificationError.
// Signatures are gone from the result, and resolving it again is a no-op.
Resolution resolve_scope(const TypeHierarchy& h, const SalienceRegistry& reg,
                         const Formula& f);

// A variable of a later sentence that refers back: a pronoun, or a definite
// noun phrase / repeated name that may also introduce a new referent.
struct PronounSlot {
  std::size_t sentence = 0;
  std::string var;
  TypeTerm constraint;    // type and cardinality demanded at its position
  bool optional = false;  // definites: unbound when nothing matches
  std::vector<std::string> excludes;  // antecedent types ruled out ("it": human)
};

struct Discourse {
  std::vector<Formula> sentences;
  std::vector<PronounSlot> slots;
};

// Merges the sentences, binds each slot to the nearest earlier binder whose
// individually resolved type unifies with the constraint to a Single (and
// whose cardinality admits it), falling back to the nearest Bridged
// candidate for pronouns, and resolves the merged formula. Binders that
// were abstract on their own and become actual are reported as `retract`.
// Throws ResolutionError when a pronoun has no admissible antecedent.
Resolution resolve_discourse(const TypeHierarchy& h,
                             const SalienceRegistry& reg, const Discourse& d);

// Matches the antecedent of a universally quantified implication against
// the conjuncts of `fact` and returns the instantiated consequent under the
// fact's binders for the variables it mentions. A rule variable matches a
// fact variable when its type subsumes the fact's and it is abstract or the
// fact's binder is actual. Throws ResolutionError when `rule` has the wrong
// shape.
std::optional<Formula> apply_modus_ponens(const TypeHierarchy& h,
                                          const Formula& rule,
                                          const Formula& fact);

}  // namespace ontosem
