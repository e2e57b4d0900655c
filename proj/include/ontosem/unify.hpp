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

#include <string>
#include <variant>

#include "ontosem/hierarchy.hpp"
#include "ontosem/salience.hpp"
#include "ontosem/type_term.hpp"

namespace ontosem {

// One side subsumes the other: the more specific base, modes combined, the
// tighter cardinality.
struct Single {
  TypeTerm result;
  friend bool operator==(const Single&, const Single&) = default;
};

// No subsumption, but a salient relation links the two types. Each side
// keeps its own base, mode and cardinality. `subject_is_left` records which
// side fills the relation's subject position.
struct Bridged {
  TypeTerm left;
  TypeTerm right;
  RelationSignature relation;
  bool subject_is_left = true;
  friend bool operator==(const Bridged&, const Bridged&) = default;
};

struct Failure {
  friend bool operator==(const Failure&, const Failure&) = default;
};

using UnifyOutcome = std::variant<Single, Bridged, Failure>;

// Type unification (s . t). Throws UnknownTypeError for an undeclared base.
//
// The salient-relation lookup tries the lexicographically smaller base as
// subject first, so unify(a, b) and unify(b, a) agree up to swapping the
// Bridged sides.
UnifyOutcome unify(const TypeHierarchy& h, const SalienceRegistry& reg,
                   const TypeTerm& a, const TypeTerm& b);

// Swaps the sides of a Bridged outcome; other outcomes are returned as is.
UnifyOutcome swap_sides(const UnifyOutcome& o);

// `Single(dog)`, `Bridged(book, content, CONTAINS)`, `Failure`.
std::string to_string(const UnifyOutcome& o);

}  // namespace ontosem
