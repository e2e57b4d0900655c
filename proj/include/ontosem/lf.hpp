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
#include <string_view>

#include "ontosem/formula.hpp"

namespace ontosem {

// Textual logical forms.
//
//   formula  := disj ('->' formula)?
//   disj     := conj ('|' conj)*
//   conj     := unary ('&' unary)*
//   unary    := '~' unary
//             | QUANT var [':' types] '.' formula
//             | 'typ' '(' formula ')'
//             | 'true'
//             | NAME '(' NAME '(' args ')' ')'      modifier over a predicate
//             | NAME '(' args ')'
//             | '(' formula ')'
//   QUANT    := 'E' | 'E1' | 'A'
//   types    := type ('*' type)*                   pending unification
//   type     := NAME ['^a'] [':1' | ':1+']
//   args     := arg (',' arg)*
//   arg      := var [':' type] | number | '"' label '"'
//
// A quantifier body extends as far right as possible. The unicode forms
// ∃ ∃¹ ∀ ¬ ∧ ∨ ⊃ • are accepted wherever their ASCII spelling is.
enum class Syntax { ascii, unicode };

Formula parse_lf(std::string_view text);

std::string to_string(const Formula& f, Syntax syntax = Syntax::ascii);

// Canonical form used for comparison: runs of adjacent plain-∃ (or ∀)
// binders are ordered by first use in their body, then bound variables are
// renamed v1, v2, ... in binder order. Unique-existence runs keep their
// order since they do not commute.
Formula alpha_normalize(const Formula& f);

// Structural equality after alpha_normalize on both sides.
bool alpha_equivalent(const Formula& a, const Formula& b);

}  // namespace ontosem
