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
#include <vector>

#include "ontosem/lexicon.hpp"
#include "ontosem/resolve.hpp"

namespace ontosem {

// Sentence templates of the controlled fragment. "PN" stands for any
// proper noun or pronoun subject.
enum class SentencePattern {
  pn_is_a_n,           // sheba is a thief
  pn_is_adj,           // liz is famous, it was lengthy
  pn_is_adj_n,         // sheba is an old dancer
  pn_v_det_n,          // jon painted a dog
  pn_not_v_det_n,      // jon did not paint a dog
  det_n_v_det_n,       // the ham sandwich wants another beer
  pn_v_posspron_n,     // jon painted his own dog
  gerund_is_adj,       // aging is inevitable, exercising is wise
  pn_is_gerund,        // jon is aging, the temperature is rising
  the_n_is_value,      // the temperature is 90
  imperative_v_det_n,  // pass that car, will you
  pn_v_det_n_and_then_pron_v_pron,  // jon read a book and then he burned it
  discourse,           // several sentences
};

std::string to_string(SentencePattern p);

struct ParsedText {
  Discourse discourse;                   // one formula per clause
  std::vector<SentencePattern> clauses;  // template of each clause
  SentencePattern pattern = SentencePattern::discourse;
  bool single() const { return discourse.sentences.size() == 1; }
};

// Parses one or more sentences of the fragment into condensed forms.
// Proper nouns bind a constant of their lexical type (∃¹), definites and
// names get ∃¹, indefinites ∃, and predicate arguments carry their lexical
// signatures. A noun is abstract when any of its argument positions is.
// Sentences split at `.`, `!` and `?`; clauses at `and then` and `but`.
// Anaphoric pronouns and later definites become slots.
// Throws ParseError on an unknown word or when no template matches.
ParsedText parse_text(const Lexicon& lex, std::string_view text);

// Parses each element as its own sentence of one discourse.
ParsedText parse_discourse(const Lexicon& lex,
                           const std::vector<std::string>& sentences);

}  // namespace ontosem
