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
#include <set>
#include <string>
#include <vector>

#include "ontosem/formula.hpp"
#include "ontosem/hierarchy.hpp"
#include "ontosem/salience.hpp"
#include "ontosem/type_term.hpp"

namespace ontosem {

// A proper noun: `name das_kapital book` binds the constant dasKapital.
struct NameEntry {
  std::string constant;
  TypeTerm type;
};

// A predicate with one signature per argument: role nouns (THIEF),
// adjectives (LENGTHY) and modifiers (OLD).
struct PredicateEntry {
  std::string predicate;
  TypeTerm signature;
};

// A noun naming an abstract object: gerunds (aging) and mass nouns (fame).
// Generic kinds read `K is Adj` as a universal (every exercising is wise).
struct KindEntry {
  TypeTerm type;
  std::string predicate;
  bool generic = false;
};

struct VerbEntry {
  std::string predicate;
  TypeTerm subject;
  TypeTerm object;
};

struct PronounEntry {
  Quantifier quantifier = Quantifier::exists_unique;
  TypeTerm type;
  bool anaphoric = true;
  std::vector<std::string> excludes;
};

// `his` in `his own dog`: REL(subject, noun).
struct PossessiveEntry {
  std::string relation;
  TypeTerm owner;
  TypeTerm owned;
};

// `N is 90`: ∃¹y::type . PRED(y, 90).
struct ValueEntry {
  std::string predicate;
  TypeTerm type;
};

// Word-level lexicon for the sentence templates plus the salience
// declarations (`prop`, `rel`) that live in the same file. Multiword
// entries are written with underscores (`ham_sandwich`, `agree_with`).
class Lexicon {
 public:
  const NameEntry* name(const std::string& w) const { return get(names_, w); }
  const TypeTerm* noun(const std::string& w) const { return get(nouns_, w); }
  const PredicateEntry* role(const std::string& w) const { return get(roles_, w); }
  const PredicateEntry* adjective(const std::string& w) const {
    return get(adjectives_, w);
  }
  const PredicateEntry* modifier(const std::string& w) const {
    return get(modifiers_, w);
  }
  const KindEntry* kind(const std::string& w) const { return get(kinds_, w); }
  const VerbEntry* verb(const std::string& w) const { return get(verbs_, w); }
  const PronounEntry* pronoun(const std::string& w) const {
    return get(pronouns_, w);
  }
  const PossessiveEntry* possessive(const std::string& w) const {
    return get(possessives_, w);
  }
  const Quantifier* determiner(const std::string& w) const {
    return get(determiners_, w);
  }
  const std::optional<ValueEntry>& value() const { return value_; }
  bool skipped(const std::string& w) const { return skip_.count(w) > 0; }

  // True when `w` appears in any word category.
  bool known(const std::string& w) const;

  // Every type mentioned by a word entry.
  std::vector<TypeTerm> types() const;

  const SalienceRegistry& salience() const { return salience_; }

  // Directives, one per line, `#` comments:
  //   name <word> <type>             noun <word> <type>
  //   role <word> <PRED> <type>      adj <word> <PRED> <type>
  //   mod <word> <PRED> <type>       kind <word> <type> <PRED> [generic]
  //   verb <word> <PRED> <type> <type>
  //   pron <word> E|E1|A <type> anaphoric|deictic [-<type> ...]
  //   poss <word> <REL> <type> <type>
  //   value <PRED> <type>            det <word> E|E1|A
  //   skip <word>...                 prop ...  rel ...  (salience)
  // Throws ParseError with the line number on malformed input.
  static Lexicon load(const TypeHierarchy& h, std::istream& in);
  static Lexicon load_file(const TypeHierarchy& h,
                           const std::filesystem::path& path);

 private:
  template <typename T>
  static const T* get(const std::map<std::string, T>& m, const std::string& w) {
    auto it = m.find(w);
    return it == m.end() ? nullptr : &it->second;
  }

  std::map<std::string, NameEntry> names_;
  std::map<std::string, TypeTerm> nouns_;
  std::map<std::string, PredicateEntry> roles_;
  std::map<std::string, PredicateEntry> adjectives_;
  std::map<std::string, PredicateEntry> modifiers_;
  std::map<std::string, KindEntry> kinds_;
  std::map<std::string, VerbEntry> verbs_;
  std::map<std::string, PronounEntry> pronouns_;
  std::map<std::string, PossessiveEntry> possessives_;
  std::map<std::string, Quantifier> determiners_;
  std::optional<ValueEntry> value_;
  std::set<std::string> skip_;
  SalienceRegistry salience_;
};

// `das_kapital` -> `dasKapital`.
std::string camel_case(const std::string& word);

}  // namespace ontosem
