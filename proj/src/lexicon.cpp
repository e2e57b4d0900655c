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

#include "ontosem/lexicon.hpp"

#include <cctype>
#include <fstream>

#include "ontosem/error.hpp"
#include "text_util.hpp"

namespace ontosem {

namespace {

Quantifier parse_quantifier(const std::string& s) {
  if (s == "E") return Quantifier::exists;
  if (s == "E1") return Quantifier::exists_unique;
  if (s == "A") return Quantifier::forall;
  throw ParseError("expected E, E1 or A, got '" + s + "'");
}

template <typename T>
void insert_unique(std::map<std::string, T>& m, const std::string& word,
                   T value, const char* what) {
  if (!m.emplace(word, std::move(value)).second) {
    throw ParseError(std::string("duplicate ") + what + " '" + word + "'");
  }
}

}  // namespace

std::string camel_case(const std::string& word) {
  std::string out;
  bool upper = false;
  for (char c : word) {
    if (c == '_') {
      upper = true;
      continue;
    }
    out += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                 : c;
    upper = false;
  }
  return out;
}

bool Lexicon::known(const std::string& w) const {
  return names_.count(w) || nouns_.count(w) || roles_.count(w) ||
         adjectives_.count(w) || modifiers_.count(w) || kinds_.count(w) ||
         verbs_.count(w) || pronouns_.count(w) || possessives_.count(w) ||
         determiners_.count(w) || skip_.count(w);
}

std::vector<TypeTerm> Lexicon::types() const {
  std::vector<TypeTerm> out;
  for (const auto& [w, e] : names_) out.push_back(e.type);
  for (const auto& [w, t] : nouns_) out.push_back(t);
  for (const auto& [w, e] : roles_) out.push_back(e.signature);
  for (const auto& [w, e] : adjectives_) out.push_back(e.signature);
  for (const auto& [w, e] : modifiers_) out.push_back(e.signature);
  for (const auto& [w, e] : kinds_) out.push_back(e.type);
  for (const auto& [w, e] : verbs_) {
    out.push_back(e.subject);
    out.push_back(e.object);
  }
  for (const auto& [w, e] : pronouns_) out.push_back(e.type);
  for (const auto& [w, e] : possessives_) {
    out.push_back(e.owner);
    out.push_back(e.owned);
  }
  if (value_) out.push_back(value_->type);
  return out;
}

Lexicon Lexicon::load(const TypeHierarchy& h, std::istream& in) {
  Lexicon lex;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto w = detail::split_words(detail::trim(detail::strip_comment(raw)));
    if (w.empty()) continue;
    const std::string& d = w[0];
    auto type = [&](const std::string& text) {
      TypeTerm t = parse_type_term(text);
      if (!h.contains(t.base)) throw UnknownTypeError(t.base);
      return t;
    };
    auto arity = [&](std::size_t n) {
      if (w.size() != n) {
        throw ParseError("'" + d + "' takes " + std::to_string(n - 1) +
                         " fields");
      }
    };
    try {
      if (d == "prop" || d == "rel") {
        lex.salience_.add_declaration(h, w, line);
      } else if (d == "name") {
        arity(3);
        insert_unique(lex.names_, w[1], NameEntry{camel_case(w[1]), type(w[2])},
                      "name");
      } else if (d == "noun") {
        arity(3);
        insert_unique(lex.nouns_, w[1], type(w[2]), "noun");
      } else if (d == "role" || d == "adj" || d == "mod") {
        arity(4);
        auto& m = d == "role" ? lex.roles_
                  : d == "adj" ? lex.adjectives_
                               : lex.modifiers_;
        insert_unique(m, w[1], PredicateEntry{w[2], type(w[3])}, d.c_str());
      } else if (d == "kind") {
        if (w.size() != 4 && !(w.size() == 5 && w[4] == "generic")) {
          throw ParseError("expected 'kind <word> <type> <PRED> [generic]'");
        }
        insert_unique(lex.kinds_, w[1],
                      KindEntry{type(w[2]), w[3], w.size() == 5}, "kind");
      } else if (d == "verb") {
        arity(5);
        insert_unique(lex.verbs_, w[1], VerbEntry{w[2], type(w[3]), type(w[4])},
                      "verb");
      } else if (d == "pron") {
        if (w.size() < 5 || (w[4] != "anaphoric" && w[4] != "deictic")) {
          throw ParseError(
              "expected 'pron <word> <E|E1|A> <type> anaphoric|deictic'");
        }
        PronounEntry e{parse_quantifier(w[2]), type(w[3]), w[4] == "anaphoric",
                       {}};
        for (std::size_t i = 5; i < w.size(); ++i) {
          if (w[i].size() < 2 || w[i][0] != '-') {
            throw ParseError("expected an exclusion '-<type>', got '" + w[i] +
                             "'");
          }
          e.excludes.push_back(type(w[i].substr(1)).base);
        }
        insert_unique(lex.pronouns_, w[1], std::move(e), "pronoun");
      } else if (d == "poss") {
        arity(5);
        insert_unique(lex.possessives_, w[1],
                      PossessiveEntry{w[2], type(w[3]), type(w[4])},
                      "possessive");
      } else if (d == "value") {
        arity(3);
        if (lex.value_) throw ParseError("duplicate value entry");
        lex.value_ = ValueEntry{w[1], type(w[2])};
      } else if (d == "det") {
        arity(3);
        insert_unique(lex.determiners_, w[1], parse_quantifier(w[2]),
                      "determiner");
      } else if (d == "skip") {
        if (w.size() < 2) throw ParseError("'skip' needs at least one word");
        lex.skip_.insert(w.begin() + 1, w.end());
      } else {
        throw ParseError("unknown directive '" + d + "'");
      }
    } catch (const ParseError& e) {
      if (d == "prop" || d == "rel") throw;
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
    } catch (const UnknownTypeError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
    }
  }
  return lex;
}

Lexicon Lexicon::load_file(const TypeHierarchy& h,
                           const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file " + path.string());
  return load(h, in);
}

}  // namespace ontosem
