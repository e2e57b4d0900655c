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

#include "ontosem/type_term.hpp"

#include <cctype>

#include "ontosem/error.hpp"

namespace ontosem {

ExistenceMode unify_modes(ExistenceMode a, ExistenceMode b) {
  return (a == ExistenceMode::abstract && b == ExistenceMode::abstract)
             ? ExistenceMode::abstract
             : ExistenceMode::actual;
}

bool satisfies(Cardinality declared, Cardinality query) {
  if (declared == Cardinality::unconstrained ||
      query == Cardinality::unconstrained) {
    return true;
  }
  // one >= many is the only failing combination.
  return !(declared == Cardinality::one && query == Cardinality::many);
}

Cardinality meet(Cardinality a, Cardinality b) {
  auto rank = [](Cardinality c) {
    switch (c) {
      case Cardinality::one: return 0;
      case Cardinality::many: return 1;
      case Cardinality::unconstrained: return 2;
    }
    return 2;
  };
  return rank(a) <= rank(b) ? a : b;
}

std::string to_string(ExistenceMode m) {
  return m == ExistenceMode::abstract ? "abstract" : "actual";
}

std::string to_string(Cardinality c) {
  switch (c) {
    case Cardinality::one: return "1";
    case Cardinality::many: return "1+";
    case Cardinality::unconstrained: return "";
  }
  return "";
}

std::string to_string(const TypeTerm& t) {
  std::string out = t.base;
  if (t.is_abstract()) out += "^a";
  if (t.card != Cardinality::unconstrained) out += ":" + to_string(t.card);
  return out;
}

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

TypeTerm parse_type_term(std::string_view text) {
  std::size_t i = 0;
  if (text.empty() || !is_identifier_start(text[0])) {
    throw ParseError("expected type name in '" + std::string(text) + "'", 0);
  }
  while (i < text.size() && is_identifier_char(text[i])) ++i;
  TypeTerm t{std::string(text.substr(0, i))};
  if (text.substr(i, 2) == "^a") {
    t.mode = ExistenceMode::abstract;
    i += 2;
  }
  if (i < text.size() && text[i] == ':') {
    auto rest = text.substr(i + 1);
    if (rest == "1") {
      t.card = Cardinality::one;
    } else if (rest == "1+") {
      t.card = Cardinality::many;
    } else {
      throw ParseError("bad cardinality '" + std::string(rest) + "'", i + 1);
    }
    i = text.size();
  }
  if (i != text.size()) {
    throw ParseError("trailing characters in type '" + std::string(text) + "'",
                     i);
  }
  return t;
}

}  // namespace ontosem
