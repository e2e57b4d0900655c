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

#include <compare>
#include <string>
#include <string_view>

namespace ontosem {

enum class ExistenceMode { actual, abstract };

// `one` is the superscript 1, `many` is 1+.
enum class Cardinality { one, many, unconstrained };

// abstract iff both are abstract.
ExistenceMode unify_modes(ExistenceMode a, ExistenceMode b);

// Whether a declared cardinality admits a query cardinality:
// many >= many, many >= one, one >= one, and unconstrained on either side.
bool satisfies(Cardinality declared, Cardinality query);

// The more restrictive of the two (one < many < unconstrained).
Cardinality meet(Cardinality a, Cardinality b);

// A base type with its existence mode and cardinality constraint, written
// `human`, `dog^a`, `human:1+`, `entity^a:1`.
struct TypeTerm {
  std::string base;
  ExistenceMode mode = ExistenceMode::actual;
  Cardinality card = Cardinality::unconstrained;

  TypeTerm() = default;
  TypeTerm(std::string b, ExistenceMode m = ExistenceMode::actual,
           Cardinality c = Cardinality::unconstrained)
      : base(std::move(b)), mode(m), card(c) {}

  bool is_abstract() const { return mode == ExistenceMode::abstract; }

  friend bool operator==(const TypeTerm&, const TypeTerm&) = default;
  friend auto operator<=>(const TypeTerm&, const TypeTerm&) = default;
};

std::string to_string(ExistenceMode m);
std::string to_string(Cardinality c);
std::string to_string(const TypeTerm& t);

// Parses the textual form above. Throws ParseError.
TypeTerm parse_type_term(std::string_view text);

bool is_identifier_start(char c);
bool is_identifier_char(char c);

}  // namespace ontosem
