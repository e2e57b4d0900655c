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

#include <sstream>
#include <string>

#include "ontosem/hierarchy.hpp"
#include "ontosem/lexicon.hpp"
#include "ontosem/lf.hpp"
#include "ontosem/salience.hpp"
#include "ontosem/session.hpp"

namespace ontosem::test {

inline const KnowledgeBase& default_kb() {
  static const KnowledgeBase kb = load_default_knowledge_base();
  return kb;
}

inline const TypeHierarchy& ontology() { return default_kb().hierarchy; }

// The small relation table over humans, cars and artifacts.
inline const SalienceRegistry& cardinality() {
  static const Lexicon lex =
      Lexicon::load_file(ontology(), default_data_dir() / "cardinality.lex");
  return lex.salience();
}

inline TypeHierarchy hierarchy_from(const std::string& text) {
  std::istringstream in(text);
  return TypeHierarchy::load(in);
}

inline SalienceRegistry registry_from(const TypeHierarchy& h,
                                      const std::string& text) {
  std::istringstream in(text);
  return SalienceRegistry::load(h, in);
}

inline std::string ascii(const Formula& f) { return to_string(f); }

inline std::string normal(const Formula& f) {
  return to_string(alpha_normalize(f));
}

inline std::string normal(const std::string& lf) {
  return normal(parse_lf(lf));
}

}  // namespace ontosem::test

#include <random>

namespace ontosem::test {

// Random well-formed formulas over a small vocabulary. Variables are drawn
// from a pool of four names so that binders shadow and capture each other.
class FormulaGen {
 public:
  explicit FormulaGen(std::uint32_t seed) : rng_(seed) {}

  Formula formula(int depth) {
    if (depth <= 0) return atom();
    switch (pick(8)) {
      case 0:
      case 1:
        return atom();
      case 2:
        return make_not(formula(depth - 1));
      case 3:
        return make_and({formula(depth - 1), formula(depth - 1)});
      case 4:
        return make_or({formula(depth - 1), formula(depth - 1)});
      case 5:
        return make_implies(formula(depth - 1), formula(depth - 1));
      case 6:
        return make_typical(atom());
      default:
        return quantified(depth);
    }
  }

  // Every variable bound.
  Formula closed(int depth) {
    Formula f = formula(depth);
    for (const auto& v : free_vars(f)) {
      f = make_quantified(Quantifier::exists, v, {type()}, f);
    }
    return f;
  }

  TypeTerm type() {
    static const char* bases[] = {"thing", "human", "dog", "entity", "event"};
    TypeTerm t(bases[pick(5)]);
    if (pick(3) == 0) t.mode = ExistenceMode::abstract;
    if (pick(4) == 0) t.card = pick(2) ? Cardinality::one : Cardinality::many;
    return t;
  }

  std::string var() {
    static const char* vars[] = {"x", "y", "z", "w"};
    return vars[pick(4)];
  }

  std::size_t pick(std::size_t n) { return rng_() % n; }

 private:
  Formula atom() {
    switch (pick(6)) {
      case 0:
        return make_atom("P", {argument()});
      case 1:
        return make_atom("R", {argument(), argument()});
      case 2:
        return make_atom("has", {arg(var()), arg(var())});
      case 3:
        return make_atom("VALUE", {arg(var()), Argument{Term::number("90"), {}}});
      case 4:
        return make_modified("OLD", make_atom("DANCER", {arg(var())}));
      default:
        return make_atom("be", {arg(var()), arg(var())});
    }
  }

  Argument argument() {
    if (pick(3) == 0) return arg(var(), type());
    return arg(var());
  }

  Formula quantified(int depth) {
    static const Quantifier qs[] = {Quantifier::exists,
                                    Quantifier::exists_unique,
                                    Quantifier::forall};
    std::vector<TypeTerm> types;
    std::size_t n = pick(4);  // 0 untyped, 3 a pending pair
    if (n == 1 || n == 2) types.push_back(type());
    if (n == 3) types = {type(), type()};
    return make_quantified(qs[pick(3)], var(), types, formula(depth - 1));
  }

  std::mt19937 rng_;
};

}  // namespace ontosem::test
