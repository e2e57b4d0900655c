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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ontosem/definitions.hpp"
#include "ontosem/formula.hpp"
#include "ontosem/hierarchy.hpp"
#include "ontosem/type_term.hpp"

namespace ontosem {

// A domain element: its most specific type and whether it actually exists.
struct Individual {
  std::string type;
  ExistenceMode mode = ExistenceMode::actual;
  friend bool operator==(const Individual&, const Individual&) = default;
  friend auto operator<=>(const Individual&, const Individual&) = default;
};

// Predicate keys and argument types. An atom's key is its name with the
// constant arguments kept and the variable ones blanked: VALUE(_,90).
// A modified atom OLD(DANCER(x)) has the key OLD.DANCER.
class Vocabulary {
 public:
  void declare(const std::string& key, std::vector<std::string> arg_types);
  // Declares each predicate of `f` not yet known, with `thing` arguments.
  void collect(const Formula& f);
  const std::map<std::string, std::vector<std::string>>& predicates() const {
    return preds_;
  }

 private:
  std::map<std::string, std::vector<std::string>> preds_;
};

std::string predicate_key(const Formula& atom_or_modified);

struct FiniteModel {
  std::vector<Individual> domain;
  std::map<std::string, std::set<std::vector<std::size_t>>> extensions;
};

// Every model over a fixed domain and vocabulary, one bit per tuple whose
// individuals fit the argument types.
class ModelSpace {
 public:
  static constexpr std::size_t kMaxDomain = 3;
  static constexpr std::size_t kMaxBits = 24;

  // Throws ModelError when the domain is empty or too large, or the
  // extensions need more than kMaxBits bits.
  ModelSpace(const TypeHierarchy& h, Vocabulary vocab,
             std::vector<Individual> domain);

  const TypeHierarchy& hierarchy() const { return *h_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<Individual>& domain() const { return domain_; }
  std::size_t bits() const { return bits_; }
  std::uint64_t size() const { return std::uint64_t{1} << bits_; }

  // Bit of `tuple` in predicate `key`, or -1 when the tuple is ineligible.
  int bit(const std::string& key, const std::vector<std::size_t>& tuple) const;

  FiniteModel model(std::uint32_t mask) const;
  // Throws ModelError on an unknown predicate, a wrong arity or an
  // ineligible tuple.
  std::uint32_t mask(const FiniteModel& m) const;

 private:
  friend class CompiledFormula;
  struct Table {
    std::size_t arity;
    std::vector<int> bits;  // by tuple index, base domain size
  };
  std::size_t index(const std::vector<std::size_t>& tuple) const;

  const TypeHierarchy* h_;
  Vocabulary vocab_;
  std::vector<Individual> domain_;
  std::map<std::string, Table> tables_;
  std::size_t bits_ = 0;
};

// A closed formula prepared for evaluation over every mask of one space.
// `be` is identity and typ(φ) is read as φ.
class CompiledFormula {
 public:
  // Throws ModelError on free variables, unknown predicates or arity
  // mismatches.
  CompiledFormula(const ModelSpace& space, const Formula& f);
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  bool holds(std::uint32_t mask) const;

  struct Impl;  // opaque

 private:
  std::unique_ptr<Impl> impl_;
};

// Classical satisfaction. ∃¹ means exactly one. A typed binder ranges over
// individuals of a subsumed type, and only over actual ones unless the
// type is abstract.
bool satisfies(const TypeHierarchy& h, const FiniteModel& m, const Formula& f);

// Calls `fn` once for every model over the vocabulary and domain.
void enumerate_models(const TypeHierarchy& h, const Vocabulary& vocab,
                      const std::vector<Individual>& domain,
                      const std::function<void(const FiniteModel&)>& fn);

// Domains of size 1..max_size drawn with repetition from `kinds`.
std::vector<std::vector<Individual>> enumerate_domains(
    const std::vector<Individual>& kinds, std::size_t max_size);

struct OracleOptions {
  std::vector<Individual> kinds;  // individual shapes to draw domains from
  std::size_t max_domain = ModelSpace::kMaxDomain;
  Vocabulary vocabulary;          // argument types; the rest default to thing
};

struct OracleResult {
  bool holds = true;
  std::uint64_t models = 0;    // models examined
  std::uint64_t relevant = 0;  // models satisfying the axioms
  std::string counterexample;
};

// a and b agree on every model that satisfies all axioms.
OracleResult check_equivalent(const TypeHierarchy& h, const Formula& a,
                              const Formula& b, const OracleOptions& options,
                              const std::vector<Formula>& axioms = {});

// Every model of the premises satisfies the conclusion.
OracleResult check_entails(const TypeHierarchy& h,
                           const std::vector<Formula>& premises,
                           const Formula& conclusion,
                           const OracleOptions& options);

// ∀params . HEAD(params) ≡ body, as a pair of implications. A modifier
// definition gives its head over a bare argument.
Formula definition_axiom(const ConceptDefinition& def);

std::string describe(const FiniteModel& m);

}  // namespace ontosem
