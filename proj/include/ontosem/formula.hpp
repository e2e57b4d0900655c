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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontosem/type_term.hpp"

namespace ontosem {

enum class Quantifier { exists, exists_unique, forall };

// A term in argument position: a variable (or named individual), a numeric
// value such as 90, or a quoted label such as "sheba".
struct Term {
  enum class Kind { variable, number, label };
  Kind kind = Kind::variable;
  std::string text;

  static Term var(std::string name) { return {Kind::variable, std::move(name)}; }
  static Term number(std::string v) { return {Kind::number, std::move(v)}; }
  static Term label(std::string v) { return {Kind::label, std::move(v)}; }
  bool is_var() const { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

// An argument carries the type the lexicon entry demands at that position,
// e.g. the `human` of THIEF(x :: human). Resolved forms drop signatures.
struct Argument {
  Term term;
  std::optional<TypeTerm> signature;
  friend bool operator==(const Argument&, const Argument&) = default;
};

struct Quantified;
struct Atom;
struct Modified;
struct Not;
struct And;
struct Or;
struct Implies;
struct Typical;

using Node =
    std::variant<Quantified, Atom, Modified, Not, And, Or, Implies, Typical>;

// Immutable logical-form tree with value semantics; copies share structure.
class Formula {
 public:
  Formula();  // the empty conjunction, `true`
  explicit Formula(Node node);

  const Node& node() const;

  template <typename T>
  const T* as() const;
  template <typename T>
  bool is() const;
  bool is_true() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Quantified {
  Quantifier quantifier = Quantifier::exists;
  std::string var;
  // Empty when untyped. Several entries stand for a pending unification
  // (s . t) that resolution has not yet folded.
  std::vector<TypeTerm> types;
  Formula body;
  friend bool operator==(const Quantified&, const Quantified&) = default;
};

struct Atom {
  std::string name;
  std::vector<Argument> args;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A modifier stacked on a condensed concept: OLD(DANCER(x)).
struct Modified {
  std::string modifier;
  Formula inner;  // always an Atom
  friend bool operator==(const Modified&, const Modified&) = default;
};

struct Not {
  Formula operand;
  friend bool operator==(const Not&, const Not&) = default;
};

struct And {
  std::vector<Formula> operands;  // flattened; empty means true
  friend bool operator==(const And&, const And&) = default;
};

struct Or {
  std::vector<Formula> operands;  // flattened, at least two
  friend bool operator==(const Or&, const Or&) = default;
};

struct Implies {
  Formula antecedent;
  Formula consequent;
  friend bool operator==(const Implies&, const Implies&) = default;
};

// The typicality wrapper typ(...). Uninterpreted.
struct Typical {
  Formula operand;
  friend bool operator==(const Typical&, const Typical&) = default;
};

inline const Node& Formula::node() const { return *node_; }

template <typename T>
const T* Formula::as() const {
  return std::get_if<T>(node_.get());
}

template <typename T>
bool Formula::is() const {
  return std::holds_alternative<T>(*node_);
}

enum class AtomKind { predicate, naming, identity, structural };

// NOO is naming, `be` is identity, lowercase has/in/do/gt/agent/theme are
// structural relations, everything else is a lexical predicate.
AtomKind atom_kind(std::string_view name);

// Constructors. make_and/make_or flatten nested operands of the same kind.
Formula make_atom(std::string name, std::vector<Argument> args);
Formula make_quantified(Quantifier q, std::string var,
                        std::vector<TypeTerm> types, Formula body);
Formula make_quantified(Quantifier q, std::string var, TypeTerm type,
                        Formula body);
Formula make_modified(std::string modifier, Formula inner);
Formula make_not(Formula f);
Formula make_and(std::vector<Formula> operands);
Formula make_or(std::vector<Formula> operands);
Formula make_implies(Formula a, Formula c);
Formula make_typical(Formula f);

Argument arg(std::string var);
Argument arg(std::string var, TypeTerm signature);

std::string to_string(Quantifier q);

// Free variables (names of variable terms not bound by an enclosing binder).
std::set<std::string> free_vars(const Formula& f);

// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);

// Renames free occurrences of `from` to `to`. Does not descend below a
// binder that rebinds `from`.
Formula rename_free(const Formula& f, const std::string& from,
                    const std::string& to);

// Removes the signature from every argument, or only from arguments that
// are the given variable.
Formula strip_signatures(const Formula& f);
Formula strip_signatures(const Formula& f, const std::string& var);

// Bottom-up rewrite: `fn` sees each node after its children were rewritten.
Formula transform(const Formula& f,
                  const std::function<Formula(const Formula&)>& fn);

// Pre-order visit of every node.
void visit(const Formula& f, const std::function<void(const Formula&)>& fn);

// Splits a prenex formula into its quantifier prefix and matrix.
struct Prenex {
  std::vector<Quantified> prefix;  // bodies are left empty
  Formula matrix;
};
Prenex split_prenex(const Formula& f);
Formula join_prenex(const std::vector<Quantified>& prefix, Formula matrix);

// The binder of `var` inside f, if any.
std::optional<Quantified> find_binder(const Formula& f, const std::string& var);

// Variables named by a NOO atom or bound by the unique quantifier.
bool is_constant(const Formula& scope, const std::string& var);

// Returns a name not in `taken`, derived from `stem`.
std::string fresh_name(const std::string& stem,
                       const std::set<std::string>& taken);

}  // namespace ontosem
