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

#include "ontosem/definitions.hpp"

#include <array>
#include <fstream>
#include <set>

#include "ontosem/error.hpp"
#include "ontosem/lf.hpp"
#include "ontosem/obligations.hpp"
#include "ontosem/unify.hpp"
#include "text_util.hpp"

namespace ontosem {

namespace {

constexpr std::array<std::string_view, 5> kAbstractCategories = {
    "activity", "attribute", "state", "process", "property"};

// Renames the binder of `from` (and its bound occurrences) to `to`.
Formula rename_binder(const Formula& f, const std::string& from,
                      const std::string& to) {
  return transform(f, [&](const Formula& g) {
    const auto* q = g.as<Quantified>();
    if (!q || q->var != from) return g;
    return make_quantified(q->quantifier, to, q->types,
                           rename_free(q->body, from, to));
  });
}

struct Instance {
  std::vector<Quantified> prefix;
  Formula inner;
  std::string subject;  // the term filling the first parameter
};

// Instantiates def at the application `app`, renaming the body's bound
// variables apart from `taken` (which is extended with the new names).
Instance instantiate(const ConceptDefinition& def, const Atom& app,
                     std::set<std::string>& taken) {
  if (app.args.size() != def.params.size()) {
    throw DefinitionError(def.head + " expects " +
                          std::to_string(def.params.size()) +
                          " argument(s), got " +
                          std::to_string(app.args.size()));
  }
  Formula body = def.body;
  std::set<std::string> params;
  for (const auto& p : def.params) params.insert(p.first);
  for (const auto& v : all_vars(body)) {
    if (params.count(v)) continue;
    std::string name = fresh_name(v, taken);
    taken.insert(name);
    if (name != v) body = rename_binder(body, v, name);
  }
  // Two phases so an argument named like a later parameter is not captured.
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    body = rename_free(body, def.params[i].first, "%" + std::to_string(i));
  }
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    const Argument& actual = app.args[i];
    body = map_occurrences(body, "%" + std::to_string(i),
                           [&](std::size_t, const Argument&) { return actual; });
  }
  Prenex p = split_prenex(body);
  Instance inst;
  inst.prefix = std::move(p.prefix);
  inst.inner = std::move(p.matrix);
  inst.subject = app.args.empty() ? std::string() : app.args[0].term.text;
  return inst;
}

const ConceptDefinition* expandable(const DefinitionSet& defs,
                                    const Formula& f) {
  const Atom* app = f.as<Atom>();
  if (const auto* m = f.as<Modified>()) app = m->inner.as<Atom>();
  if (!app) return nullptr;
  const auto* def = defs.find(app->name);
  if (!def || def->kind != DefinitionKind::definition) {
    if (f.is<Modified>()) {
      throw DefinitionError("no definition for modified concept " + app->name);
    }
    return nullptr;
  }
  return def;
}

Instance instance_of(const DefinitionSet& defs, const Formula& f,
                     std::set<std::string>& taken) {
  if (const auto* m = f.as<Modified>()) {
    const Atom& app = *m->inner.as<Atom>();
    Instance inst = instantiate(*expandable(defs, f), app, taken);
    if (inst.prefix.empty()) {
      throw DefinitionError("definition of " + app.name +
                            " has no abstract object to modify");
    }
    // The modifier may predicate either the abstract object or the subject,
    // so the definition's uniqueness claim is dropped.
    auto& head = inst.prefix.front();
    if (head.quantifier == Quantifier::exists_unique) {
      head.quantifier = Quantifier::exists;
    }
    Formula on_object = make_atom(m->modifier, {arg(head.var)});
    Formula on_subject = make_atom(m->modifier, {app.args.front()});
    on_subject = strip_signatures(on_subject);
    inst.inner = make_and({inst.inner, make_or({on_object, on_subject})});
    return inst;
  }
  return instantiate(*expandable(defs, f), *f.as<Atom>(), taken);
}

std::optional<Formula> expand_at(const DefinitionSet& defs, const Formula& f,
                                 std::set<std::string>& taken) {
  if (const auto* a = f.as<And>()) {
    std::vector<Formula> ops = a->operands;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (expandable(defs, ops[i])) {
        Instance inst = instance_of(defs, ops[i], taken);
        ops[i] = inst.inner;
        return join_prenex(inst.prefix, make_and(std::move(ops)));
      }
      if (auto r = expand_at(defs, ops[i], taken)) {
        ops[i] = *r;
        return make_and(std::move(ops));
      }
    }
    return std::nullopt;
  }
  if (expandable(defs, f)) {
    Instance inst = instance_of(defs, f, taken);
    return join_prenex(inst.prefix, inst.inner);
  }
  if (const auto* q = f.as<Quantified>()) {
    if (auto r = expand_at(defs, q->body, taken)) {
      return make_quantified(q->quantifier, q->var, q->types, *r);
    }
    return std::nullopt;
  }
  if (const auto* n = f.as<Not>()) {
    if (auto r = expand_at(defs, n->operand, taken)) return make_not(*r);
    return std::nullopt;
  }
  if (const auto* t = f.as<Typical>()) {
    if (auto r = expand_at(defs, t->operand, taken)) return make_typical(*r);
    return std::nullopt;
  }
  if (const auto* o = f.as<Or>()) {
    std::vector<Formula> ops = o->operands;
    for (auto& op : ops) {
      if (auto r = expand_at(defs, op, taken)) {
        op = *r;
        return make_or(std::move(ops));
      }
    }
    return std::nullopt;
  }
  if (const auto* i = f.as<Implies>()) {
    if (auto r = expand_at(defs, i->antecedent, taken)) {
      return make_implies(*r, i->consequent);
    }
    if (auto r = expand_at(defs, i->consequent, taken)) {
      return make_implies(i->antecedent, *r);
    }
  }
  return std::nullopt;
}

std::vector<Formula> conjuncts(const Formula& f) {
  if (const auto* a = f.as<And>()) return a->operands;
  return {f};
}

// ~(E a . C1 & ... & Cn)  ==  A a . C1 -> ~C2 | ... | ~Cn
Formula negate_existential(const Quantified& binder, const Formula& matrix) {
  auto cs = conjuncts(matrix);
  Formula body;
  if (cs.size() == 1) {
    body = make_not(cs.front());
  } else {
    std::vector<Formula> negs;
    for (std::size_t i = 1; i < cs.size(); ++i) negs.push_back(make_not(cs[i]));
    body = make_implies(cs.front(), make_or(std::move(negs)));
  }
  return make_quantified(Quantifier::forall, binder.var, binder.types, body);
}

// Inverse of negate_existential for ~(A a . ...).
std::optional<Formula> negate_universal(const Quantified& q) {
  auto un_not = [](const Formula& g) -> std::optional<Formula> {
    if (const auto* n = g.as<Not>()) return n->operand;
    return std::nullopt;
  };
  std::vector<Formula> cs;
  if (auto single = un_not(q.body)) {
    cs.push_back(*single);
  } else if (const auto* i = q.body.as<Implies>()) {
    cs.push_back(i->antecedent);
    std::vector<Formula> rest;
    if (const auto* o = i->consequent.as<Or>()) {
      rest = o->operands;
    } else {
      rest = {i->consequent};
    }
    for (const auto& r : rest) {
      auto pos = un_not(r);
      if (!pos) return std::nullopt;
      cs.push_back(*pos);
    }
  } else {
    return std::nullopt;
  }
  return make_quantified(Quantifier::exists, q.var, q.types,
                         make_and(std::move(cs)));
}

}  // namespace

bool is_abstract_category(const TypeHierarchy& h, const std::string& type) {
  if (!h.contains(type)) return false;
  for (const auto& a : h.ancestors(type)) {
    for (auto c : kAbstractCategories) {
      if (a == c) return true;
    }
  }
  return false;
}

void DefinitionSet::add(const TypeHierarchy& h, ConceptDefinition def) {
  if (defs_.count(def.head)) {
    throw DefinitionError("duplicate definition of " + def.head);
  }
  std::set<std::string> params;
  for (const auto& p : def.params) {
    if (!h.contains(p.second.base)) throw UnknownTypeError(p.second.base);
    params.insert(p.first);
  }
  for (const auto& v : free_vars(def.body)) {
    if (!params.count(v)) {
      throw DefinitionError("definition of " + def.head +
                            " has free variable '" + v + "'");
    }
  }
  const auto* top = def.body.as<Quantified>();
  if (!top || top->types.size() != 1 ||
      !is_abstract_category(h, top->types.front().base)) {
    throw DefinitionError("definition of " + def.head +
                          " must start with a quantifier over an abstract "
                          "object type");
  }
  visit(def.body, [&](const Formula& g) {
    if (const auto* q = g.as<Quantified>()) {
      for (const auto& t : q->types) {
        if (!h.contains(t.base)) throw UnknownTypeError(t.base);
      }
    }
  });
  std::string head = def.head;
  defs_.emplace(std::move(head), std::move(def));
}

const ConceptDefinition* DefinitionSet::find(const std::string& head) const {
  auto it = defs_.find(head);
  return it == defs_.end() ? nullptr : &it->second;
}

DefinitionSet DefinitionSet::load(const TypeHierarchy& h, std::istream& in) {
  DefinitionSet set;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    auto space = line.find(' ');
    auto assign = line.find(":=");
    if (space == std::string_view::npos || assign == std::string_view::npos) {
      throw ParseError(where + "expected '<kind> NAME(params) := <formula>'",
                       lineno);
    }
    auto kind_word = line.substr(0, space);
    ConceptDefinition def;
    if (kind_word == "def") {
      def.kind = DefinitionKind::definition;
    } else if (kind_word == "decomp") {
      def.kind = DefinitionKind::decomposition;
    } else if (kind_word == "mod") {
      def.kind = DefinitionKind::modifier;
    } else {
      throw ParseError(where + "unknown definition kind '" +
                           std::string(kind_word) + "'",
                       lineno);
    }
    try {
      Formula head = parse_lf(line.substr(space + 1, assign - space - 1));
      const auto* app = head.as<Atom>();
      if (!app) throw ParseError("definition head must be NAME(params)");
      def.head = app->name;
      for (const auto& a : app->args) {
        if (!a.term.is_var()) {
          throw ParseError("definition parameters must be variables");
        }
        def.params.emplace_back(a.term.text,
                                a.signature.value_or(TypeTerm("thing")));
      }
      def.body = parse_lf(line.substr(assign + 2));
      set.add(h, std::move(def));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what(), lineno);
    } catch (const UnknownTypeError& e) {
      throw DefinitionError(where + e.what());
    } catch (const DefinitionError& e) {
      throw DefinitionError(where + e.what());
    }
  }
  return set;
}

DefinitionSet DefinitionSet::load_file(const TypeHierarchy& h,
                                       const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open definitions file " + path.string());
  return load(h, in);
}

Formula expand(const DefinitionSet& defs, const Formula& f) {
  std::set<std::string> taken = all_vars(f);
  Formula cur = f;
  for (int guard = 0; guard < 1000; ++guard) {
    auto next = expand_at(defs, cur, taken);
    if (!next) return cur;
    cur = *next;
  }
  throw DefinitionError("expansion does not terminate (recursive definition?)");
}

Formula expand_negated(const DefinitionSet& defs, const Formula& f) {
  std::set<std::string> taken = all_vars(f);
  return transform(f, [&](const Formula& g) -> Formula {
    const auto* n = g.as<Not>();
    if (!n) return g;
    if (const auto* app = n->operand.as<Atom>()) {
      const auto* def = defs.find(app->name);
      if (!def || def->kind == DefinitionKind::modifier) return g;
      Instance inst = instantiate(*def, *app, taken);
      if (inst.prefix.size() != 1 ||
          inst.prefix.front().quantifier != Quantifier::exists) {
        throw DefinitionError("definition of " + def->head +
                              " is not a plain existential over a "
                              "conjunction; cannot expand its negation");
      }
      return negate_existential(inst.prefix.front(), inst.inner);
    }
    if (const auto* q = n->operand.as<Quantified>();
        q && q->quantifier == Quantifier::forall) {
      if (auto back = negate_universal(*q)) return *back;
    }
    return g;
  });
}

std::vector<Formula> enumerate_readings(const Formula& f) {
  if (const auto* q = f.as<Quantified>()) {
    if (q->quantifier == Quantifier::forall) return {f};
    std::vector<Formula> out;
    for (auto& body : enumerate_readings(q->body)) {
      out.push_back(make_quantified(q->quantifier, q->var, q->types, body));
    }
    return out;
  }
  if (const auto* a = f.as<And>()) {
    std::vector<std::vector<Formula>> partial{{}};
    for (const auto& op : a->operands) {
      std::vector<std::vector<Formula>> next;
      for (const auto& choice : enumerate_readings(op)) {
        for (const auto& prefix : partial) {
          auto extended = prefix;
          extended.push_back(choice);
          next.push_back(std::move(extended));
        }
      }
      partial = std::move(next);
    }
    std::vector<Formula> out;
    for (auto& ops : partial) out.push_back(make_and(std::move(ops)));
    return out;
  }
  if (const auto* o = f.as<Or>()) {
    std::vector<Formula> out;
    for (const auto& op : o->operands) {
      for (auto& r : enumerate_readings(op)) out.push_back(std::move(r));
    }
    return out;
  }
  return {f};
}

std::optional<CopulaReading> copula_reading(
    const TypeHierarchy& h, const SalienceRegistry& reg,
    const TypeTerm& subject, const std::optional<TypeTerm>& complement) {
  using Kind = CopulaReading::Kind;
  if (!complement) return CopulaReading{Kind::identity, {}, false};
  if (h.subsumes(subject.base, complement->base) ||
      h.subsumes(complement->base, subject.base)) {
    return CopulaReading{Kind::identity, {}, false};
  }
  for (const auto& a : h.ancestors(complement->base)) {
    if (a == "property") return CopulaReading{Kind::relation, "has", false};
    if (a == "state") return CopulaReading{Kind::relation, "in", false};
    if (a == "process") return CopulaReading{Kind::relation, "gt", false};
    if (a == "activity") {
      if (auto r = reg.msr(h, complement->base, complement->card, subject.base,
                           subject.card)) {
        return CopulaReading{Kind::relation, r->rel, true};
      }
      if (auto r = reg.msr(h, subject.base, subject.card, complement->base,
                           complement->card)) {
        return CopulaReading{Kind::relation, r->rel, false};
      }
      return CopulaReading{Kind::relation, "do", false};
    }
  }
  return std::nullopt;
}

Formula interpret_copula(const TypeHierarchy& h, const SalienceRegistry& reg,
                         const CopulaSide& subject,
                         const CopulaSide& complement) {
  auto reading = copula_reading(h, reg, subject.type, complement.type);
  if (!reading) {
    throw UnificationError(subject.var, to_string(subject.type),
                           to_string(complement.type));
  }
  if (reading->kind == CopulaReading::Kind::identity) {
    auto outcome = unify(h, reg, subject.type, complement.type);
    const auto& single = std::get<Single>(outcome);
    Formula body = make_and(
        {subject.restriction,
         rename_free(complement.restriction, complement.var, subject.var)});
    return make_quantified(subject.quantifier, subject.var, single.result,
                           body);
  }
  std::vector<Argument> args{arg(subject.var), arg(complement.var)};
  if (reading->complement_is_subject) std::swap(args[0], args[1]);
  Formula body = make_and({subject.restriction, complement.restriction,
                           make_atom(reading->relation, std::move(args))});
  return make_quantified(
      subject.quantifier, subject.var, subject.type,
      make_quantified(complement.quantifier, complement.var, complement.type,
                      body));
}

}  // namespace ontosem
