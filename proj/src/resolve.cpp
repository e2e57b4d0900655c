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

#include "ontosem/resolve.hpp"

#include <functional>
#include <map>
#include <set>

#include "ontosem/definitions.hpp"
#include "ontosem/error.hpp"
#include "ontosem/lf.hpp"
#include "ontosem/obligations.hpp"
#include "ontosem/unify.hpp"

namespace ontosem {

namespace {

using Pred = std::function<bool(const Formula&)>;
using Rewrite = std::function<Formula(const Formula&)>;

// Replaces the first node in pre-order that satisfies `pred`.
std::optional<Formula> rewrite_first(const Formula& f, const Pred& pred,
                                     const Rewrite& fn) {
  if (pred(f)) return fn(f);
  if (const auto* q = f.as<Quantified>()) {
    if (auto r = rewrite_first(q->body, pred, fn)) {
      return make_quantified(q->quantifier, q->var, q->types, *r);
    }
  } else if (const auto* m = f.as<Modified>()) {
    if (auto r = rewrite_first(m->inner, pred, fn)) {
      return Formula(Modified{m->modifier, *r});
    }
  } else if (const auto* n = f.as<Not>()) {
    if (auto r = rewrite_first(n->operand, pred, fn)) return make_not(*r);
  } else if (const auto* t = f.as<Typical>()) {
    if (auto r = rewrite_first(t->operand, pred, fn)) return make_typical(*r);
  } else if (const auto* a = f.as<And>()) {
    auto ops = a->operands;
    for (auto& op : ops) {
      if (auto r = rewrite_first(op, pred, fn)) {
        op = *r;
        return make_and(std::move(ops));
      }
    }
  } else if (const auto* o = f.as<Or>()) {
    auto ops = o->operands;
    for (auto& op : ops) {
      if (auto r = rewrite_first(op, pred, fn)) {
        op = *r;
        return make_or(std::move(ops));
      }
    }
  } else if (const auto* i = f.as<Implies>()) {
    if (auto r = rewrite_first(i->antecedent, pred, fn)) {
      return make_implies(*r, i->consequent);
    }
    if (auto r = rewrite_first(i->consequent, pred, fn)) {
      return make_implies(i->antecedent, *r);
    }
  }
  return std::nullopt;
}

const Atom* copula_atom(const Formula& f) {
  const auto* a = f.as<Atom>();
  if (!a || atom_kind(a->name) != AtomKind::identity || a->args.size() != 2 ||
      !a->args[0].term.is_var() || !a->args[1].term.is_var()) {
    return nullptr;
  }
  return a;
}

bool encloses(const Formula& f, const std::string& outer,
              const std::string& inner) {
  auto b = find_binder(f, outer);
  return b && find_binder(b->body, inner).has_value();
}

std::optional<TypeTerm> first_type(const Formula& f, const std::string& var) {
  auto b = find_binder(f, var);
  if (!b || b->types.empty()) return std::nullopt;
  return b->types.front();
}

// copula stage: one be(..) atom at a time, first in pre-order.
std::optional<Formula> reduce_copula(const TypeHierarchy& h,
                                     const SalienceRegistry& reg,
                                     const Formula& f, DerivationTrace& trace) {
  const Atom* link = nullptr;
  visit(f, [&](const Formula& g) {
    if (!link) link = copula_atom(g);
  });
  if (!link) return std::nullopt;
  const Atom be = *link;
  std::string subj = be.args[0].term.text;
  std::string comp = be.args[1].term.text;
  if (!find_binder(f, subj) || !find_binder(f, comp)) {
    throw ResolutionError("be(" + subj + ", " + comp +
                          ") links an unbound variable");
  }
  auto st = first_type(f, subj);
  auto ct = first_type(f, comp);

  std::optional<CopulaReading> reading;
  if (!st) {
    reading = CopulaReading{CopulaReading::Kind::identity, {}, false};
  } else {
    reading = copula_reading(h, reg, *st, ct);
  }
  if (!reading) {
    throw UnificationError(subj, to_string(*st), to_string(*ct));
  }

  if (reading->kind == CopulaReading::Kind::identity) {
    std::string keep = subj, drop = comp;
    if (encloses(f, drop, keep)) std::swap(keep, drop);
    Formula after = merge_identical(f, keep, drop);
    trace.add(Rule::const_subst, f, after,
              keep + " = " + drop + (is_constant(f, keep) ? " (constant)" : ""));
    return after;
  }
  std::vector<Argument> args{arg(subj), arg(comp)};
  if (reading->complement_is_subject) std::swap(args[0], args[1]);
  Formula rel = make_atom(reading->relation, std::move(args));
  auto after = rewrite_first(
      f, [&](const Formula& g) { return copula_atom(g) && *g.as<Atom>() == be; },
      [&](const Formula&) { return rel; });
  trace.add(Rule::copula, f, *after,
            to_string(*ct) + " complement: be -> " + reading->relation);
  return after;
}

bool needs_work(const Quantified& q) {
  if (q.types.size() > 1) return true;
  bool signed_use = false;
  for_each_occurrence(q.body, q.var, [&](const Argument& a) {
    signed_use = signed_use || a.signature.has_value();
  });
  return signed_use;
}

struct Demand {
  TypeTerm type;
  std::optional<std::size_t> occurrence;
};

struct Slot {
  std::string var;
  TypeTerm type;
};

struct Link {
  std::size_t slot;
  RelationSignature relation;
  bool original_is_subject;
};

// Places relation conjuncts: after the leading binders of the same kind,
// first in an existential matrix, last in a universal's antecedent.
Formula attach_relations(Quantifier q, const Formula& body,
                         const std::vector<Formula>& rels) {
  if (rels.empty()) return body;
  const auto* inner = body.as<Quantified>();
  bool same_kind =
      inner && ((q == Quantifier::forall) ==
                (inner->quantifier == Quantifier::forall));
  if (same_kind) {
    return make_quantified(inner->quantifier, inner->var, inner->types,
                           attach_relations(q, inner->body, rels));
  }
  if (q == Quantifier::forall) {
    if (const auto* i = body.as<Implies>()) {
      std::vector<Formula> ante{i->antecedent};
      ante.insert(ante.end(), rels.begin(), rels.end());
      return make_implies(make_and(std::move(ante)), i->consequent);
    }
    return make_implies(make_and(rels), body);
  }
  std::vector<Formula> ops = rels;
  ops.push_back(body);
  return make_and(std::move(ops));
}

std::string stem_for(const TypeTerm& t) {
  return t.base.empty() ? std::string("v") : t.base.substr(0, 1);
}

struct ScopeResolver {
  const TypeHierarchy& h;
  const SalienceRegistry& reg;
  const std::set<std::string>& retractable;
  DerivationTrace trace;
  bool bridged = false;

  Formula process(const Formula& whole, const Quantified& q) {
    std::vector<Demand> demands;
    for (const auto& t : q.types) demands.push_back({t, std::nullopt});
    std::size_t idx = 0;
    for_each_occurrence(q.body, q.var, [&](const Argument& a) {
      if (a.signature) demands.push_back({*a.signature, idx});
      ++idx;
    });

    std::set<std::string> taken = all_vars(whole);
    std::vector<Slot> slots{{q.var, demands.front().type}};
    std::map<std::size_t, std::size_t> occ_slot;
    std::vector<Link> links;
    std::vector<std::string> notes;
    auto assign = [&](const Demand& d, std::size_t s) {
      if (d.occurrence) occ_slot[*d.occurrence] = s;
    };
    assign(demands.front(), 0);

    for (std::size_t i = 1; i < demands.size(); ++i) {
      const Demand& d = demands[i];
      bool placed = false;
      for (std::size_t s = 0; s < slots.size() && !placed; ++s) {
        auto u = unify(h, reg, slots[s].type, d.type);
        if (const auto* single = std::get_if<Single>(&u)) {
          slots[s].type = single->result;
          assign(d, s);
          placed = true;
        }
      }
      if (placed) continue;
      auto u = unify(h, reg, slots.front().type, d.type);
      const auto* br = std::get_if<Bridged>(&u);
      if (!br) {
        throw UnificationError(q.var, to_string(slots.front().type),
                               to_string(d.type));
      }
      TypeTerm fresh_type = d.type;
      if (q.quantifier == Quantifier::forall) {
        if (!fresh_type.is_abstract()) {
          notes.push_back("bridge variable under a universal taken as abstract");
        }
        fresh_type.mode = ExistenceMode::abstract;
      }
      std::string name = fresh_name(stem_for(fresh_type), taken);
      taken.insert(name);
      slots.push_back({name, fresh_type});
      links.push_back({slots.size() - 1, br->relation, br->subject_is_left});
      bridged = true;
      notes.push_back(br->relation.rel + " = msr(" +
                      (br->subject_is_left ? slots.front().type.base
                                           : d.type.base) +
                      ", " +
                      (br->subject_is_left ? d.type.base
                                           : slots.front().type.base) +
                      ")");
      assign(d, slots.size() - 1);
    }

    Formula body = map_occurrences(
        q.body, q.var, [&](std::size_t i, const Argument&) {
          auto it = occ_slot.find(i);
          std::string v = it == occ_slot.end() ? q.var : slots[it->second].var;
          return Argument{Term::var(v), std::nullopt};
        });
    std::vector<Formula> rels;
    for (const auto& l : links) {
      std::vector<Argument> args{arg(q.var), arg(slots[l.slot].var)};
      if (!l.original_is_subject) std::swap(args[0], args[1]);
      rels.push_back(make_atom(l.relation.rel, std::move(args)));
    }
    body = attach_relations(q.quantifier, body, rels);
    for (std::size_t s = slots.size(); s-- > 1;) {
      body = make_quantified(q.quantifier, slots[s].var, slots[s].type, body);
    }
    return make_quantified(q.quantifier, q.var, slots.front().type, body);
  }

  Rule rule_for(const Quantified& before, const Quantified& after,
                bool bridged) const {
    if (bridged) return Rule::bridge;
    const TypeTerm& result = after.types.front();
    if (!before.types.empty()) {
      const TypeTerm& declared = before.types.front();
      if (retractable.count(before.var) && declared.is_abstract() &&
          !result.is_abstract()) {
        return Rule::retract;
      }
      if (declared.base == result.base && declared.mode != result.mode) {
        return Rule::unify_mode;
      }
    }
    return Rule::unify_subsume;
  }

  Formula run(Formula f) {
    while (auto next = reduce_copula(h, reg, f, trace)) f = *next;
    for (;;) {
      std::optional<Quantified> target;
      std::optional<Quantified> result;
      auto next = rewrite_first(
          f,
          [](const Formula& g) {
            const auto* q = g.as<Quantified>();
            return q && needs_work(*q);
          },
          [&](const Formula& g) {
            target = *g.as<Quantified>();
            bridged = false;
            Formula out = process(f, *target);
            result = *out.as<Quantified>();
            return out;
          });
      if (!next) break;
      Rule rule = rule_for(*target, *result, bridged);
      std::string note = describe(*target, *result);
      trace.add(rule, f, *next, note);
      f = *next;
    }
    return f;
  }

  static std::string describe(const Quantified& before,
                              const Quantified& after) {
    std::vector<TypeTerm> demands = before.types;
    for_each_occurrence(before.body, before.var, [&](const Argument& a) {
      if (a.signature) demands.push_back(*a.signature);
    });
    std::string s = before.var + " :: ";
    for (std::size_t i = 0; i < demands.size(); ++i) {
      if (i) s += " . ";
      s += to_string(demands[i]);
    }
    return s + " = " + to_string(after.types.front());
  }
};

Resolution resolve_impl(const TypeHierarchy& h, const SalienceRegistry& reg,
                        const Formula& f,
                        const std::set<std::string>& retractable) {
  ScopeResolver r{h, reg, retractable, {}};
  Formula out = r.run(f);
  return {out, std::move(r.trace)};
}

Formula rename_binder(const Formula& f, const std::string& from,
                      const std::string& to) {
  return transform(f, [&](const Formula& g) {
    const auto* q = g.as<Quantified>();
    if (!q || q->var != from) return g;
    return make_quantified(q->quantifier, to, q->types,
                           rename_free(q->body, from, to));
  });
}

std::vector<Formula> conjuncts(const Formula& f) {
  if (const auto* a = f.as<And>()) return a->operands;
  return {f};
}

}  // namespace

Resolution resolve_scope(const TypeHierarchy& h, const SalienceRegistry& reg,
                         const Formula& f) {
  return resolve_impl(h, reg, f, {});
}

Resolution resolve_discourse(const TypeHierarchy& h,
                             const SalienceRegistry& reg, const Discourse& d) {
  if (d.sentences.empty()) return {Formula(), {}};

  // Rename apart, keeping slot names in step.
  std::vector<Formula> sentences = d.sentences;
  std::vector<PronounSlot> slots = d.slots;
  std::set<std::string> taken;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::vector<std::string> binders;
    visit(sentences[i], [&](const Formula& g) {
      if (const auto* q = g.as<Quantified>()) binders.push_back(q->var);
    });
    for (const auto& v : binders) {
      if (taken.count(v)) {
        std::string name = fresh_name(v, taken);
        sentences[i] = rename_binder(sentences[i], v, name);
        for (auto& s : slots) {
          if (s.sentence == i && s.var == v) s.var = name;
        }
        taken.insert(name);
      } else {
        taken.insert(v);
      }
    }
  }

  // Individually resolved types of each sentence's top-level binders.
  struct Candidate {
    std::size_t sentence;
    std::string var;
    TypeTerm type;
  };
  std::set<std::string> slot_vars;
  for (const auto& s : slots) slot_vars.insert(s.var);
  std::vector<Candidate> candidates;
  std::set<std::string> retractable;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    Formula solo = resolve_scope(h, reg, sentences[i]).result;
    for (const auto& b : split_prenex(sentences[i]).prefix) {
      if (slot_vars.count(b.var)) continue;
      auto resolved = find_binder(solo, b.var);
      if (!resolved || resolved->types.empty()) continue;
      candidates.push_back({i, b.var, resolved->types.front()});
      if (resolved->types.front().is_abstract()) retractable.insert(b.var);
    }
  }

  std::vector<Quantified> prefix;
  std::vector<Formula> matrices;
  for (const auto& s : sentences) {
    Prenex p = split_prenex(s);
    prefix.insert(prefix.end(), p.prefix.begin(), p.prefix.end());
    if (!p.matrix.is_true()) matrices.push_back(p.matrix);
  }
  Formula merged = join_prenex(prefix, make_and(std::move(matrices)));

  DerivationTrace trace;
  for (const auto& slot : slots) {
    const Candidate* single = nullptr;
    const Candidate* bridged = nullptr;
    for (std::size_t j = slot.sentence; j-- > 0 && !single;) {
      for (const auto& c : candidates) {
        if (c.sentence != j) continue;
        bool excluded = false;
        for (const auto& x : slot.excludes) {
          excluded = excluded || (h.contains(x) && h.subsumes(x, c.type.base));
        }
        if (excluded) continue;
        auto u = unify(h, reg, c.type, slot.constraint);
        if (std::holds_alternative<Single>(u) &&
            satisfies(c.type.card, slot.constraint.card)) {
          single = &c;
          break;
        }
        if (!bridged && std::holds_alternative<Bridged>(u)) bridged = &c;
      }
    }
    const Candidate* chosen = single;
    if (!chosen && !slot.optional) chosen = bridged;
    if (!chosen) {
      if (slot.optional) continue;
      throw ResolutionError("no antecedent for '" + slot.var + "' of type " +
                            to_string(slot.constraint));
    }
    Formula after = merge_identical(merged, chosen->var, slot.var);
    trace.add(Rule::anaphor_bind, merged, after,
              slot.var + " -> " + chosen->var +
                  (single ? "" : " (through a salient relation)"));
    merged = after;
  }

  Resolution r = resolve_impl(h, reg, merged, retractable);
  trace.append(r.trace);
  return {r.result, std::move(trace)};
}

std::optional<Formula> apply_modus_ponens(const TypeHierarchy& h,
                                          const Formula& rule,
                                          const Formula& fact) {
  Prenex rp = split_prenex(rule);
  const auto* impl = rp.matrix.as<Implies>();
  if (!impl || rp.prefix.empty()) {
    throw ResolutionError("rule is not a universally quantified implication");
  }
  std::map<std::string, const Quantified*> rule_vars;
  for (const auto& b : rp.prefix) {
    if (b.quantifier != Quantifier::forall) {
      throw ResolutionError("rule binder '" + b.var + "' is not universal");
    }
    rule_vars[b.var] = &b;
  }
  Prenex fp = split_prenex(fact);
  std::map<std::string, const Quantified*> fact_vars;
  for (const auto& b : fp.prefix) fact_vars[b.var] = &b;

  auto premises = conjuncts(impl->antecedent);
  auto facts = conjuncts(fp.matrix);

  auto admissible = [&](const std::string& rv, const Term& ft) {
    if (!ft.is_var()) return true;
    auto fit = fact_vars.find(ft.text);
    const Quantified* rb = rule_vars.at(rv);
    if (rb->types.empty()) return true;
    if (fit == fact_vars.end() || fit->second->types.empty()) return false;
    const TypeTerm& rt = rb->types.front();
    const TypeTerm& tt = fit->second->types.front();
    if (!h.contains(rt.base) || !h.contains(tt.base)) return false;
    return h.subsumes(rt.base, tt.base) &&
           (rt.is_abstract() || !tt.is_abstract());
  };

  std::map<std::string, Term> binding;
  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    if (i == premises.size()) return true;
    const auto* pa = premises[i].as<Atom>();
    if (!pa) return false;
    for (const auto& fc : facts) {
      const auto* fa = fc.as<Atom>();
      if (!fa || fa->name != pa->name || fa->args.size() != pa->args.size()) {
        continue;
      }
      auto saved = binding;
      bool ok = true;
      for (std::size_t k = 0; k < pa->args.size() && ok; ++k) {
        const Term& rt = pa->args[k].term;
        const Term& ft = fa->args[k].term;
        if (rt.is_var() && rule_vars.count(rt.text)) {
          auto it = binding.find(rt.text);
          if (it != binding.end()) {
            ok = it->second == ft;
          } else {
            ok = admissible(rt.text, ft);
            if (ok) binding.emplace(rt.text, ft);
          }
        } else {
          ok = rt == ft;
        }
      }
      if (ok && match(i + 1)) return true;
      binding = std::move(saved);
    }
    return false;
  };
  if (!match(0)) return std::nullopt;

  // Rename the consequent's own binders apart from the fact.
  Formula cons = impl->consequent;
  std::set<std::string> taken = all_vars(fact);
  for (const auto& v : all_vars(rule)) taken.insert(v);
  visit(impl->consequent, [&](const Formula& g) {
    if (const auto* q = g.as<Quantified>()) {
      if (fact_vars.count(q->var)) {
        std::string name = fresh_name(q->var, taken);
        taken.insert(name);
        cons = rename_binder(cons, q->var, name);
      }
    }
  });
  for (const auto& v : free_vars(cons)) {
    if (rule_vars.count(v) && !binding.count(v)) return std::nullopt;
  }
  std::size_t n = 0;
  std::map<std::string, Term> temps;
  for (const auto& [rv, term] : binding) {
    std::string tmp = "%" + std::to_string(n++);
    cons = rename_free(cons, rv, tmp);
    temps.emplace(tmp, term);
  }
  for (const auto& [tmp, term] : temps) {
    cons = map_occurrences(cons, tmp, [&](std::size_t, const Argument& a) {
      return Argument{term, a.signature};
    });
  }
  auto needed = free_vars(cons);
  std::vector<Quantified> wrap;
  for (const auto& b : fp.prefix) {
    if (needed.count(b.var)) wrap.push_back(b);
  }
  return join_prenex(wrap, cons);
}

}  // namespace ontosem
