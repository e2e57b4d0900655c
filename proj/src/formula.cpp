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

#include "ontosem/formula.hpp"

#include <array>

#include "ontosem/error.hpp"

namespace ontosem {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Formula::Formula() : node_(std::make_shared<const Node>(And{})) {}

Formula::Formula(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

bool Formula::is_true() const {
  const auto* a = as<And>();
  return a != nullptr && a->operands.empty();
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

AtomKind atom_kind(std::string_view name) {
  static constexpr std::array<std::string_view, 6> kStructural = {
      "has", "in", "do", "gt", "agent", "theme"};
  if (name == "NOO") return AtomKind::naming;
  if (name == "be") return AtomKind::identity;
  for (auto s : kStructural) {
    if (name == s) return AtomKind::structural;
  }
  return AtomKind::predicate;
}

Formula make_atom(std::string name, std::vector<Argument> args) {
  return Formula(Atom{std::move(name), std::move(args)});
}

Formula make_quantified(Quantifier q, std::string var,
                        std::vector<TypeTerm> types, Formula body) {
  return Formula(
      Quantified{q, std::move(var), std::move(types), std::move(body)});
}

Formula make_quantified(Quantifier q, std::string var, TypeTerm type,
                        Formula body) {
  return make_quantified(q, std::move(var),
                         std::vector<TypeTerm>{std::move(type)},
                         std::move(body));
}

Formula make_modified(std::string modifier, Formula inner) {
  if (!inner.is<Atom>()) {
    throw Error("modifier " + modifier + " must wrap a predicate application");
  }
  return Formula(Modified{std::move(modifier), std::move(inner)});
}

Formula make_not(Formula f) { return Formula(Not{std::move(f)}); }

Formula make_and(std::vector<Formula> operands) {
  std::vector<Formula> flat;
  for (auto& op : operands) {
    if (const auto* a = op.as<And>()) {
      flat.insert(flat.end(), a->operands.begin(), a->operands.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return flat.front();
  return Formula(And{std::move(flat)});
}

Formula make_or(std::vector<Formula> operands) {
  std::vector<Formula> flat;
  for (auto& op : operands) {
    if (const auto* o = op.as<Or>()) {
      flat.insert(flat.end(), o->operands.begin(), o->operands.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return flat.front();
  if (flat.empty()) throw Error("empty disjunction");
  return Formula(Or{std::move(flat)});
}

Formula make_implies(Formula a, Formula c) {
  return Formula(Implies{std::move(a), std::move(c)});
}

Formula make_typical(Formula f) { return Formula(Typical{std::move(f)}); }

Argument arg(std::string var) { return {Term::var(std::move(var)), {}}; }

Argument arg(std::string var, TypeTerm signature) {
  return {Term::var(std::move(var)), std::move(signature)};
}

std::string to_string(Quantifier q) {
  switch (q) {
    case Quantifier::exists: return "E";
    case Quantifier::exists_unique: return "E1";
    case Quantifier::forall: return "A";
  }
  return "E";
}

Formula transform(const Formula& f,
                  const std::function<Formula(const Formula&)>& fn) {
  Formula rebuilt = std::visit(
      overloaded{
          [&](const Quantified& q) {
            return make_quantified(q.quantifier, q.var, q.types,
                                   transform(q.body, fn));
          },
          [&](const Atom&) { return f; },
          [&](const Modified& m) {
            return Formula(Modified{m.modifier, transform(m.inner, fn)});
          },
          [&](const Not& n) { return make_not(transform(n.operand, fn)); },
          [&](const And& a) {
            std::vector<Formula> ops;
            for (const auto& op : a.operands) ops.push_back(transform(op, fn));
            return make_and(std::move(ops));
          },
          [&](const Or& o) {
            std::vector<Formula> ops;
            for (const auto& op : o.operands) ops.push_back(transform(op, fn));
            return make_or(std::move(ops));
          },
          [&](const Implies& i) {
            return make_implies(transform(i.antecedent, fn),
                                transform(i.consequent, fn));
          },
          [&](const Typical& t) {
            return make_typical(transform(t.operand, fn));
          },
      },
      f.node());
  return fn(rebuilt);
}

void visit(const Formula& f, const std::function<void(const Formula&)>& fn) {
  fn(f);
  std::visit(overloaded{
                 [&](const Quantified& q) { visit(q.body, fn); },
                 [&](const Atom&) {},
                 [&](const Modified& m) { visit(m.inner, fn); },
                 [&](const Not& n) { visit(n.operand, fn); },
                 [&](const And& a) {
                   for (const auto& op : a.operands) visit(op, fn);
                 },
                 [&](const Or& o) {
                   for (const auto& op : o.operands) visit(op, fn);
                 },
                 [&](const Implies& i) {
                   visit(i.antecedent, fn);
                   visit(i.consequent, fn);
                 },
                 [&](const Typical& t) { visit(t.operand, fn); },
             },
             f.node());
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Quantified& q) {
                   bool inserted = bound.insert(q.var).second;
                   collect_free(q.body, bound, out);
                   if (inserted) bound.erase(q.var);
                 },
                 [&](const Atom& a) {
                   for (const auto& x : a.args) {
                     if (x.term.is_var() && !bound.count(x.term.text)) {
                       out.insert(x.term.text);
                     }
                   }
                 },
                 [&](const Modified& m) { collect_free(m.inner, bound, out); },
                 [&](const Not& n) { collect_free(n.operand, bound, out); },
                 [&](const And& a) {
                   for (const auto& op : a.operands) collect_free(op, bound, out);
                 },
                 [&](const Or& o) {
                   for (const auto& op : o.operands) collect_free(op, bound, out);
                 },
                 [&](const Implies& i) {
                   collect_free(i.antecedent, bound, out);
                   collect_free(i.consequent, bound, out);
                 },
                 [&](const Typical& t) { collect_free(t.operand, bound, out); },
             },
             f.node());
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  visit(f, [&](const Formula& g) {
    if (const auto* q = g.as<Quantified>()) out.insert(q->var);
    if (const auto* a = g.as<Atom>()) {
      for (const auto& x : a->args) {
        if (x.term.is_var()) out.insert(x.term.text);
      }
    }
  });
  return out;
}

namespace {

Formula rename_rec(const Formula& f, const std::string& from,
                   const std::string& to) {
  return std::visit(
      overloaded{
          [&](const Quantified& q) {
            if (q.var == from) return f;
            return make_quantified(q.quantifier, q.var, q.types,
                                   rename_rec(q.body, from, to));
          },
          [&](const Atom& a) {
            Atom out = a;
            for (auto& x : out.args) {
              if (x.term.is_var() && x.term.text == from) x.term.text = to;
            }
            return Formula(std::move(out));
          },
          [&](const Modified& m) {
            return Formula(Modified{m.modifier, rename_rec(m.inner, from, to)});
          },
          [&](const Not& n) { return make_not(rename_rec(n.operand, from, to)); },
          [&](const And& a) {
            std::vector<Formula> ops;
            for (const auto& op : a.operands) {
              ops.push_back(rename_rec(op, from, to));
            }
            return make_and(std::move(ops));
          },
          [&](const Or& o) {
            std::vector<Formula> ops;
            for (const auto& op : o.operands) {
              ops.push_back(rename_rec(op, from, to));
            }
            return make_or(std::move(ops));
          },
          [&](const Implies& i) {
            return make_implies(rename_rec(i.antecedent, from, to),
                                rename_rec(i.consequent, from, to));
          },
          [&](const Typical& t) {
            return make_typical(rename_rec(t.operand, from, to));
          },
      },
      f.node());
}

}  // namespace

Formula rename_free(const Formula& f, const std::string& from,
                    const std::string& to) {
  if (from == to) return f;
  return rename_rec(f, from, to);
}

Formula strip_signatures(const Formula& f) {
  return transform(f, [](const Formula& g) {
    if (const auto* a = g.as<Atom>()) {
      Atom out = *a;
      for (auto& x : out.args) x.signature.reset();
      return Formula(std::move(out));
    }
    return g;
  });
}

Formula strip_signatures(const Formula& f, const std::string& var) {
  return transform(f, [&](const Formula& g) {
    if (const auto* a = g.as<Atom>()) {
      Atom out = *a;
      for (auto& x : out.args) {
        if (x.term.is_var() && x.term.text == var) x.signature.reset();
      }
      return Formula(std::move(out));
    }
    return g;
  });
}

Prenex split_prenex(const Formula& f) {
  Prenex p;
  Formula cur = f;
  while (const auto* q = cur.as<Quantified>()) {
    p.prefix.push_back(Quantified{q->quantifier, q->var, q->types, Formula()});
    cur = q->body;
  }
  p.matrix = cur;
  return p;
}

Formula join_prenex(const std::vector<Quantified>& prefix, Formula matrix) {
  Formula out = std::move(matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    out = make_quantified(it->quantifier, it->var, it->types, std::move(out));
  }
  return out;
}

std::optional<Quantified> find_binder(const Formula& f,
                                      const std::string& var) {
  std::optional<Quantified> found;
  visit(f, [&](const Formula& g) {
    if (found) return;
    if (const auto* q = g.as<Quantified>(); q && q->var == var) found = *q;
  });
  return found;
}

bool is_constant(const Formula& scope, const std::string& var) {
  bool constant = false;
  visit(scope, [&](const Formula& g) {
    if (const auto* q = g.as<Quantified>()) {
      if (q->var == var && q->quantifier == Quantifier::exists_unique) {
        constant = true;
      }
    } else if (const auto* a = g.as<Atom>()) {
      if (atom_kind(a->name) == AtomKind::naming && !a->args.empty() &&
          a->args[0].term.is_var() && a->args[0].term.text == var) {
        constant = true;
      }
    }
  });
  return constant;
}

std::string fresh_name(const std::string& stem,
                       const std::set<std::string>& taken) {
  std::string base = stem.empty() ? std::string("v") : stem;
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace ontosem
