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

#include "ontosem/obligations.hpp"

#include "ontosem/error.hpp"

namespace ontosem {

namespace {

// Pre-order walk shared by the occurrence helpers so that indices agree.
Formula walk(const Formula& f, const std::string& var, std::size_t& index,
             const std::function<Argument(std::size_t, const Argument&)>& fn) {
  if (const auto* q = f.as<Quantified>()) {
    if (q->var == var) return f;
    return make_quantified(q->quantifier, q->var, q->types,
                           walk(q->body, var, index, fn));
  }
  if (const auto* a = f.as<Atom>()) {
    Atom out = *a;
    for (auto& x : out.args) {
      if (x.term.is_var() && x.term.text == var) x = fn(index++, x);
    }
    return Formula(std::move(out));
  }
  if (const auto* m = f.as<Modified>()) {
    return Formula(Modified{m->modifier, walk(m->inner, var, index, fn)});
  }
  if (const auto* n = f.as<Not>()) {
    return make_not(walk(n->operand, var, index, fn));
  }
  if (const auto* t = f.as<Typical>()) {
    return make_typical(walk(t->operand, var, index, fn));
  }
  if (const auto* a = f.as<And>()) {
    std::vector<Formula> ops;
    for (const auto& op : a->operands) ops.push_back(walk(op, var, index, fn));
    return make_and(std::move(ops));
  }
  if (const auto* o = f.as<Or>()) {
    std::vector<Formula> ops;
    for (const auto& op : o->operands) ops.push_back(walk(op, var, index, fn));
    return make_or(std::move(ops));
  }
  const auto& i = *f.as<Implies>();
  Formula ante = walk(i.antecedent, var, index, fn);
  return make_implies(ante, walk(i.consequent, var, index, fn));
}

bool is_link(const Formula& f, const std::string& a, const std::string& b) {
  const auto* at = f.as<Atom>();
  if (!at || atom_kind(at->name) != AtomKind::identity || at->args.size() != 2) {
    return false;
  }
  const auto& x = at->args[0].term;
  const auto& y = at->args[1].term;
  return x.is_var() && y.is_var() &&
         ((x.text == a && y.text == b) || (x.text == b && y.text == a));
}

bool has_link(const Formula& f, const std::string& a, const std::string& b) {
  bool found = false;
  visit(f, [&](const Formula& g) { found = found || is_link(g, a, b); });
  return found;
}

}  // namespace

void for_each_occurrence(const Formula& f, const std::string& var,
                         const std::function<void(const Argument&)>& fn) {
  std::size_t index = 0;
  walk(f, var, index, [&](std::size_t, const Argument& a) {
    fn(a);
    return a;
  });
}

Formula map_occurrences(
    const Formula& f, const std::string& var,
    const std::function<Argument(std::size_t, const Argument&)>& fn) {
  std::size_t index = 0;
  return walk(f, var, index, fn);
}

std::vector<TypeObligation> collect_obligations(const Formula& f) {
  std::vector<TypeObligation> out;
  visit(f, [&](const Formula& g) {
    const auto* q = g.as<Quantified>();
    if (!q) return;
    TypeObligation ob{q->var, q->types};
    for_each_occurrence(q->body, q->var, [&](const Argument& a) {
      if (a.signature) ob.demands.push_back(*a.signature);
    });
    if (!ob.demands.empty()) out.push_back(std::move(ob));
  });
  return out;
}

Formula merge_identical(const Formula& f, const std::string& keep,
                        const std::string& drop) {
  if (keep == drop) return f;
  auto keep_binder = find_binder(f, keep);
  auto drop_binder = find_binder(f, drop);
  if (!keep_binder) throw ResolutionError("'" + keep + "' is not bound");
  if (!drop_binder) throw ResolutionError("'" + drop + "' is not bound");

  const auto free_before = free_vars(f);
  Formula g = transform(f, [&](const Formula& n) {
    if (const auto* q = n.as<Quantified>(); q && q->var == drop) return q->body;
    if (is_link(n, keep, drop)) return Formula();
    return n;
  });
  g = rename_free(g, drop, keep);
  bool appended = false;
  g = transform(g, [&](const Formula& n) {
    const auto* q = n.as<Quantified>();
    if (!q || q->var != keep || appended) return n;
    appended = true;
    auto types = q->types;
    types.insert(types.end(), drop_binder->types.begin(),
                 drop_binder->types.end());
    return make_quantified(q->quantifier, q->var, std::move(types), q->body);
  });
  if (free_vars(g).count(keep) && !free_before.count(keep)) {
    throw ResolutionError("'" + drop + "' occurs outside the scope of '" +
                          keep + "'");
  }
  return g;
}

Formula substitute_constant(const Formula& f, const std::string& v,
                            const std::string& c) {
  if (v == c) return f;
  if (!find_binder(f, v)) throw ResolutionError("'" + v + "' is not bound");
  if (!is_constant(f, c)) {
    throw ResolutionError("'" + c + "' is not a constant");
  }
  if (!has_link(f, v, c)) {
    throw ResolutionError("no be(" + c + ", " + v + ") link");
  }
  return merge_identical(f, c, v);
}

}  // namespace ontosem
