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

#include "ontosem/model.hpp"

#include <algorithm>
#include <sstream>

#include "ontosem/error.hpp"
#include "ontosem/lf.hpp"

namespace ontosem {

namespace {

std::vector<const Argument*> variable_args(const Atom& a) {
  std::vector<const Argument*> out;
  for (const auto& x : a.args) {
    if (x.term.is_var()) out.push_back(&x);
  }
  return out;
}

std::string atom_key(const Atom& a) {
  bool constant = false;
  for (const auto& x : a.args) constant = constant || !x.term.is_var();
  if (!constant) return a.name;
  std::string key = a.name + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) key += ",";
    const Term& t = a.args[i].term;
    if (t.is_var()) {
      key += "_";
    } else if (t.kind == Term::Kind::label) {
      key += "\"" + t.text + "\"";
    } else {
      key += t.text;
    }
  }
  return key + ")";
}

const Atom& core_atom(const Formula& f, std::string& key) {
  if (const auto* m = f.as<Modified>()) {
    const Atom& inner = core_atom(m->inner, key);
    key = m->modifier + "." + key;
    return inner;
  }
  const auto* a = f.as<Atom>();
  if (!a) throw ModelError("expected an atom");
  key = atom_key(*a);
  return *a;
}

}  // namespace

std::string predicate_key(const Formula& f) {
  std::string key;
  core_atom(f, key);
  return key;
}

void Vocabulary::declare(const std::string& key,
                         std::vector<std::string> arg_types) {
  preds_[key] = std::move(arg_types);
}

void Vocabulary::collect(const Formula& f) {
  visit(f, [&](const Formula& g) {
    if (!g.is<Atom>() && !g.is<Modified>()) return;
    if (const auto* a = g.as<Atom>()) {
      if (atom_kind(a->name) == AtomKind::identity) return;
    }
    std::string key;
    const Atom& a = core_atom(g, key);
    if (!preds_.count(key)) {
      preds_[key] = std::vector<std::string>(variable_args(a).size(),
                                             std::string(TypeHierarchy::kRoot));
    }
  });
}

ModelSpace::ModelSpace(const TypeHierarchy& h, Vocabulary vocab,
                       std::vector<Individual> domain)
    : h_(&h), vocab_(std::move(vocab)), domain_(std::move(domain)) {
  if (domain_.empty() || domain_.size() > kMaxDomain) {
    throw ModelError("domain size must be between 1 and " +
                     std::to_string(kMaxDomain));
  }
  for (const auto& ind : domain_) {
    if (!h.contains(ind.type)) throw ModelError("unknown type " + ind.type);
  }
  const std::size_t n = domain_.size();
  for (const auto& [key, types] : vocab_.predicates()) {
    for (const auto& t : types) {
      if (!h.contains(t)) throw ModelError("unknown type " + t + " in " + key);
    }
    Table table{types.size(), {}};
    std::size_t cells = 1;
    for (std::size_t i = 0; i < types.size(); ++i) cells *= n;
    table.bits.assign(cells, -1);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::size_t rest = cell;
      bool eligible = true;
      for (std::size_t i = 0; i < types.size(); ++i) {
        eligible = eligible && h.subsumes(types[i], domain_[rest % n].type);
        rest /= n;
      }
      if (!eligible) continue;
      if (bits_ == kMaxBits) {
        throw ModelError("vocabulary needs more than " +
                         std::to_string(kMaxBits) + " extension bits");
      }
      table.bits[cell] = static_cast<int>(bits_++);
    }
    tables_.emplace(key, std::move(table));
  }
}

std::size_t ModelSpace::index(const std::vector<std::size_t>& tuple) const {
  std::size_t idx = 0, scale = 1;
  for (std::size_t v : tuple) {
    if (v >= domain_.size()) throw ModelError("individual out of range");
    idx += v * scale;
    scale *= domain_.size();
  }
  return idx;
}

int ModelSpace::bit(const std::string& key,
                    const std::vector<std::size_t>& tuple) const {
  auto it = tables_.find(key);
  if (it == tables_.end()) throw ModelError("unknown predicate " + key);
  if (tuple.size() != it->second.arity) {
    throw ModelError("arity mismatch for " + key);
  }
  return it->second.bits[index(tuple)];
}

FiniteModel ModelSpace::model(std::uint32_t mask) const {
  FiniteModel m;
  m.domain = domain_;
  const std::size_t n = domain_.size();
  for (const auto& [key, table] : tables_) {
    auto& ext = m.extensions[key];
    for (std::size_t cell = 0; cell < table.bits.size(); ++cell) {
      int b = table.bits[cell];
      if (b < 0 || !(mask >> b & 1U)) continue;
      std::vector<std::size_t> tuple;
      std::size_t rest = cell;
      for (std::size_t i = 0; i < table.arity; ++i) {
        tuple.push_back(rest % n);
        rest /= n;
      }
      ext.insert(tuple);
    }
  }
  return m;
}

std::uint32_t ModelSpace::mask(const FiniteModel& m) const {
  if (m.domain != domain_) throw ModelError("model has a different domain");
  std::uint32_t out = 0;
  for (const auto& [key, ext] : m.extensions) {
    for (const auto& tuple : ext) {
      int b = bit(key, tuple);
      if (b < 0) {
        throw ModelError("tuple outside the argument types of " + key);
      }
      out |= std::uint32_t{1} << b;
    }
  }
  return out;
}

struct CompiledFormula::Impl {
  enum class Op { truth, atom, equal, negation, conjunction, disjunction,
                  implication, exists, unique, forall };
  struct Node {
    Op op;
    std::vector<int> kids;
    std::vector<int> slots;            // atom/equal argument slots
    const std::vector<int>* table = nullptr;
    int slot = -1;                     // bound slot for quantifiers
    std::vector<std::size_t> range;    // individuals a binder ranges over
  };

  std::size_t n = 0;
  std::map<std::string, std::vector<int>> tables;
  std::vector<Node> nodes;
  int root = 0;
  std::size_t env_size = 0;

  static Node make(Op op, std::vector<int> kids = {},
                   std::vector<int> slots = {}) {
    Node nd;
    nd.op = op;
    nd.kids = std::move(kids);
    nd.slots = std::move(slots);
    return nd;
  }

  int add(Node node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size() - 1);
  }

  bool eval(int id, std::uint32_t mask, std::vector<std::size_t>& env) const {
    const Node& nd = nodes[id];
    switch (nd.op) {
      case Op::truth: return true;
      case Op::atom: {
        std::size_t idx = 0, scale = 1;
        for (int s : nd.slots) {
          idx += env[s] * scale;
          scale *= n;
        }
        int b = (*nd.table)[idx];
        return b >= 0 && (mask >> b & 1U);
      }
      case Op::equal: return env[nd.slots[0]] == env[nd.slots[1]];
      case Op::negation: return !eval(nd.kids[0], mask, env);
      case Op::conjunction:
        for (int k : nd.kids) {
          if (!eval(k, mask, env)) return false;
        }
        return true;
      case Op::disjunction:
        for (int k : nd.kids) {
          if (eval(k, mask, env)) return true;
        }
        return false;
      case Op::implication:
        return !eval(nd.kids[0], mask, env) || eval(nd.kids[1], mask, env);
      case Op::exists:
        for (std::size_t v : nd.range) {
          env[nd.slot] = v;
          if (eval(nd.kids[0], mask, env)) return true;
        }
        return false;
      case Op::forall:
        for (std::size_t v : nd.range) {
          env[nd.slot] = v;
          if (!eval(nd.kids[0], mask, env)) return false;
        }
        return true;
      case Op::unique: {
        int hits = 0;
        for (std::size_t v : nd.range) {
          env[nd.slot] = v;
          if (eval(nd.kids[0], mask, env) && ++hits > 1) return false;
        }
        return hits == 1;
      }
    }
    return false;
  }
};

namespace {

struct Compiler {
  const ModelSpace& space;
  const std::map<std::string, std::vector<int>>& tables;
  CompiledFormula::Impl& impl;
  std::vector<std::pair<std::string, int>> scope;

  using Op = CompiledFormula::Impl::Op;
  using Node = CompiledFormula::Impl::Node;

  int slot_of(const std::string& v) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    throw ModelError("free variable '" + v + "' in a model query");
  }

  std::vector<std::size_t> range(const std::vector<TypeTerm>& types) const {
    std::vector<std::size_t> out;
    const auto& dom = space.domain();
    for (std::size_t i = 0; i < dom.size(); ++i) {
      bool in = true;
      for (const auto& t : types) {
        in = in && space.hierarchy().contains(t.base) &&
             space.hierarchy().subsumes(t.base, dom[i].type) &&
             (t.is_abstract() || dom[i].mode == ExistenceMode::actual);
      }
      if (in) out.push_back(i);
    }
    return out;
  }

  int compile(const Formula& f) {
    if (const auto* q = f.as<Quantified>()) {
      Node nd = impl.make(q->quantifier == Quantifier::exists ? Op::exists
                          : q->quantifier == Quantifier::exists_unique
                              ? Op::unique
                              : Op::forall);
      nd.slot = static_cast<int>(scope.size());
      nd.range = range(q->types);
      impl.env_size = std::max(impl.env_size, scope.size() + 1);
      scope.emplace_back(q->var, nd.slot);
      nd.kids.push_back(compile(q->body));
      scope.pop_back();
      return impl.add(std::move(nd));
    }
    if (f.is<Atom>() || f.is<Modified>()) {
      if (const auto* a = f.as<Atom>();
          a && atom_kind(a->name) == AtomKind::identity) {
        if (a->args.size() != 2 || !a->args[0].term.is_var() ||
            !a->args[1].term.is_var()) {
          throw ModelError("be takes two variables");
        }
        return impl.add(impl.make(Op::equal, {},
                                  {slot_of(a->args[0].term.text),
                                   slot_of(a->args[1].term.text)}));
      }
      std::string key;
      const Atom& a = core_atom(f, key);
      auto it = tables.find(key);
      if (it == tables.end()) throw ModelError("unknown predicate " + key);
      auto vars = variable_args(a);
      const auto& types = space.vocabulary().predicates().at(key);
      if (vars.size() != types.size()) {
        throw ModelError("arity mismatch for " + key + ": " +
                         std::to_string(vars.size()) + " arguments, " +
                         std::to_string(types.size()) + " declared");
      }
      Node nd = impl.make(Op::atom);
      nd.table = &it->second;
      for (const auto* v : vars) nd.slots.push_back(slot_of(v->term.text));
      return impl.add(std::move(nd));
    }
    if (const auto* t = f.as<Typical>()) return compile(t->operand);
    if (const auto* n = f.as<Not>()) {
      return impl.add(impl.make(Op::negation, {compile(n->operand)}));
    }
    if (const auto* i = f.as<Implies>()) {
      int a = compile(i->antecedent);
      int c = compile(i->consequent);
      return impl.add(impl.make(Op::implication, {a, c}));
    }
    const std::vector<Formula>* ops = nullptr;
    Op op = Op::conjunction;
    if (const auto* a = f.as<And>()) {
      ops = &a->operands;
      if (ops->empty()) return impl.add(impl.make(Op::truth));
    } else if (const auto* o = f.as<Or>()) {
      ops = &o->operands;
      op = Op::disjunction;
    }
    Node nd = impl.make(op);
    for (const auto& g : *ops) nd.kids.push_back(compile(g));
    return impl.add(std::move(nd));
  }
};

}  // namespace

CompiledFormula::CompiledFormula(const ModelSpace& space, const Formula& f)
    : impl_(std::make_unique<Impl>()) {
  impl_->n = space.domain().size();
  for (const auto& [key, table] : space.tables_) impl_->tables[key] = table.bits;
  Compiler c{space, impl_->tables, *impl_, {}};
  impl_->root = c.compile(f);
}

CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula&&) noexcept = default;
CompiledFormula& CompiledFormula::operator=(CompiledFormula&&) noexcept =
    default;

bool CompiledFormula::holds(std::uint32_t mask) const {
  std::vector<std::size_t> env(impl_->env_size);
  return impl_->eval(impl_->root, mask, env);
}

}  // namespace ontosem

namespace ontosem {

bool satisfies(const TypeHierarchy& h, const FiniteModel& m, const Formula& f) {
  Vocabulary vocab;
  vocab.collect(f);
  for (const auto& [key, ext] : m.extensions) {
    if (ext.empty()) continue;
    std::size_t arity = ext.begin()->size();
    for (const auto& t : ext) {
      if (t.size() != arity) throw ModelError("arity mismatch in " + key);
    }
    auto known = vocab.predicates().find(key);
    if (known == vocab.predicates().end()) {
      vocab.declare(key, std::vector<std::string>(
                             arity, std::string(TypeHierarchy::kRoot)));
    } else if (known->second.size() != arity) {
      throw ModelError("arity mismatch for " + key + ": extension has " +
                       std::to_string(arity) + ", formula uses " +
                       std::to_string(known->second.size()));
    }
  }
  ModelSpace space(h, vocab, m.domain);
  return CompiledFormula(space, f).holds(space.mask(m));
}

void enumerate_models(const TypeHierarchy& h, const Vocabulary& vocab,
                      const std::vector<Individual>& domain,
                      const std::function<void(const FiniteModel&)>& fn) {
  ModelSpace space(h, vocab, domain);
  for (std::uint64_t mask = 0; mask < space.size(); ++mask) {
    fn(space.model(static_cast<std::uint32_t>(mask)));
  }
}

std::vector<std::vector<Individual>> enumerate_domains(
    const std::vector<Individual>& kinds, std::size_t max_size) {
  std::vector<std::vector<Individual>> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<Individual> d;
      for (std::size_t i : pick) d.push_back(kinds[i]);
      out.push_back(std::move(d));
    }
    if (pick.size() == max_size) return;
    for (std::size_t i = from; i < kinds.size(); ++i) {
      pick.push_back(i);
      grow(i);
      pick.pop_back();
    }
  };
  grow(0);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

template <typename Check>
OracleResult run_oracle(const TypeHierarchy& h,
                        const std::vector<Formula>& formulas,
                        const OracleOptions& options, Check check) {
  if (options.kinds.empty()) throw ModelError("no individual kinds given");
  Vocabulary vocab = options.vocabulary;
  for (const auto& f : formulas) vocab.collect(f);
  OracleResult result;
  for (const auto& domain : enumerate_domains(options.kinds, options.max_domain)) {
    ModelSpace space(h, vocab, domain);
    std::vector<CompiledFormula> compiled;
    for (const auto& f : formulas) compiled.emplace_back(space, f);
    std::vector<bool> values(compiled.size());
    for (std::uint64_t m = 0; m < space.size(); ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      for (std::size_t i = 0; i < compiled.size(); ++i) {
        values[i] = compiled[i].holds(mask);
      }
      ++result.models;
      int verdict = check(values);  // -1 irrelevant, 0 violation, 1 ok
      if (verdict < 0) continue;
      ++result.relevant;
      if (verdict == 0) {
        result.holds = false;
        result.counterexample = describe(space.model(mask));
        return result;
      }
    }
  }
  return result;
}

}  // namespace

OracleResult check_equivalent(const TypeHierarchy& h, const Formula& a,
                              const Formula& b, const OracleOptions& options,
                              const std::vector<Formula>& axioms) {
  std::vector<Formula> all{a, b};
  all.insert(all.end(), axioms.begin(), axioms.end());
  return run_oracle(h, all, options, [](const std::vector<bool>& v) {
    for (std::size_t i = 2; i < v.size(); ++i) {
      if (!v[i]) return -1;
    }
    return v[0] == v[1] ? 1 : 0;
  });
}

OracleResult check_entails(const TypeHierarchy& h,
                           const std::vector<Formula>& premises,
                           const Formula& conclusion,
                           const OracleOptions& options) {
  std::vector<Formula> all{conclusion};
  all.insert(all.end(), premises.begin(), premises.end());
  return run_oracle(h, all, options, [](const std::vector<bool>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!v[i]) return -1;
    }
    return v[0] ? 1 : 0;
  });
}

Formula definition_axiom(const ConceptDefinition& def) {
  std::vector<Argument> args;
  for (const auto& [name, type] : def.params) args.push_back(arg(name));
  Formula head = make_atom(def.head, std::move(args));
  Formula body = make_and({make_implies(head, def.body),
                           make_implies(def.body, head)});
  for (auto it = def.params.rbegin(); it != def.params.rend(); ++it) {
    body = make_quantified(Quantifier::forall, it->first, it->second, body);
  }
  return body;
}

std::string describe(const FiniteModel& m) {
  std::ostringstream out;
  out << "domain {";
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    out << (i ? ", " : "") << i << ":" << m.domain[i].type
        << (m.domain[i].mode == ExistenceMode::abstract ? "^a" : "");
  }
  out << "}";
  for (const auto& [key, ext] : m.extensions) {
    out << " " << key << "{";
    bool first = true;
    for (const auto& t : ext) {
      out << (first ? "" : " ") << "(";
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
      out << ")";
      first = false;
    }
    out << "}";
  }
  return out.str();
}

}  // namespace ontosem
