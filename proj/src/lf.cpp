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

#include "ontosem/lf.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ontosem/error.hpp"

namespace ontosem {

namespace {

enum class Tok {
  ident,
  number,
  label,
  lparen,
  rparen,
  comma,
  colon,
  dot,
  amp,
  bar,
  tilde,
  arrow,
  star,
  caret,
  plus,
  exists,
  exists_unique,
  forall,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Spelling {
  std::string_view text;
  Tok kind;
};

// Longest spellings first so that ∃¹ wins over ∃.
constexpr Spelling kSymbols[] = {
    {"∃¹", Tok::exists_unique},
    {"∃", Tok::exists},
    {"∀", Tok::forall},
    {"¬", Tok::tilde},
    {"∧", Tok::amp},
    {"∨", Tok::bar},
    {"⊃", Tok::arrow},
    {"→", Tok::arrow},
    {"•", Tok::star},
    {"->", Tok::arrow},
    {"(", Tok::lparen},
    {")", Tok::rparen},
    {",", Tok::comma},
    {":", Tok::colon},
    {".", Tok::dot},
    {"&", Tok::amp},
    {"|", Tok::bar},
    {"~", Tok::tilde},
    {"*", Tok::star},
    {"^", Tok::caret},
    {"+", Tok::plus},
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_identifier_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_identifier_char(s[j]) &&
             !(s[j] == '-' && j + 1 < s.size() && s[j + 1] == '>')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '.' &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c == '"' || c == '\'') {
      auto close = s.find(c, i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated label at " + std::to_string(i), i);
      }
      out.push_back({Tok::label, std::string(s.substr(i + 1, close - i - 1)), i});
      i = close + 1;
      continue;
    }
    bool matched = false;
    for (const auto& sp : kSymbols) {
      if (s.substr(i, sp.text.size()) == sp.text) {
        out.push_back({sp.kind, std::string(sp.text), i});
        i += sp.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError("unexpected character at " + std::to_string(i), i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse() {
    Formula f = formula();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at " + std::to_string(peek().pos), peek().pos);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::end ? " before end of input"
                                    : ", found '" + peek().text + "'"));
    }
    return take();
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::arrow)) return make_implies(std::move(lhs), formula());
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> ops{conjunction()};
    while (accept(Tok::bar)) ops.push_back(conjunction());
    return ops.size() == 1 ? ops.front() : make_or(std::move(ops));
  }

  Formula conjunction() {
    std::vector<Formula> ops{unary()};
    while (accept(Tok::amp)) ops.push_back(unary());
    return ops.size() == 1 ? ops.front() : make_and(std::move(ops));
  }

  std::optional<Quantifier> quantifier_here() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::exists: return Quantifier::exists;
      case Tok::exists_unique: return Quantifier::exists_unique;
      case Tok::forall: return Quantifier::forall;
      case Tok::ident:
        if (peek(1).kind != Tok::ident) return std::nullopt;
        if (t.text == "E") return Quantifier::exists;
        if (t.text == "E1") return Quantifier::exists_unique;
        if (t.text == "A") return Quantifier::forall;
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  Formula unary() {
    if (accept(Tok::tilde)) return make_not(unary());
    if (auto q = quantifier_here()) {
      take();
      std::string var = expect(Tok::ident, "variable").text;
      std::vector<TypeTerm> types;
      if (accept(Tok::colon)) {
        types.push_back(type_term());
        while (accept(Tok::star)) types.push_back(type_term());
      }
      expect(Tok::dot, "'.'");
      return make_quantified(*q, std::move(var), std::move(types), formula());
    }
    if (accept(Tok::lparen)) {
      Formula f = formula();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (peek().kind == Tok::ident) {
      std::string name = take().text;
      if (name == "true" && peek().kind != Tok::lparen) return Formula();
      expect(Tok::lparen, "'('");
      if (name == "typ") {
        Formula inner = formula();
        expect(Tok::rparen, "')'");
        return make_typical(std::move(inner));
      }
      if (peek().kind == Tok::ident && peek(1).kind == Tok::lparen) {
        Formula inner = application();
        expect(Tok::rparen, "')'");
        return make_modified(std::move(name), std::move(inner));
      }
      auto args = arguments();
      return make_atom(std::move(name), std::move(args));
    }
    fail(peek().kind == Tok::end ? "unexpected end of input"
                                 : "unexpected '" + peek().text + "'");
  }

  Formula application() {
    std::string name = expect(Tok::ident, "predicate").text;
    expect(Tok::lparen, "'('");
    return make_atom(std::move(name), arguments());
  }

  // Parses the argument list after '(' through the closing ')'.
  std::vector<Argument> arguments() {
    std::vector<Argument> args;
    if (accept(Tok::rparen)) return args;
    do {
      const Token& t = take();
      switch (t.kind) {
        case Tok::number: args.push_back({Term::number(t.text), {}}); break;
        case Tok::label: args.push_back({Term::label(t.text), {}}); break;
        case Tok::ident: {
          Argument a{Term::var(t.text), {}};
          if (accept(Tok::colon)) a.signature = type_term();
          args.push_back(std::move(a));
          break;
        }
        default:
          --pos_;
          fail("expected argument, found '" + t.text + "'");
      }
    } while (accept(Tok::comma));
    expect(Tok::rparen, "')'");
    return args;
  }

  TypeTerm type_term() {
    TypeTerm t{expect(Tok::ident, "type name").text};
    if (accept(Tok::caret)) {
      const Token& m = expect(Tok::ident, "mode");
      if (m.text != "a") fail("unknown mode '^" + m.text + "'");
      t.mode = ExistenceMode::abstract;
    }
    if (peek().kind == Tok::colon && peek(1).kind == Tok::number) {
      take();
      const Token& n = take();
      if (n.text != "1") fail("cardinality must be 1 or 1+");
      t.card = accept(Tok::plus) ? Cardinality::many : Cardinality::one;
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Glyphs {
  const char* exists;
  const char* exists_unique;
  const char* forall;
  const char* neg;
  const char* conj;
  const char* disj;
  const char* impl;
  const char* pending;
};

constexpr Glyphs kAscii{"E ", "E1 ", "A ", "~", " & ", " | ", " -> ", "*"};
constexpr Glyphs kUnicode{"∃", "∃¹", "∀", "¬",
                          " ∧ ", " ∨ ", " ⊃ ", "•"};

class Printer {
 public:
  explicit Printer(const Glyphs& g) : g_(g) {}

  // Precedence levels: 0 implication, 1 disjunction, 2 conjunction,
  // 3 unary. `top` marks positions where a quantifier needs no parentheses.
  std::string print(const Formula& f, int ctx, bool top) const {
    if (const auto* q = f.as<Quantified>()) {
      std::string s = quant(q->quantifier) + q->var;
      if (!q->types.empty()) {
        s += ":";
        for (std::size_t i = 0; i < q->types.size(); ++i) {
          if (i) s += g_.pending;
          s += to_string(q->types[i]);
        }
      }
      s += " . " + print(q->body, 0, true);
      return top ? s : "(" + s + ")";
    }
    if (const auto* a = f.as<Atom>()) return atom(*a);
    if (const auto* m = f.as<Modified>()) {
      return m->modifier + "(" + atom(*m->inner.as<Atom>()) + ")";
    }
    if (const auto* n = f.as<Not>()) {
      return g_.neg + print(n->operand, 3, false);
    }
    if (const auto* t = f.as<Typical>()) {
      return "typ(" + print(t->operand, 0, true) + ")";
    }
    if (const auto* a = f.as<And>()) {
      if (a->operands.empty()) return "true";
      return wrap(join(a->operands, g_.conj, 3), ctx > 2);
    }
    if (const auto* o = f.as<Or>()) {
      return wrap(join(o->operands, g_.disj, 2), ctx > 1);
    }
    const auto& i = *f.as<Implies>();
    std::string s = print(i.antecedent, 1, false) + g_.impl +
                    print(i.consequent, 0, false);
    return wrap(s, ctx > 0);
  }

 private:
  std::string quant(Quantifier q) const {
    switch (q) {
      case Quantifier::exists: return g_.exists;
      case Quantifier::exists_unique: return g_.exists_unique;
      case Quantifier::forall: return g_.forall;
    }
    return g_.exists;
  }

  static std::string wrap(const std::string& s, bool parens) {
    return parens ? "(" + s + ")" : s;
  }

  std::string join(const std::vector<Formula>& ops, const char* sep,
                   int ctx) const {
    std::string s;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i) s += sep;
      s += print(ops[i], ctx, false);
    }
    return s;
  }

  static std::string atom(const Atom& a) {
    std::string s = a.name + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) s += ",";
      const auto& x = a.args[i];
      switch (x.term.kind) {
        case Term::Kind::variable: s += x.term.text; break;
        case Term::Kind::number: s += x.term.text; break;
        case Term::Kind::label: s += "\"" + x.term.text + "\""; break;
      }
      if (x.signature) s += ":" + to_string(*x.signature);
    }
    return s + ")";
  }

  const Glyphs& g_;
};

// Position of the first free occurrence of each variable in textual order.
void first_uses(const Formula& f, std::set<std::string>& bound,
                std::map<std::string, std::size_t>& out, std::size_t& counter) {
  if (const auto* q = f.as<Quantified>()) {
    bool inserted = bound.insert(q->var).second;
    first_uses(q->body, bound, out, counter);
    if (inserted) bound.erase(q->var);
  } else if (const auto* a = f.as<Atom>()) {
    for (const auto& x : a->args) {
      if (x.term.is_var() && !bound.count(x.term.text)) {
        out.try_emplace(x.term.text, counter);
      }
      ++counter;
    }
  } else if (const auto* m = f.as<Modified>()) {
    first_uses(m->inner, bound, out, counter);
  } else if (const auto* n = f.as<Not>()) {
    first_uses(n->operand, bound, out, counter);
  } else if (const auto* t = f.as<Typical>()) {
    first_uses(t->operand, bound, out, counter);
  } else if (const auto* c = f.as<And>()) {
    for (const auto& op : c->operands) first_uses(op, bound, out, counter);
  } else if (const auto* d = f.as<Or>()) {
    for (const auto& op : d->operands) first_uses(op, bound, out, counter);
  } else if (const auto* i = f.as<Implies>()) {
    first_uses(i->antecedent, bound, out, counter);
    first_uses(i->consequent, bound, out, counter);
  }
}

bool commutes(Quantifier q) { return q != Quantifier::exists_unique; }

Formula reorder(const Formula& f) {
  return transform(f, [](const Formula& g) {
    const auto* q = g.as<Quantified>();
    if (!q || !commutes(q->quantifier)) return g;
    std::vector<Quantified> run;
    Formula cur = g;
    while (const auto* r = cur.as<Quantified>()) {
      if (r->quantifier != q->quantifier) break;
      run.push_back(Quantified{r->quantifier, r->var, r->types, Formula()});
      cur = r->body;
    }
    if (run.size() < 2) return g;
    std::set<std::string> names;
    for (const auto& b : run) {
      if (!names.insert(b.var).second) return g;  // shadowing inside the run
    }
    std::map<std::string, std::size_t> uses;
    std::set<std::string> bound;
    std::size_t counter = 0;
    first_uses(cur, bound, uses, counter);
    auto key = [&](const Quantified& b) {
      auto it = uses.find(b.var);
      return it == uses.end() ? counter : it->second;
    };
    std::stable_sort(run.begin(), run.end(),
                     [&](const Quantified& a, const Quantified& b) {
                       return key(a) < key(b);
                     });
    return join_prenex(run, cur);
  });
}

using NameSource = std::function<std::string()>;

// Renames every binder in binder order, using `fresh` for the new names.
Formula rename_bound(const Formula& f, const NameSource& fresh) {
  if (const auto* q = f.as<Quantified>()) {
    std::string name = fresh();
    Formula body = rename_free(q->body, q->var, name);
    return make_quantified(q->quantifier, name, q->types,
                           rename_bound(body, fresh));
  }
  if (f.is<Atom>() || f.is<Modified>()) return f;
  if (const auto* n = f.as<Not>()) {
    return make_not(rename_bound(n->operand, fresh));
  }
  if (const auto* t = f.as<Typical>()) {
    return make_typical(rename_bound(t->operand, fresh));
  }
  if (const auto* a = f.as<And>()) {
    std::vector<Formula> ops;
    for (const auto& op : a->operands) {
      ops.push_back(rename_bound(op, fresh));
    }
    return make_and(std::move(ops));
  }
  if (const auto* o = f.as<Or>()) {
    std::vector<Formula> ops;
    for (const auto& op : o->operands) {
      ops.push_back(rename_bound(op, fresh));
    }
    return make_or(std::move(ops));
  }
  const auto& i = *f.as<Implies>();
  Formula ante = rename_bound(i.antecedent, fresh);
  return make_implies(ante, rename_bound(i.consequent, fresh));
}

}  // namespace

Formula parse_lf(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f, Syntax syntax) {
  Printer p(syntax == Syntax::ascii ? kAscii : kUnicode);
  return p.print(f, 0, true);
}

Formula alpha_normalize(const Formula& f) {
  Formula ordered = reorder(f);
  // Two passes: '%' cannot start an identifier, so the temporary names
  // never capture a variable of the input.
  std::size_t n = 0;
  Formula tmp = rename_bound(ordered, [&] { return "%" + std::to_string(++n); });
  std::set<std::string> reserved = free_vars(ordered);
  n = 0;
  return rename_bound(tmp, [&] {
    std::string name;
    do {
      name = "v" + std::to_string(++n);
    } while (reserved.count(name));
    return name;
  });
}

bool alpha_equivalent(const Formula& a, const Formula& b) {
  return alpha_normalize(a) == alpha_normalize(b);
}

}  // namespace ontosem
