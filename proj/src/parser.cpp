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

#include "ontosem/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "ontosem/error.hpp"
#include "ontosem/obligations.hpp"

namespace ontosem {

namespace {

const std::set<std::string> kCopula = {"is", "are", "was", "were"};
const std::set<std::string> kAux = {"do", "does", "did"};

bool is_number(const std::string& w) {
  if (w.empty()) return false;
  bool dot = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '.' && !dot && i > 0 && i + 1 < w.size()) {
      dot = true;
    } else if (!std::isdigit(static_cast<unsigned char>(w[i]))) {
      return false;
    }
  }
  return true;
}

bool structural(const std::string& w) {
  return kCopula.count(w) || kAux.count(w) || w == "not";
}

// Raw sentences, each a list of clauses, each a list of lowercase words.
std::vector<std::vector<std::vector<std::string>>> split_text(
    std::string_view text) {
  std::vector<std::vector<std::vector<std::string>>> out;
  std::vector<std::string> words;
  std::string word;
  auto flush_word = [&] {
    if (!word.empty()) words.push_back(word);
    word.clear();
  };
  auto flush_sentence = [&] {
    flush_word();
    if (words.empty()) return;
    std::vector<std::vector<std::string>> clauses(1);
    for (std::size_t i = 0; i < words.size(); ++i) {
      bool and_then = words[i] == "and" && i + 1 < words.size() &&
                      words[i + 1] == "then";
      if (and_then || words[i] == "but") {
        if (and_then) ++i;
        clauses.emplace_back();
        continue;
      }
      clauses.back().push_back(words[i]);
    }
    out.push_back(std::move(clauses));
    words.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool decimal = c == '.' && !word.empty() &&
                   std::isdigit(static_cast<unsigned char>(word.back())) &&
                   i + 1 < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (decimal) {
      word += c;
    } else if (c == '.' || c == '!' || c == '?') {
      flush_sentence();
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
               c == ';' || c == ':') {
      flush_word();
    } else {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  flush_sentence();
  return out;
}

// Joins multiword entries and drops skipped words.
std::vector<std::string> lex_words(const Lexicon& lex,
                                   const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t taken = 1;
    std::string w = raw[i];
    for (std::size_t n = 3; n >= 2; --n) {
      if (i + n > raw.size()) continue;
      std::string joined = raw[i];
      for (std::size_t k = 1; k < n; ++k) joined += "_" + raw[i + k];
      if (lex.known(joined)) {
        w = joined;
        taken = n;
        break;
      }
    }
    i += taken;
    if (lex.skipped(w)) continue;
    if (!lex.known(w) && !is_number(w) && !structural(w)) {
      throw ParseError("unknown word '" + w + "'", i - taken);
    }
    out.push_back(w);
  }
  return out;
}

struct Binder {
  Quantifier quantifier;
  std::string var;
  std::optional<TypeTerm> type;
  bool noun = false;
};

enum class NPKind { name, pronoun, noun, kind };

struct NP {
  NPKind kind;
  std::string var;
  std::string word;
  std::vector<Formula> pre;   // restrictions before the main predication
  std::vector<Formula> post;  // adjectives, after it
  const KindEntry* kind_entry = nullptr;
  const PronounEntry* pronoun = nullptr;
  bool definite = false;
};

struct Clause {
  Formula formula;
  SentencePattern pattern;
  std::vector<PronounSlot> slots;
  std::vector<std::string> names;
};

class ClauseParser {
 public:
  ClauseParser(const Lexicon& lex, std::vector<std::string> words)
      : lex_(lex), w_(std::move(words)) {}

  Clause parse() {
    if (w_.empty()) fail(SentencePattern::pn_is_a_n, "empty sentence");
    if (lex_.verb(at(0)) && lex_.determiner(at(1))) return imperative();
    auto subject = noun_phrase(0, true);
    if (!subject) {
      fail(SentencePattern::pn_is_a_n,
           "expected a subject, got '" + at(0) + "'");
    }
    std::size_t p = pos_;
    if (kCopula.count(at(p))) return copula(*subject, p + 1);
    if (kAux.count(at(p)) && at(p + 1) == "not") {
      return verb_clause(*subject, p + 2, true);
    }
    if (lex_.verb(at(p))) return verb_clause(*subject, p, false);
    fail(SentencePattern::pn_v_det_n,
         "expected a verb or copula after the subject, got '" + at(p) + "'");
  }

 private:
  const std::string& at(std::size_t i) const {
    static const std::string kEnd;
    return i < w_.size() ? w_[i] : kEnd;
  }

  [[noreturn]] void fail(SentencePattern nearest, const std::string& why) {
    throw ParseError(why + "; no sentence pattern matches (nearest: " +
                         to_string(nearest) + ")",
                     pos_);
  }

  void expect_end(std::size_t p, SentencePattern pattern) {
    if (p != w_.size()) {
      pos_ = p;
      fail(pattern, "unexpected '" + at(p) + "'");
    }
  }

  std::string fresh(const std::string& stem) {
    std::string v = fresh_name(stem, taken_);
    taken_.insert(v);
    return v;
  }

  static std::string initial(const TypeTerm& t) {
    return std::string(1, static_cast<char>(std::tolower(
                              static_cast<unsigned char>(t.base[0]))));
  }

  NP tracked(NP np) {
    if (np.kind == NPKind::pronoun && np.pronoun->anaphoric) {
      pronouns_.push_back(np);
    } else if (np.kind == NPKind::noun && np.definite) {
      definites_.push_back(np);
    }
    return np;
  }

  std::string bind(Quantifier q, const std::string& stem,
                   std::optional<TypeTerm> type, bool noun = false) {
    std::string v = fresh(stem);
    binders_.push_back({q, v, std::move(type), noun});
    return v;
  }

  // Names, pronouns, `det adj* noun`, possessives and kinds.
  std::optional<NP> noun_phrase(std::size_t p, bool allow_kind,
                                const std::string& owner = {},
                                const TypeTerm* owner_sig = nullptr) {
    const std::string& w = at(p);
    if (const auto* n = lex_.name(w)) {
      NP np{NPKind::name, {}, w, {}, {}, nullptr, nullptr, true};
      auto existing = std::find_if(binders_.begin(), binders_.end(),
                                   [&](const Binder& b) {
                                     return b.var == n->constant;
                                   });
      if (existing == binders_.end()) {
        np.var = n->constant;
        taken_.insert(np.var);
        binders_.push_back({Quantifier::exists_unique, np.var, n->type});
      } else {
        np.var = n->constant;
      }
      names_.push_back(w);
      pos_ = p + 1;
      return tracked(std::move(np));
    }
    if (const auto* pr = lex_.pronoun(w)) {
      NP np{NPKind::pronoun, {}, w, {}, {}, nullptr, pr, false};
      np.var = bind(pr->quantifier, w, pr->type);
      pos_ = p + 1;
      return tracked(std::move(np));
    }
    if (allow_kind) {
      if (const auto* k = lex_.kind(w)) {
        NP np{NPKind::kind, {}, w, {}, {}, k, nullptr, false};
        np.var = bind(k->generic ? Quantifier::forall : Quantifier::exists_unique,
                      initial(k->type), k->type);
        np.pre.push_back(make_atom(k->predicate, {arg(np.var)}));
        pos_ = p + 1;
        return tracked(std::move(np));
      }
    }
    const Quantifier* det = lex_.determiner(w);
    const PossessiveEntry* poss = lex_.possessive(w);
    if (!det && !poss) return std::nullopt;
    std::size_t q = p + 1;
    std::vector<const PredicateEntry*> adjectives;
    while (const PredicateEntry* a =
               lex_.adjective(at(q)) ? lex_.adjective(at(q))
                                     : lex_.modifier(at(q))) {
      adjectives.push_back(a);
      ++q;
    }
    const TypeTerm* noun = lex_.noun(at(q));
    if (!noun) return std::nullopt;
    NP np{NPKind::noun, {}, at(q), {}, {}, nullptr, nullptr, false};
    if (poss) {
      if (owner.empty()) return std::nullopt;
      np.var = bind(Quantifier::exists, initial(*noun), *noun, true);
      Argument who = owner_sig ? arg(owner, poss->owner) : arg(owner);
      np.pre.push_back(
          make_atom(poss->relation, {who, arg(np.var, poss->owned)}));
    } else {
      np.definite = *det == Quantifier::exists_unique && w == "the";
      np.var = bind(*det, initial(*noun), *noun, true);
    }
    for (const auto* a : adjectives) {
      np.post.push_back(make_atom(a->predicate, {arg(np.var, a->signature)}));
    }
    pos_ = q + 1;
    return tracked(std::move(np));
  }

  Clause imperative() {
    auto object = noun_phrase(1, false);
    if (!object) fail(SentencePattern::imperative_v_det_n, "expected an object");
    expect_end(pos_, SentencePattern::imperative_v_det_n);
    // The imperative contributes its referent only.
    return finish({}, SentencePattern::imperative_v_det_n);
  }

  Clause verb_clause(const NP& subject, std::size_t p, bool negated) {
    SentencePattern pattern =
        negated ? SentencePattern::pn_not_v_det_n
        : subject.kind == NPKind::noun ? SentencePattern::det_n_v_det_n
                                       : SentencePattern::pn_v_det_n;
    const VerbEntry* verb = lex_.verb(at(p));
    if (!verb) {
      pos_ = p;
      fail(pattern, "expected a verb, got '" + at(p) + "'");
    }
    auto object = noun_phrase(p + 1, false, subject.var, &verb->subject);
    if (!object) {
      pos_ = p + 1;
      fail(pattern, "expected an object, got '" + at(p + 1) + "'");
    }
    if (!negated && lex_.possessive(at(p + 1))) {
      pattern = SentencePattern::pn_v_posspron_n;
    }
    expect_end(pos_, pattern);
    Formula main = make_atom(verb->predicate, {arg(subject.var, verb->subject),
                                               arg(object->var, verb->object)});
    if (negated) main = make_not(main);
    std::vector<Formula> m = subject.pre;
    m.insert(m.end(), object->pre.begin(), object->pre.end());
    m.push_back(main);
    m.insert(m.end(), subject.post.begin(), subject.post.end());
    m.insert(m.end(), object->post.begin(), object->post.end());
    return finish(std::move(m), pattern);
  }

  Clause copula(const NP& subject, std::size_t p) {
    const std::string& w = at(p);
    auto be = [&](const std::string& complement) {
      return make_atom("be", {arg(subject.var), arg(complement)});
    };
    std::vector<Formula> m = subject.pre;
    if (is_number(w)) {
      const auto& value = lex_.value();
      if (!value) {
        pos_ = p;
        fail(SentencePattern::the_n_is_value, "the lexicon has no value entry");
      }
      expect_end(p + 1, SentencePattern::the_n_is_value);
      std::string v = bind(Quantifier::exists_unique, initial(value->type),
                           value->type);
      m.push_back(make_atom(value->predicate,
                            {arg(v), Argument{Term::number(w), std::nullopt}}));
      m.push_back(be(v));
      return finish(std::move(m), SentencePattern::the_n_is_value);
    }
    if (const auto* k = lex_.kind(w)) {
      expect_end(p + 1, SentencePattern::pn_is_gerund);
      std::string v = bind(Quantifier::exists_unique, initial(k->type), k->type);
      m.push_back(make_atom(k->predicate, {arg(v)}));
      m.push_back(be(v));
      return finish(std::move(m), SentencePattern::pn_is_gerund);
    }
    if (lex_.verb(w)) return verb_clause(subject, p, false);
    const PredicateEntry* adj =
        lex_.adjective(w) ? lex_.adjective(w) : lex_.modifier(w);
    if (adj) {
      bool gerund = subject.kind == NPKind::kind;
      SentencePattern pattern =
          gerund ? SentencePattern::gerund_is_adj : SentencePattern::pn_is_adj;
      expect_end(p + 1, pattern);
      Formula pred = make_atom(adj->predicate, {arg(subject.var, adj->signature)});
      if (gerund && subject.kind_entry->generic) {
        return finish({make_implies(make_and(subject.pre), pred)}, pattern);
      }
      m.push_back(pred);
      m.insert(m.end(), subject.post.begin(), subject.post.end());
      return finish(std::move(m), pattern);
    }
    const Quantifier* det = lex_.determiner(w);
    if (!det) {
      pos_ = p;
      fail(SentencePattern::pn_is_a_n,
           "expected a complement after the copula, got '" + w + "'");
    }
    std::size_t q = p + 1;
    std::vector<const PredicateEntry*> mods, adjectives;
    for (;;) {
      if (const auto* a = lex_.modifier(at(q))) {
        mods.push_back(a);
      } else if (const auto* a2 = lex_.adjective(at(q))) {
        adjectives.push_back(a2);
      } else {
        break;
      }
      ++q;
    }
    SentencePattern pattern = mods.empty() && adjectives.empty()
                                  ? SentencePattern::pn_is_a_n
                                  : SentencePattern::pn_is_adj_n;
    const std::string& head = at(q);
    expect_end(q + 1, pattern);
    std::vector<Formula> comp;
    std::string v;
    if (const auto* role = lex_.role(head)) {
      v = bind(*det, "x", std::nullopt);
      for (const auto* a : adjectives) {
        comp.push_back(make_atom(a->predicate, {arg(v, a->signature)}));
      }
      Formula core = make_atom(role->predicate, {arg(v, role->signature)});
      for (auto it = mods.rbegin(); it != mods.rend(); ++it) {
        core = make_modified((*it)->predicate, core);
      }
      comp.push_back(core);
    } else if (const auto* noun = lex_.noun(head)) {
      v = bind(*det, "x", *noun, true);
      for (const auto* a : mods) {
        comp.push_back(make_atom(a->predicate, {arg(v, a->signature)}));
      }
      for (const auto* a : adjectives) {
        comp.push_back(make_atom(a->predicate, {arg(v, a->signature)}));
      }
    } else {
      pos_ = q;
      fail(pattern, "expected a noun, got '" + head + "'");
    }
    m.insert(m.end(), comp.begin(), comp.end());
    m.push_back(be(v));
    m.insert(m.end(), subject.post.begin(), subject.post.end());
    return finish(std::move(m), pattern);
  }

  Clause finish(std::vector<Formula> matrix, SentencePattern pattern) {
    Formula body = make_and(std::move(matrix));
    // A noun that fills an abstract position denotes a possibly
    // non-existent object.
    for (auto& b : binders_) {
      if (!b.noun) continue;
      for_each_occurrence(body, b.var, [&](const Argument& a) {
        if (a.signature && a.signature->is_abstract()) {
          b.type->mode = ExistenceMode::abstract;
        }
      });
    }
    // Pronoun constraints come from the first signed position, read off
    // the matrix while the pronoun variables are still free.
    std::vector<std::optional<TypeTerm>> sigs;
    for (const auto& np : pronouns_) {
      std::optional<TypeTerm> sig;
      for_each_occurrence(body, np.var, [&](const Argument& a) {
        if (!sig && a.signature) sig = a.signature;
      });
      sigs.push_back(sig);
    }
    for (auto it = binders_.rbegin(); it != binders_.rend(); ++it) {
      std::vector<TypeTerm> types;
      if (it->type) types.push_back(*it->type);
      body = make_quantified(it->quantifier, it->var, std::move(types), body);
    }
    Clause c{body, pattern, {}, names_};
    for (std::size_t i = 0; i < pronouns_.size(); ++i) {
      const auto& np = pronouns_[i];
      const auto& sig = sigs[i];
      TypeTerm constraint = sig ? *sig : np.pronoun->type;
      if (np.pronoun->type.card != Cardinality::unconstrained) {
        constraint.card = np.pronoun->type.card;
      }
      c.slots.push_back({0, np.var, constraint, false, np.pronoun->excludes});
    }
    for (const auto& np : definites_) {
      auto b = find_binder(body, np.var);
      c.slots.push_back({0, np.var, b->types.front(), true, {}});
    }
    return c;
  }

 private:
  const Lexicon& lex_;
  std::vector<std::string> w_;
  std::size_t pos_ = 0;
  std::vector<Binder> binders_;
  std::set<std::string> taken_;
  std::vector<std::string> names_;
  std::vector<NP> pronouns_;
  std::vector<NP> definites_;
};

ParsedText parse_sentences(
    const Lexicon& lex,
    const std::vector<std::vector<std::vector<std::string>>>& sentences) {
  ParsedText out;
  std::set<std::string> seen_names;
  std::size_t raw_clauses = 0;
  for (const auto& sentence : sentences) {
    for (const auto& raw : sentence) {
      ++raw_clauses;
      Clause c = ClauseParser(lex, lex_words(lex, raw)).parse();
      std::size_t index = out.discourse.sentences.size();
      for (auto& slot : c.slots) {
        // Definites only refer back from a later sentence.
        if (slot.optional && index == 0) continue;
        slot.sentence = index;
        out.discourse.slots.push_back(slot);
      }
      for (const auto& name : c.names) {
        const NameEntry* n = lex.name(name);
        if (index > 0 && seen_names.count(name)) {
          auto b = find_binder(c.formula, n->constant);
          out.discourse.slots.push_back(
              {index, n->constant, b->types.front(), true, {}});
        }
      }
      seen_names.insert(c.names.begin(), c.names.end());
      out.discourse.sentences.push_back(c.formula);
      out.clauses.push_back(c.pattern);
    }
  }
  if (out.discourse.sentences.empty()) {
    throw ParseError(
        "empty input; no sentence pattern matches (nearest: PN-is-a-N)");
  }
  if (out.clauses.size() == 1) {
    out.pattern = out.clauses.front();
  } else if (sentences.size() == 1 && raw_clauses == 2 &&
             out.clauses.front() == SentencePattern::pn_v_det_n) {
    out.pattern = SentencePattern::pn_v_det_n_and_then_pron_v_pron;
  } else {
    out.pattern = SentencePattern::discourse;
  }
  return out;
}

}  // namespace

ParsedText parse_text(const Lexicon& lex, std::string_view text) {
  return parse_sentences(lex, split_text(text));
}

ParsedText parse_discourse(const Lexicon& lex,
                           const std::vector<std::string>& sentences) {
  std::vector<std::vector<std::vector<std::string>>> all;
  for (const auto& s : sentences) {
    auto parts = split_text(s);
    all.insert(all.end(), parts.begin(), parts.end());
  }
  return parse_sentences(lex, all);
}

std::string to_string(SentencePattern p) {
  switch (p) {
    case SentencePattern::pn_is_a_n: return "PN-is-a-N";
    case SentencePattern::pn_is_adj: return "PN-is-Adj";
    case SentencePattern::pn_is_adj_n: return "PN-is-Adj-N";
    case SentencePattern::pn_v_det_n: return "PN-V-Det-N";
    case SentencePattern::pn_not_v_det_n: return "PN-not-V-Det-N";
    case SentencePattern::det_n_v_det_n: return "Det-N-V-Det-N";
    case SentencePattern::pn_v_posspron_n: return "PN-V-PossPron-N";
    case SentencePattern::gerund_is_adj: return "Gerund-is-Adj";
    case SentencePattern::pn_is_gerund: return "PN-is-Gerund";
    case SentencePattern::the_n_is_value: return "The-N-is-Value";
    case SentencePattern::imperative_v_det_n: return "V-Det-N";
    case SentencePattern::pn_v_det_n_and_then_pron_v_pron:
      return "PN-V-Det-N-and-then-Pron-V-Pron";
    case SentencePattern::discourse: return "discourse";
  }
  return "?";
}

}  // namespace ontosem
