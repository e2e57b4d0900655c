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

#include "ontosem/session.hpp"

#include <fstream>

#include "ontosem/error.hpp"
#include "ontosem/lf.hpp"
#include "text_util.hpp"

namespace ontosem {

namespace {

constexpr int kExpansionLimit = 32;

std::string normal(const Formula& f) { return to_string(alpha_normalize(f)); }

std::string join(const std::vector<std::string>& lines, const char* sep) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += sep;
    out += l;
  }
  return out;
}

}  // namespace

KnowledgeBase KnowledgeBase::load(const std::filesystem::path& hierarchy,
                                  const std::filesystem::path& lexicon,
                                  const std::filesystem::path& definitions) {
  KnowledgeBase kb;
  kb.hierarchy = TypeHierarchy::load_file(hierarchy);
  kb.lexicon = Lexicon::load_file(kb.hierarchy, lexicon);
  if (!definitions.empty()) {
    kb.definitions = DefinitionSet::load_file(kb.hierarchy, definitions);
  }
  return kb;
}

std::filesystem::path default_data_dir() { return ONTOSEM_DATA_DIR; }

KnowledgeBase load_default_knowledge_base() {
  auto dir = default_data_dir();
  return KnowledgeBase::load(dir / "ontology.hier", dir / "core.lex",
                             dir / "core.defs");
}

Interpretation interpret(const KnowledgeBase& kb, const Discourse& d) {
  if (d.sentences.empty()) throw ParseError("nothing to interpret");
  Interpretation out;
  out.condensed = d.sentences.front();
  out.sentences = d.sentences;
  Resolution r = d.sentences.size() == 1 && d.slots.empty()
                     ? resolve_scope(kb.hierarchy, kb.salience(), d.sentences[0])
                     : resolve_discourse(kb.hierarchy, kb.salience(), d);
  out.trace = std::move(r.trace);
  Formula f = r.result;
  for (int i = 0;; ++i) {
    if (i == kExpansionLimit) {
      throw DefinitionError("definitions keep expanding");
    }
    Formula e = expand(kb.definitions, f);
    if (e == f) break;
    out.trace.add(Rule::expand, f, e, "definitions");
    Resolution again = resolve_scope(kb.hierarchy, kb.salience(), e);
    out.trace.append(again.trace);
    f = again.result;
  }
  Formula n = expand_negated(kb.definitions, f);
  if (!(n == f)) {
    out.trace.add(Rule::expand, f, n, "negated decomposition");
    f = n;
  }
  out.result = f;
  return out;
}

Interpretation interpret(const KnowledgeBase& kb, const Formula& f) {
  return interpret(kb, Discourse{{f}, {}});
}

Interpretation interpret_text(const KnowledgeBase& kb, std::string_view text) {
  return interpret(kb, parse_text(kb.lexicon, text).discourse);
}

Interpretation interpret_discourse(const KnowledgeBase& kb,
                                   const std::vector<std::string>& sentences) {
  return interpret(kb, parse_discourse(kb.lexicon, sentences).discourse);
}

std::optional<Interpretation> infer(const KnowledgeBase& kb,
                                    const std::string& rule,
                                    const std::string& fact) {
  Interpretation r = interpret_text(kb, rule);
  Interpretation f = interpret_text(kb, fact);
  auto derived = apply_modus_ponens(kb.hierarchy, r.result, f.result);
  if (!derived) return std::nullopt;
  Interpretation out;
  out.condensed = r.condensed;
  out.sentences = {r.result, f.result};
  out.result = *derived;
  out.trace.add(Rule::modus_ponens, make_and({r.result, f.result}), *derived,
                "rule applied to the fact's individuals");
  return out;
}

std::vector<CorpusCase> load_corpus(std::istream& in) {
  std::vector<CorpusCase> out;
  CorpusCase current;
  auto flush = [&] {
    if (!current.lines.empty()) out.push_back(current);
    current = {};
  };
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text(detail::trim(detail::strip_comment(raw)));
    if (text.empty()) continue;
    if (text == "---") {
      flush();
      continue;
    }
    if (text == "@infer") {
      current.inference = true;
      if (!current.line) current.line = line;
      continue;
    }
    if (current.lines.empty() && !current.line) current.line = line;
    current.lines.push_back(text);
  }
  flush();
  for (const auto& c : out) {
    if (c.inference && c.lines.size() != 2) {
      throw ParseError("line " + std::to_string(c.line) +
                           ": @infer takes a rule and a fact",
                       c.line);
    }
  }
  return out;
}

std::vector<GoldenCase> load_golden(std::istream& in) {
  std::vector<GoldenCase> out(1);
  bool any = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text(detail::trim(detail::strip_comment(raw)));
    if (text.empty()) continue;
    if (text == "---") {
      if (any) out.emplace_back();
      any = false;
      continue;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(line) +
                           ": expected 'final: <LF>' or '<rule>: <LF>'",
                       line);
    }
    std::string key(detail::trim(std::string_view(text).substr(0, colon)));
    std::string form(detail::trim(std::string_view(text).substr(colon + 1)));
    parse_lf(form);  // reject malformed goldens early
    if (key == "final") {
      out.back().final_form = form;
    } else if (auto rule = parse_rule(key)) {
      out.back().steps.emplace_back(*rule, form);
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key '" +
                           key + "'",
                       line);
    }
    any = true;
  }
  if (!any) out.pop_back();
  return out;
}

std::vector<CaseReport> run_corpus(const KnowledgeBase& kb,
                                   const std::vector<CorpusCase>& cases,
                                   const std::vector<GoldenCase>& golden) {
  std::vector<CaseReport> out;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CorpusCase& c = cases[i];
    CaseReport report;
    report.label = join(c.lines, " / ");
    if (c.inference) report.label = "infer " + report.label;
    if (i >= golden.size() || !golden[i].final_form) {
      report.diffs.push_back("missing golden");
      out.push_back(std::move(report));
      continue;
    }
    const GoldenCase& g = golden[i];
    try {
      std::optional<Interpretation> result;
      if (c.inference) {
        result = infer(kb, c.lines[0], c.lines[1]);
        if (!result) throw ResolutionError("the rule does not apply");
      } else {
        result = interpret_discourse(kb, c.lines);
      }
      std::string expected = normal(parse_lf(*g.final_form));
      std::string actual = normal(result->result);
      if (expected != actual) {
        report.diffs.push_back("final\n  expected: " + expected +
                               "\n  actual:   " + actual);
      }
      for (const auto& [rule, form] : g.steps) {
        std::string want = normal(parse_lf(form));
        bool found = false;
        for (const auto& s : result->trace.steps()) {
          found = found || (s.rule == rule && normal(s.after) == want);
        }
        if (!found) {
          report.diffs.push_back("no [" + to_string(rule) +
                                 "] step yields " + want);
        }
      }
    } catch (const Error& e) {
      report.diffs.push_back(std::string("error: ") + e.what());
    }
    report.passed = report.diffs.empty();
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace ontosem
