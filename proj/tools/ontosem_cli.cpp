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

// Command-line front end.
//
// Exit status: 0 success, 1 parse or input error, 2 semantic failure
// (unification, resolution, definitions) or msr ⊥, 3 corpus mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ontosem/definitions.hpp"
#include "ontosem/error.hpp"
#include "ontosem/lf.hpp"
#include "ontosem/session.hpp"
#include "ontosem/unify.hpp"

namespace {

using namespace ontosem;

enum Exit { kOk = 0, kInput = 1, kSemantic = 2, kMismatch = 3 };

struct Options {
  std::string hierarchy;
  std::string lexicon;
  std::string defs;
  std::string trace = "final";
  bool enumerate = false;
  bool ascii = false;
};

Syntax syntax(const Options& o) { return o.ascii ? Syntax::ascii : Syntax::unicode; }

KnowledgeBase load(const Options& o) {
  auto dir = default_data_dir();
  std::filesystem::path h = o.hierarchy.empty() ? dir / "ontology.hier"
                                                : std::filesystem::path(o.hierarchy);
  std::filesystem::path l = o.lexicon.empty() ? dir / "core.lex"
                                              : std::filesystem::path(o.lexicon);
  std::filesystem::path d = o.defs.empty() ? dir / "core.defs"
                                           : std::filesystem::path(o.defs);
  if (o.defs == "none") d.clear();
  return KnowledgeBase::load(h, l, d);
}

bool looks_like_lf(const std::string& s) {
  if (s.find('(') != std::string::npos) return true;
  for (const char* q : {"E ", "E1 ", "A ", "∃", "∀"}) {
    if (s.rfind(q, 0) == 0) return true;
  }
  return false;
}

void print(const Options& o, const Interpretation& r) {
  if (o.trace == "steps") std::cout << r.trace.render(syntax(o));
  if (o.enumerate) {
    auto readings = enumerate_readings(r.result);
    for (std::size_t i = 0; i < readings.size(); ++i) {
      std::cout << "reading " << i + 1 << ": " << to_string(readings[i], syntax(o))
                << "\n";
    }
    return;
  }
  std::cout << to_string(r.result, syntax(o)) << "\n";
}

int cmd_interpret(const Options& o, const std::vector<std::string>& inputs,
                  bool discourse_mode) {
  if (inputs.empty() || (inputs.size() == 1 && inputs[0].empty())) {
    throw ParseError("empty input; no sentence pattern matches (nearest: PN-is-a-N)");
  }
  KnowledgeBase kb = load(o);
  if (discourse_mode || inputs.size() > 1) {
    print(o, interpret_discourse(kb, inputs));
  } else if (looks_like_lf(inputs[0])) {
    print(o, interpret(kb, parse_lf(inputs[0])));
  } else {
    print(o, interpret_text(kb, inputs[0]));
  }
  return kOk;
}

int cmd_unify(const Options& o, const std::string& a, const std::string& b) {
  KnowledgeBase kb = load(o);
  TypeTerm s = parse_type_term(a);
  TypeTerm t = parse_type_term(b);
  for (const auto& x : {s.base, t.base}) {
    if (!kb.hierarchy.contains(x)) throw UnknownTypeError(x);
  }
  auto outcome = unify(kb.hierarchy, kb.salience(), s, t);
  std::cout << to_string(outcome) << "\n";
  return std::holds_alternative<Failure>(outcome) ? kSemantic : kOk;
}

int cmd_msr(const Options& o, const std::string& a, const std::string& b) {
  KnowledgeBase kb = load(o);
  TypeTerm s = parse_type_term(a);
  TypeTerm t = parse_type_term(b);
  for (const auto& x : {s.base, t.base}) {
    if (!kb.hierarchy.contains(x)) throw UnknownTypeError(x);
  }
  auto r = kb.salience().msr(kb.hierarchy, s.base, s.card, t.base, t.card);
  if (!r) {
    std::cout << (o.ascii ? "_|_" : "⊥") << "\n";
    return kSemantic;
  }
  std::cout << r->rel << "\n";
  return kOk;
}

int cmd_corpus(const Options& o, const std::string& path, std::string golden) {
  KnowledgeBase kb = load(o);
  if (golden.empty()) {
    golden = std::filesystem::path(path).replace_extension(".golden").string();
  }
  std::ifstream cin_(path);
  if (!cin_) throw Error("cannot open corpus " + path);
  auto cases = load_corpus(cin_);
  std::vector<GoldenCase> expected;
  std::ifstream gin(golden);
  if (gin) expected = load_golden(gin);
  auto reports = run_corpus(kb, cases, expected);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.label << "\n";
    for (const auto& d : r.diffs) std::cout << "  " << d << "\n";
    passed += r.passed;
  }
  std::cout << passed << "/" << reports.size() << " cases passed\n";
  return passed == reports.size() ? kOk : kMismatch;
}

int cmd_infer(const Options& o, const std::string& rule, const std::string& fact) {
  KnowledgeBase kb = load(o);
  auto r = infer(kb, rule, fact);
  if (!r) {
    std::cerr << "the rule does not apply to the fact\n";
    return kSemantic;
  }
  print(o, *r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed compositional semantics over a commonsense ontology"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI file with default option values")
      ->envname("ONTOSEM_CONFIG");

  Options o;
  app.add_option("--hierarchy", o.hierarchy, "Type hierarchy file");
  app.add_option("--lexicon", o.lexicon, "Lexicon and salience file");
  app.add_option("--defs", o.defs, "Definitions file ('none' to skip)");
  app.add_option("--trace", o.trace, "Trace verbosity")
      ->check(CLI::IsMember({"final", "steps"}));
  app.add_flag("--enumerate-readings", o.enumerate,
               "Split disjunctions into separate readings");
  app.add_flag("--ascii", o.ascii, "ASCII output (E1, =>)");

  std::vector<std::string> inputs;
  bool discourse = false;
  auto* interp = app.add_subcommand("interpret", "Interpret a sentence, LF or discourse");
  interp->add_option("input", inputs, "Sentence(s) or LF text");
  interp->add_flag("--discourse", discourse, "Treat each input as one sentence of a discourse");

  std::string a, b;
  auto* uni = app.add_subcommand("unify", "Unify two type terms");
  uni->add_option("s", a)->required();
  uni->add_option("t", b)->required();

  auto* msr = app.add_subcommand("msr", "Most salient relation between two types");
  msr->add_option("s", a)->required();
  msr->add_option("t", b)->required();

  std::string corpus, golden;
  auto* cor = app.add_subcommand("corpus", "Run a corpus against its golden file");
  cor->add_option("corpus", corpus)->required();
  cor->add_option("--golden", golden, "Golden file (default: <corpus>.golden)");

  auto* inf = app.add_subcommand("infer", "Apply a rule sentence to a fact sentence");
  inf->add_option("rule", a)->required();
  inf->add_option("fact", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*interp) return cmd_interpret(o, inputs, discourse);
    if (*uni) return cmd_unify(o, a, b);
    if (*msr) return cmd_msr(o, a, b);
    if (*cor) return cmd_corpus(o, corpus, golden);
    if (*inf) return cmd_infer(o, a, b);
  } catch (const UnificationError& e) {
    std::cerr << "unification failed: " << e.what() << "\n";
    return kSemantic;
  } catch (const ResolutionError& e) {
    std::cerr << "resolution failed: " << e.what() << "\n";
    return kSemantic;
  } catch (const DefinitionError& e) {
    std::cerr << "definition error: " << e.what() << "\n";
    return kSemantic;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
