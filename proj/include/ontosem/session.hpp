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

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ontosem/definitions.hpp"
#include "ontosem/formula.hpp"
#include "ontosem/hierarchy.hpp"
#include "ontosem/lexicon.hpp"
#include "ontosem/parser.hpp"
#include "ontosem/resolve.hpp"
#include "ontosem/trace.hpp"

namespace ontosem {

struct KnowledgeBase {
  TypeHierarchy hierarchy;
  Lexicon lexicon;
  DefinitionSet definitions;

  const SalienceRegistry& salience() const { return lexicon.salience(); }

  // An empty definitions path loads no definitions.
  static KnowledgeBase load(const std::filesystem::path& hierarchy,
                            const std::filesystem::path& lexicon,
                            const std::filesystem::path& definitions = {});
};

// Directory of the data files shipped with the sources.
std::filesystem::path default_data_dir();

// ontology.hier, core.lex and core.defs from default_data_dir().
KnowledgeBase load_default_knowledge_base();

struct Interpretation {
  Formula condensed;               // first sentence, before resolution
  std::vector<Formula> sentences;  // every parsed sentence
  Formula result;
  DerivationTrace trace;
};

// Resolves, expands definitions, resolves again until nothing changes and
// pushes negation through decompositions.
Interpretation interpret(const KnowledgeBase& kb, const Discourse& d);
Interpretation interpret(const KnowledgeBase& kb, const Formula& f);
Interpretation interpret_text(const KnowledgeBase& kb, std::string_view text);
Interpretation interpret_discourse(const KnowledgeBase& kb,
                                   const std::vector<std::string>& sentences);

// Derives the consequent of `rule` for the individuals of `fact`; both are
// interpreted first. Returns nullopt when the antecedent does not match.
std::optional<Interpretation> infer(const KnowledgeBase& kb,
                                    const std::string& rule,
                                    const std::string& fact);

// A shipped test case: one sentence, a discourse (several lines), or an
// inference (`@infer` followed by the rule and the fact).
struct CorpusCase {
  std::vector<std::string> lines;
  bool inference = false;
  std::size_t line = 0;  // first line in the corpus file
};

// Expected forms for one case: the final LF, and optionally the output of
// a named rule somewhere in the trace.
struct GoldenCase {
  std::optional<std::string> final_form;
  std::vector<std::pair<Rule, std::string>> steps;
};

// Groups are separated by lines holding `---`; `#` starts a comment.
std::vector<CorpusCase> load_corpus(std::istream& in);
// Blocks line up with the corpus groups. Each line is `final: <LF>` or
// `<rule>: <LF>`.
std::vector<GoldenCase> load_golden(std::istream& in);

struct CaseReport {
  std::string label;
  bool passed = false;
  std::vector<std::string> diffs;  // expected vs actual, alpha-normalized
};

std::vector<CaseReport> run_corpus(const KnowledgeBase& kb,
                                   const std::vector<CorpusCase>& cases,
                                   const std::vector<GoldenCase>& golden);

}  // namespace ontosem
