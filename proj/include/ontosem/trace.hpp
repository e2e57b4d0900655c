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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontosem/formula.hpp"
#include "ontosem/lf.hpp"

namespace ontosem {

enum class Rule {
  const_subst,
  unify_subsume,
  unify_mode,
  bridge,
  anaphor_bind,
  retract,
  expand,
  copula,
  modus_ponens,
};

std::string to_string(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

struct TraceStep {
  Rule rule;
  Formula before;
  Formula after;
  std::string note;
};

// Ordered rewrite steps; each step starts from the previous step's result.
class DerivationTrace {
 public:
  void add(Rule rule, Formula before, Formula after, std::string note = {});
  void append(const DerivationTrace& other);

  const std::vector<TraceStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }

  // Whether every step's `before` is the previous step's `after`.
  bool is_chained() const;

  // One line per step: `[rule] before ⇒ after`, notes appended after ` -- `.
  // The ASCII rendering uses `=>`.
  std::string render(Syntax syntax = Syntax::unicode) const;

 private:
  std::vector<TraceStep> steps_;
};

}  // namespace ontosem
