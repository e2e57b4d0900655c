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

#include "ontosem/trace.hpp"

#include <array>

namespace ontosem {

namespace {

constexpr std::array<std::string_view, 9> kRuleNames = {
    "const-subst", "unify-subsume", "unify-mode",
    "bridge",      "anaphor-bind",  "retract",
    "expand",      "copula",        "modus-ponens",
};

}  // namespace

std::string to_string(Rule r) {
  return std::string(kRuleNames[static_cast<std::size_t>(r)]);
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

void DerivationTrace::add(Rule rule, Formula before, Formula after,
                          std::string note) {
  steps_.push_back({rule, std::move(before), std::move(after), std::move(note)});
}

void DerivationTrace::append(const DerivationTrace& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

bool DerivationTrace::is_chained() const {
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    if (!(steps_[i].before == steps_[i - 1].after)) return false;
  }
  return true;
}

std::string DerivationTrace::render(Syntax syntax) const {
  const char* arrow = syntax == Syntax::ascii ? " => " : " ⇒ ";
  std::string out;
  for (const auto& s : steps_) {
    out += "[" + to_string(s.rule) + "] " + to_string(s.before, syntax) +
           arrow + to_string(s.after, syntax);
    if (!s.note.empty()) out += " -- " + s.note;
    out += "\n";
  }
  return out;
}

}  // namespace ontosem
