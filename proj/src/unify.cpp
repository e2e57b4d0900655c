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

#include "ontosem/unify.hpp"

#include "ontosem/error.hpp"

namespace ontosem {

namespace {

TypeTerm combine(const std::string& base, const TypeTerm& a,
                 const TypeTerm& b) {
  return {base, unify_modes(a.mode, b.mode), meet(a.card, b.card)};
}

}  // namespace

UnifyOutcome unify(const TypeHierarchy& h, const SalienceRegistry& reg,
                   const TypeTerm& a, const TypeTerm& b) {
  if (!h.contains(a.base)) throw UnknownTypeError(a.base);
  if (!h.contains(b.base)) throw UnknownTypeError(b.base);

  if (h.subsumes(b.base, a.base)) return Single{combine(a.base, a, b)};
  if (h.subsumes(a.base, b.base)) return Single{combine(b.base, a, b)};

  const bool a_first = a.base < b.base;
  const TypeTerm& first = a_first ? a : b;
  const TypeTerm& second = a_first ? b : a;
  if (auto r = reg.msr(h, first.base, first.card, second.base, second.card)) {
    return Bridged{a, b, *r, a_first};
  }
  if (auto r = reg.msr(h, second.base, second.card, first.base, first.card)) {
    return Bridged{a, b, *r, !a_first};
  }
  return Failure{};
}

UnifyOutcome swap_sides(const UnifyOutcome& o) {
  if (const auto* br = std::get_if<Bridged>(&o)) {
    return Bridged{br->right, br->left, br->relation, !br->subject_is_left};
  }
  return o;
}

std::string to_string(const UnifyOutcome& o) {
  if (const auto* s = std::get_if<Single>(&o)) {
    return "Single(" + to_string(s->result) + ")";
  }
  if (const auto* br = std::get_if<Bridged>(&o)) {
    return "Bridged(" + to_string(br->left) + ", " + to_string(br->right) +
           ", " + br->relation.rel + ")";
  }
  return "Failure";
}

}  // namespace ontosem
