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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ontosem/formula.hpp"

namespace ontosem {

// The types a bound variable has to satisfy in its scope: its binder types
// followed by the signature of every occurrence, in textual order.
struct TypeObligation {
  std::string var;
  std::vector<TypeTerm> demands;
};

// One entry per binder, in binder (pre-)order. Untyped binders whose
// variable meets no signature are skipped.
std::vector<TypeObligation> collect_obligations(const Formula& f);

// Calls fn for each free occurrence of `var` in f, in textual order.
void for_each_occurrence(const Formula& f, const std::string& var,
                         const std::function<void(const Argument&)>& fn);

// Rewrites each free occurrence of `var`; fn receives the occurrence index
// in textual order.
Formula map_occurrences(
    const Formula& f, const std::string& var,
    const std::function<Argument(std::size_t, const Argument&)>& fn);

// Merges `drop` into `keep`: removes the binder of `drop` and every
// be(keep, drop) / be(drop, keep) conjunct, renames `drop` to `keep`, and
// appends the binder types of `drop` to those of `keep`.
// Throws ResolutionError when either variable is unbound.
Formula merge_identical(const Formula& f, const std::string& keep,
                        const std::string& drop);

// The constant-substitution step Pa == Ex[Px & x = a]: `c` must be a
// constant and be(c, v) or be(v, c) must occur. Substituting a variable for
// itself returns f unchanged.
Formula substitute_constant(const Formula& f, const std::string& v,
                            const std::string& c);

}  // namespace ontosem
