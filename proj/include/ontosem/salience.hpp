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

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontosem/hierarchy.hpp"
#include "ontosem/type_term.hpp"

namespace ontosem {

// pap(P, t): the property P applies to objects of type t.
struct PropertySignature {
  std::string prop;
  TypeTerm applies_to;
  friend bool operator==(const PropertySignature&,
                         const PropertySignature&) = default;
};

// rap(R, s^m, t^n).
struct RelationSignature {
  std::string rel;
  TypeTerm subject;
  TypeTerm object;
  friend bool operator==(const RelationSignature&,
                         const RelationSignature&) = default;
};

std::string to_string(const RelationSignature& sig);

// Ordered property and relation applicability lists. Position inside a list
// is salience: earlier entries are more salient.
class SalienceRegistry {
 public:
  // Declarations attached to `thing` can never be reached by the starred
  // lists, so they are dropped and a warning is recorded instead.
  void add_property(const TypeHierarchy& h, PropertySignature sig);
  void add_relation(const TypeHierarchy& h, RelationSignature sig);

  // Accepts one tokenized `prop ...` or `rel ...` line.
  void add_declaration(const TypeHierarchy& h,
                       const std::vector<std::string>& words,
                       std::size_t line = 0);

  std::vector<std::string> lpap(const TypeHierarchy& h,
                                const std::string& t) const;
  std::vector<std::vector<std::string>> lpap_star(const TypeHierarchy& h,
                                                  const std::string& t) const;
  std::vector<RelationSignature> lraps(const TypeHierarchy& h,
                                       const std::string& s,
                                       const std::string& t) const;
  // Ascends the object (second) type only.
  std::vector<std::vector<RelationSignature>> lraps_star(
      const TypeHierarchy& h, const std::string& s,
      const std::string& t) const;

  // Most salient relation: head of the flattened lraps_star(s, t) after
  // keeping signatures whose declared cardinalities admit (m, n).
  std::optional<RelationSignature> msr(const TypeHierarchy& h,
                                       const std::string& s, Cardinality m,
                                       const std::string& t,
                                       Cardinality n) const;

  // Removes a relation signature from the exact (s, t) list; returns whether
  // anything was removed.
  bool remove_relation(const std::string& s, const std::string& t,
                       const std::string& rel);

  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return props_.empty() && rels_.empty(); }

  // Loads a file holding only `prop`/`rel` lines.
  static SalienceRegistry load(const TypeHierarchy& h, std::istream& in);

 private:
  std::map<std::string, std::vector<PropertySignature>> props_;
  std::map<std::pair<std::string, std::string>, std::vector<RelationSignature>>
      rels_;
  std::vector<std::string> warnings_;
};

}  // namespace ontosem
