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
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontosem {

// Single-parent subsumption tree rooted at `thing`.
//
// Immutable once loaded; every query is const and safe to share across
// threads.
class TypeHierarchy {
 public:
  static constexpr std::string_view kRoot = "thing";

  TypeHierarchy();

  // Adds `child` under `parent`. Throws HierarchyError on a duplicate child,
  // an attempt to give the root a parent, or an unknown parent.
  void add_type(const std::string& child, const std::string& parent);

  // Value-returning variant of add_type.
  TypeHierarchy with_type(const std::string& child,
                          const std::string& parent) const;

  bool contains(std::string_view t) const;

  // The unique parent, or nullopt for the root. Throws UnknownTypeError.
  std::optional<std::string> sup(std::string_view t) const;

  // Reflexive-transitive closure of sup.
  bool subsumes(std::string_view general, std::string_view specific) const;

  // Number of sup steps from t to the root.
  std::size_t depth(std::string_view t) const;

  // t, sup(t), ..., thing.
  std::vector<std::string> ancestors(std::string_view t) const;

  // Types in insertion order, root first.
  const std::vector<std::string>& types() const { return order_; }
  std::size_t size() const { return order_.size(); }

  // Line format: `type <child> < <parent>`, `#` comments, blank lines.
  // Declarations may appear in any order; parents are resolved in a second
  // pass and cycles are reported.
  static TypeHierarchy load(std::istream& in);
  static TypeHierarchy load_file(const std::filesystem::path& path);

 private:
  const std::string& parent_of(std::string_view t) const;
  void require(std::string_view t) const;

  std::vector<std::string> order_;
  std::unordered_map<std::string, std::string> parent_;
};

}  // namespace ontosem
