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

#include "ontosem/hierarchy.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ontosem/error.hpp"
#include "ontosem/type_term.hpp"
#include "text_util.hpp"

namespace ontosem {

TypeHierarchy::TypeHierarchy() { order_.emplace_back(kRoot); }

void TypeHierarchy::add_type(const std::string& child,
                             const std::string& parent) {
  if (child == kRoot) {
    throw HierarchyError("the root type 'thing' may not gain a parent");
  }
  if (child.empty() || !is_identifier_start(child[0])) {
    throw HierarchyError("invalid type name '" + child + "'");
  }
  if (contains(child)) {
    throw HierarchyError("duplicate type '" + child + "'");
  }
  if (!contains(parent)) {
    throw HierarchyError("unknown parent type '" + parent + "' for '" + child +
                         "'");
  }
  order_.push_back(child);
  parent_.emplace(child, parent);
}

TypeHierarchy TypeHierarchy::with_type(const std::string& child,
                                       const std::string& parent) const {
  TypeHierarchy copy = *this;
  copy.add_type(child, parent);
  return copy;
}

bool TypeHierarchy::contains(std::string_view t) const {
  return t == kRoot || parent_.find(std::string(t)) != parent_.end();
}

void TypeHierarchy::require(std::string_view t) const {
  if (!contains(t)) throw UnknownTypeError(std::string(t));
}

const std::string& TypeHierarchy::parent_of(std::string_view t) const {
  return parent_.at(std::string(t));
}

std::optional<std::string> TypeHierarchy::sup(std::string_view t) const {
  require(t);
  if (t == kRoot) return std::nullopt;
  return parent_of(t);
}

bool TypeHierarchy::subsumes(std::string_view general,
                             std::string_view specific) const {
  require(general);
  require(specific);
  std::string_view cur = specific;
  while (true) {
    if (cur == general) return true;
    if (cur == kRoot) return false;
    cur = parent_of(cur);
  }
}

std::size_t TypeHierarchy::depth(std::string_view t) const {
  require(t);
  std::size_t d = 0;
  for (std::string_view cur = t; cur != kRoot; cur = parent_of(cur)) ++d;
  return d;
}

std::vector<std::string> TypeHierarchy::ancestors(std::string_view t) const {
  require(t);
  std::vector<std::string> path{std::string(t)};
  for (std::string_view cur = t; cur != kRoot;) {
    cur = parent_of(cur);
    path.emplace_back(cur);
  }
  return path;
}

TypeHierarchy TypeHierarchy::load(std::istream& in) {
  struct Decl {
    std::string child, parent;
    std::size_t line;
  };
  std::vector<Decl> decls;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) continue;
    if (words.size() != 4 || words[0] != "type" || words[2] != "<") {
      throw ParseError("line " + std::to_string(lineno) +
                           ": expected 'type <child> < <parent>'",
                       lineno);
    }
    decls.push_back({words[1], words[3], lineno});
  }

  TypeHierarchy h;
  std::set<std::string> declared;
  for (const auto& d : decls) {
    if (d.child == kRoot) {
      throw HierarchyError("line " + std::to_string(d.line) +
                           ": the root type 'thing' may not gain a parent");
    }
    if (!declared.insert(d.child).second) {
      throw HierarchyError("line " + std::to_string(d.line) +
                           ": duplicate type '" + d.child + "'");
    }
  }
  // Second pass: attach whatever has a known parent until nothing moves.
  std::vector<Decl> pending = decls;
  while (!pending.empty()) {
    std::vector<Decl> next;
    for (const auto& d : pending) {
      if (h.contains(d.parent)) {
        h.add_type(d.child, d.parent);
      } else {
        next.push_back(d);
      }
    }
    if (next.size() == pending.size()) {
      const auto& d = next.front();
      if (declared.count(d.parent)) {
        throw HierarchyError("line " + std::to_string(d.line) +
                             ": declaring '" + d.child + " < " + d.parent +
                             "' would create a cycle");
      }
      throw HierarchyError("line " + std::to_string(d.line) +
                           ": unknown parent type '" + d.parent + "'");
    }
    pending = std::move(next);
  }
  return h;
}

TypeHierarchy TypeHierarchy::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hierarchy file '" + path.string() + "'");
  return load(in);
}

}  // namespace ontosem
