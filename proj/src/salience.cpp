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

#include "ontosem/salience.hpp"

#include <algorithm>
#include <string>

#include "ontosem/error.hpp"
#include "text_util.hpp"

namespace ontosem {

std::string to_string(const RelationSignature& sig) {
  auto card = [](Cardinality c) {
    return c == Cardinality::unconstrained ? std::string("_") : to_string(c);
  };
  return "<" + sig.rel + "," + card(sig.subject.card) + "," +
         card(sig.object.card) + ">";
}

namespace {

void require_type(const TypeHierarchy& h, const std::string& t) {
  if (!h.contains(t)) throw UnknownTypeError(t);
}

}  // namespace

void SalienceRegistry::add_property(const TypeHierarchy& h,
                                    PropertySignature sig) {
  require_type(h, sig.applies_to.base);
  if (sig.applies_to.base == TypeHierarchy::kRoot) {
    warnings_.push_back("property " + sig.prop +
                        " declared on 'thing' is unreachable; ignored");
    return;
  }
  auto& list = props_[sig.applies_to.base];
  if (std::find(list.begin(), list.end(), sig) != list.end()) {
    throw RegistryError("duplicate property " + sig.prop + " on " +
                        sig.applies_to.base);
  }
  list.push_back(std::move(sig));
}

void SalienceRegistry::add_relation(const TypeHierarchy& h,
                                    RelationSignature sig) {
  require_type(h, sig.subject.base);
  require_type(h, sig.object.base);
  if (sig.object.base == TypeHierarchy::kRoot) {
    warnings_.push_back("relation " + sig.rel +
                        " with object 'thing' is unreachable; ignored");
    return;
  }
  auto& list = rels_[{sig.subject.base, sig.object.base}];
  if (std::find(list.begin(), list.end(), sig) != list.end()) {
    throw RegistryError("duplicate relation " + to_string(sig) + " on (" +
                        sig.subject.base + ", " + sig.object.base + ")");
  }
  list.push_back(std::move(sig));
}

void SalienceRegistry::add_declaration(const TypeHierarchy& h,
                                       const std::vector<std::string>& words,
                                       std::size_t line) {
  auto where = [&] { return "line " + std::to_string(line) + ": "; };
  try {
    if (words.size() == 3 && words[0] == "prop") {
      add_property(h, {words[1], parse_type_term(words[2])});
    } else if (words.size() == 4 && words[0] == "rel") {
      add_relation(h, {words[1], parse_type_term(words[2]),
                       parse_type_term(words[3])});
    } else {
      throw ParseError(where() + "expected 'prop <NAME> <type>' or "
                                 "'rel <NAME> <type> <type>'",
                       line);
    }
  } catch (const UnknownTypeError& e) {
    throw RegistryError(where() + e.what());
  }
}

std::vector<std::string> SalienceRegistry::lpap(const TypeHierarchy& h,
                                                const std::string& t) const {
  require_type(h, t);
  std::vector<std::string> out;
  if (auto it = props_.find(t); it != props_.end()) {
    for (const auto& sig : it->second) out.push_back(sig.prop);
  }
  return out;
}

std::vector<std::vector<std::string>> SalienceRegistry::lpap_star(
    const TypeHierarchy& h, const std::string& t) const {
  std::vector<std::vector<std::string>> out;
  for (std::string cur = t; cur != TypeHierarchy::kRoot; cur = *h.sup(cur)) {
    out.push_back(lpap(h, cur));
  }
  return out;
}

std::vector<RelationSignature> SalienceRegistry::lraps(
    const TypeHierarchy& h, const std::string& s, const std::string& t) const {
  require_type(h, s);
  require_type(h, t);
  if (auto it = rels_.find({s, t}); it != rels_.end()) return it->second;
  return {};
}

std::vector<std::vector<RelationSignature>> SalienceRegistry::lraps_star(
    const TypeHierarchy& h, const std::string& s, const std::string& t) const {
  require_type(h, s);
  std::vector<std::vector<RelationSignature>> out;
  for (std::string cur = t; cur != TypeHierarchy::kRoot; cur = *h.sup(cur)) {
    out.push_back(lraps(h, s, cur));
  }
  return out;
}

std::optional<RelationSignature> SalienceRegistry::msr(
    const TypeHierarchy& h, const std::string& s, Cardinality m,
    const std::string& t, Cardinality n) const {
  for (const auto& level : lraps_star(h, s, t)) {
    for (const auto& sig : level) {
      if (satisfies(sig.subject.card, m) && satisfies(sig.object.card, n)) {
        return sig;
      }
    }
  }
  return std::nullopt;
}

bool SalienceRegistry::remove_relation(const std::string& s,
                                       const std::string& t,
                                       const std::string& rel) {
  auto it = rels_.find({s, t});
  if (it == rels_.end()) return false;
  auto& list = it->second;
  auto pos = std::find_if(list.begin(), list.end(),
                          [&](const auto& sig) { return sig.rel == rel; });
  if (pos == list.end()) return false;
  list.erase(pos);
  return true;
}

SalienceRegistry SalienceRegistry::load(const TypeHierarchy& h,
                                        std::istream& in) {
  SalienceRegistry reg;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) continue;
    reg.add_declaration(h, words, lineno);
  }
  return reg;
}

}  // namespace ontosem
