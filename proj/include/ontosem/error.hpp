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
#include <stdexcept>
#include <string>

namespace ontosem {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: LF DSL, data files, or controlled English.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownTypeError : public Error {
 public:
  explicit UnknownTypeError(const std::string& type)
      : Error("unknown type '" + type + "'"), type_(type) {}
  const std::string& type() const { return type_; }

 private:
  std::string type_;
};

class HierarchyError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

// The bottom case of type unification: neither subsumption nor a salient
// relation links the two types demanded of one variable.
class UnificationError : public Error {
 public:
  UnificationError(const std::string& var, const std::string& left,
                   const std::string& right)
      : Error("cannot unify types of '" + var + "': " + left + " and " +
              right + " (no subsumption, no salient relation)"),
        var_(var),
        left_(left),
        right_(right) {}
  const std::string& var() const { return var_; }
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }

 private:
  std::string var_, left_, right_;
};

// Discourse-level failure, e.g. a pronoun with no admissible antecedent.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class DefinitionError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace ontosem
