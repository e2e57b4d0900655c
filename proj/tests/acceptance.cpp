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

// Acceptance runner: one PASS/FAIL line per criterion.
//
// Usage: acceptance [path-to-test_properties]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle_cases.hpp"
#include "ontosem/definitions.hpp"
#include "ontosem/error.hpp"
#include "ontosem/obligations.hpp"
#include "ontosem/unify.hpp"

namespace {

using namespace ontosem;
using test::normal;
using test::default_kb;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Outcome goldens() {
  Outcome o;
  std::ifstream c(default_data_dir() / "corpus" / "shipped.corpus");
  std::ifstream g(default_data_dir() / "corpus" / "shipped.golden");
  auto reports = run_corpus(default_kb(), load_corpus(c), load_golden(g));
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed;
    o.require(r.passed, r.label);
  }
  o.require(reports.size() == 22, "expected 22 cases");
  if (o.pass) o.detail = std::to_string(passed) + "/" + std::to_string(reports.size());
  return o;
}

Outcome msr_table() {
  Outcome o;
  const auto& h = default_kb().hierarchy;
  auto card = Lexicon::load_file(h, default_data_dir() / "cardinality.lex");
  using C = Cardinality;
  auto rel = [&](const SalienceRegistry& r, const char* s, C m, const char* t, C n) {
    auto x = r.msr(h, s, m, t, n);
    return x ? x->rel : std::string("_|_");
  };
  std::string drive = rel(card.salience(), "human", C::one, "car", C::one);
  std::string ride = rel(card.salience(), "human", C::many, "car", C::one);
  std::string eat = rel(default_kb().salience(), "human", C::unconstrained, "sandwich",
                        C::unconstrained);
  o.require(drive == "DRIVE", "msr(human:1, car:1) = " + drive);
  o.require(ride == "RIDE", "msr(human:1+, car:1) = " + ride);
  o.require(eat == "EAT", "msr(human, sandwich) = " + eat);
  if (o.pass) o.detail = "DRIVE, RIDE, EAT";
  return o;
}

Outcome oracle_suite() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::uint64_t models = 0;
  for (const auto& c : test::all_oracle_cases()) {
    auto r = test::run(c);
    models += r.models;
    o.require(r.holds, c.name + " (" + r.counterexample + ")");
    o.require(r.relevant > 0, c.name + ": no model satisfies the axioms");
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << models << " models in " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

bool mentions_rising_of_value(const Formula& f) {
  std::set<std::string> valued, rising;
  visit(f, [&](const Formula& g) {
    const auto* a = g.as<Atom>();
    if (!a || a->args.empty() || !a->args[0].term.is_var()) return;
    if (a->name == "VALUE") valued.insert(a->args[0].term.text);
    if (a->name == "RISING") rising.insert(a->args[0].term.text);
  });
  for (const auto& v : valued)
    if (rising.count(v)) return true;
  return false;
}

Outcome negative_entailment() {
  Outcome o;
  const auto& kb = default_kb();
  auto r = interpret_discourse(kb, {"the temperature is 90", "the temperature is rising"});
  o.require(normal(r.result) ==
                normal("E1 x:temperature . E1 p:process . VALUE(x,90) & RISING(p) & gt(x,p)"),
            "discourse gave " + to_string(r.result));
  bool leak = mentions_rising_of_value(r.result);
  for (const auto& s : r.trace.steps()) leak = leak || mentions_rising_of_value(s.after);
  o.require(!leak, "a derived form applies RISING to the value");

  auto value = copula_reading(kb.hierarchy, kb.salience(), TypeTerm("temperature"),
                              TypeTerm("measure"));
  auto rising = copula_reading(kb.hierarchy, kb.salience(), TypeTerm("temperature"),
                               TypeTerm("process"));
  o.require(value && value->kind == CopulaReading::Kind::identity,
            "'is 90' is not an identity");
  o.require(rising && rising->kind == CopulaReading::Kind::relation &&
                rising->relation == "gt",
            "'is rising' is not gt");
  o.require(std::holds_alternative<Failure>(
                unify(kb.hierarchy, kb.salience(), TypeTerm("measure"), TypeTerm("process"))),
            "measure and process unify");
  // Reading "90 is rising" needs a measure to be a process.
  auto throws = [&](const Formula& f) {
    try {
      resolve_scope(kb.hierarchy, kb.salience(), f);
    } catch (const UnificationError&) {
      return true;
    }
    return false;
  };
  bool blocked =
      throws(parse_lf("E1 v:measure . RISING(v:process)")) &&
      throws(merge_identical(
          parse_lf("E1 v:measure . E1 p:process . RISING(p) & be(v,p)"), "v", "p"));
  o.require(blocked, "substitution across the readings was not blocked");
  if (o.pass) o.detail = "identity vs gt; measure . process = _|_";
  return o;
}

std::optional<ExistenceMode> mode_of(const Formula& f, const std::string& type) {
  std::optional<ExistenceMode> out;
  visit(f, [&](const Formula& g) {
    const auto* q = g.as<Quantified>();
    if (q && !out && q->types.size() == 1 && q->types[0].base == type) out = q->types[0].mode;
  });
  return out;
}

Outcome intensionality() {
  Outcome o;
  const auto& kb = default_kb();
  auto painted = interpret_text(kb, "jon painted a dog");
  auto own = interpret_text(kb, "jon painted his own dog");
  auto trip = interpret_discourse(kb, {"jon planned the trip", "it was lengthy"});
  o.require(mode_of(painted.result, "dog") == ExistenceMode::abstract,
            "painted dog is not abstract");
  o.require(mode_of(own.result, "dog") == ExistenceMode::actual, "owned dog is not actual");
  bool retract = false;
  for (const auto& s : trip.trace.steps()) retract = retract || s.rule == Rule::retract;
  o.require(retract, "no retract step");
  o.require(mode_of(trip.result, "trip") == ExistenceMode::actual, "trip not actual");
  std::string planned = to_string(interpret_text(kb, "jon planned the trip").result);
  o.require(planned.find("trip^a") != std::string::npos, "planned trip not abstract");
  if (o.pass) o.detail = "dog^a, dog, trip^a -> trip";
  return o;
}

Outcome properties(const char* binary) {
  Outcome o;
  if (!binary) {
    o.require(false, "path to the property test binary not given");
    return o;
  }
  std::string cmd = std::string("\"") + binary + "\" --gtest_brief=1 > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  o.require(rc == 0, "property suite exited with " + std::to_string(rc));
  if (o.pass) o.detail = "six laws, >= 1000 cases each";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* props = argc > 1 ? argv[1] : nullptr;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden derivations", goldens},
      {"msr table", msr_table},
      {"finite-model oracle", oracle_suite},
      {"negative entailment", negative_entailment},
      {"intensionality", intensionality},
      {"property suites", [&] { return properties(props); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first
              << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
