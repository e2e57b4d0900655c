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

// Python bindings for the interpretation pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>

#include "ontosem/error.hpp"
#include "ontosem/session.hpp"
#include "ontosem/unify.hpp"

namespace py = pybind11;
using namespace ontosem;

namespace {

py::list trace_steps(const DerivationTrace& t, Syntax syntax) {
  py::list out;
  for (const auto& s : t.steps()) {
    out.append(py::make_tuple(to_string(s.rule), to_string(s.before, syntax),
                              to_string(s.after, syntax), s.note));
  }
  return out;
}

std::string result_text(const UnifyOutcome& o) { return to_string(o); }

}  // namespace

PYBIND11_MODULE(_ontosem, m) {
  m.doc() = "Typed compositional semantics over a type hierarchy.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnknownTypeError>(m, "UnknownTypeError", base.ptr());
  py::register_exception<HierarchyError>(m, "HierarchyError", base.ptr());
  py::register_exception<RegistryError>(m, "RegistryError", base.ptr());
  py::register_exception<UnificationError>(m, "UnificationError", base.ptr());
  py::register_exception<ResolutionError>(m, "ResolutionError", base.ptr());
  py::register_exception<DefinitionError>(m, "DefinitionError", base.ptr());
  py::register_exception<ModelError>(m, "ModelError", base.ptr());

  py::class_<Interpretation>(m, "Interpretation")
      .def_property_readonly("result",
                             [](const Interpretation& i) { return to_string(i.result); })
      .def_property_readonly(
          "unicode", [](const Interpretation& i) { return to_string(i.result, Syntax::unicode); })
      .def_property_readonly("condensed",
                             [](const Interpretation& i) { return to_string(i.condensed); })
      .def_property_readonly("trace",
                             [](const Interpretation& i) {
                               return trace_steps(i.trace, Syntax::ascii);
                             })
      .def("render_trace",
           [](const Interpretation& i, bool unicode) {
             return i.trace.render(unicode ? Syntax::unicode : Syntax::ascii);
           },
           py::arg("unicode") = false)
      .def("__repr__",
           [](const Interpretation& i) { return "<Interpretation " + to_string(i.result) + ">"; });

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def_static("load", &KnowledgeBase::load, py::arg("hierarchy"), py::arg("lexicon"),
                  py::arg("definitions") = std::filesystem::path{})
      .def("interpret", &interpret_text, py::arg("text"))
      .def("interpret_lf",
           [](const KnowledgeBase& kb, const std::string& lf) {
             return interpret(kb, parse_lf(lf));
           },
           py::arg("lf"))
      .def("interpret_discourse", &interpret_discourse, py::arg("sentences"))
      .def("infer", &infer, py::arg("rule"), py::arg("fact"))
      .def("unify",
           [](const KnowledgeBase& kb, const std::string& a, const std::string& b) {
             return result_text(
                 unify(kb.hierarchy, kb.salience(), parse_type_term(a), parse_type_term(b)));
           },
           py::arg("a"), py::arg("b"))
      .def("msr",
           [](const KnowledgeBase& kb, const std::string& a,
              const std::string& b) -> std::optional<std::string> {
             TypeTerm s = parse_type_term(a), t = parse_type_term(b);
             auto r = kb.salience().msr(kb.hierarchy, s.base, s.card, t.base, t.card);
             if (!r) return std::nullopt;
             return r->rel;
           },
           py::arg("s"), py::arg("t"))
      .def("subsumes",
           [](const KnowledgeBase& kb, const std::string& a, const std::string& b) {
             return kb.hierarchy.subsumes(a, b);
           })
      .def("run_corpus",
           [](const KnowledgeBase& kb, const std::filesystem::path& corpus,
              const std::filesystem::path& golden) {
             std::ifstream c(corpus), g(golden);
             if (!c) throw Error("cannot open " + corpus.string());
             if (!g) throw Error("cannot open " + golden.string());
             py::list out;
             for (const auto& r : run_corpus(kb, load_corpus(c), load_golden(g))) {
               out.append(py::make_tuple(r.label, r.passed, r.diffs));
             }
             return out;
           },
           py::arg("corpus"), py::arg("golden"));

  m.def("default_data_dir", &default_data_dir);
  m.def("normalize", [](const std::string& lf) { return to_string(alpha_normalize(parse_lf(lf))); },
        py::arg("lf"), "Parses a logical form and prints it in canonical variable order.");
  m.def("to_unicode", [](const std::string& lf) { return to_string(parse_lf(lf), Syntax::unicode); },
        py::arg("lf"));
  m.def("alpha_equivalent",
        [](const std::string& a, const std::string& b) {
          return alpha_equivalent(parse_lf(a), parse_lf(b));
        });
}
