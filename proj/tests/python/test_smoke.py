# Copyright 2026 The Ontosem Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import ontosem


@pytest.fixture(scope="module")
def kb():
    return ontosem.load()


def test_constant_substitution(kb):
    r = kb.interpret("sheba is a thief")
    assert r.result == "E1 sheba:human . THIEF(sheba)"
    assert r.trace[0][0] == "const-subst"
    assert "THIEF" in r.unicode


def test_logical_form_input(kb):
    r = kb.interpret_lf("E1 sheba:thing . E x . THIEF(x:human) & be(sheba,x)")
    assert ontosem.alpha_equivalent(r.result, "E1 s:human . THIEF(s)")


def test_discourse_retracts_abstract_trip(kb):
    r = kb.interpret_discourse(["jon planned the trip", "it was lengthy"])
    assert ontosem.alpha_equivalent(
        r.result, "E1 jon:human . E1 e:trip . PLAN(jon,e) & LENGTHY(e)")
    assert "retract" in [step[0] for step in r.trace]


def test_unify_and_msr(kb):
    assert kb.unify("dog^a", "entity") == "Single(dog)"
    assert kb.unify("measure", "process") == "Failure"
    assert kb.msr("human", "sandwich") == "EAT"
    assert kb.msr("dog", "beer") is None
    assert kb.subsumes("entity", "dog")


def test_cardinality_lexicon():
    kb = ontosem.load("cardinality.lex", definitions=False)
    assert kb.msr("human:1", "car:1") == "DRIVE"
    assert kb.msr("human:1+", "car:1") == "RIDE"


def test_inference(kb):
    r = kb.infer("exercising is wise", "jon is exercising")
    assert ontosem.alpha_equivalent(
        r.result, "E1 jon:human . E1 p:property . WISDOM(p) & has(jon,p)")
    assert kb.infer("exercising is wise", "jon is aging") is None


def test_errors(kb):
    with pytest.raises(ontosem.ParseError):
        kb.interpret("")
    with pytest.raises(ontosem.ResolutionError):
        kb.interpret_discourse(["the temperature is 90", "he is famous"])
    with pytest.raises(ontosem.Error):
        kb.unify("wombat", "human")


def test_shipped_corpus(kb):
    d = ontosem.data_dir() / "corpus"
    reports = kb.run_corpus(d / "shipped.corpus", d / "shipped.golden")
    assert len(reports) == 22
    assert all(passed for _, passed, _ in reports)


def test_normalize_is_idempotent():
    once = ontosem.normalize("E1 b:dog . E1 a:human . OWN(a,b)")
    assert ontosem.normalize(once) == once
