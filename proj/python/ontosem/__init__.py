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

"""Typed compositional semantics over a type hierarchy."""

from pathlib import Path

try:
    from . import _ontosem
except ImportError:  # build tree: the extension sits outside the package
    import _ontosem

KnowledgeBase = _ontosem.KnowledgeBase
Interpretation = _ontosem.Interpretation
Error = _ontosem.Error
ParseError = _ontosem.ParseError
UnificationError = _ontosem.UnificationError
ResolutionError = _ontosem.ResolutionError
normalize = _ontosem.normalize
to_unicode = _ontosem.to_unicode
alpha_equivalent = _ontosem.alpha_equivalent


def data_dir() -> Path:
    """Directory holding ontology.hier, core.lex and core.defs."""
    bundled = Path(__file__).parent / "data"
    if (bundled / "ontology.hier").exists():
        return bundled
    return Path(_ontosem.default_data_dir())


def load(lexicon: str = "core.lex", definitions: bool = True) -> KnowledgeBase:
    """Loads the shipped hierarchy with one of the shipped lexicons."""
    d = data_dir()
    defs = d / "core.defs" if definitions else ""
    return KnowledgeBase.load(d / "ontology.hier", d / lexicon, defs)


__all__ = [
    "KnowledgeBase", "Interpretation", "Error", "ParseError", "UnificationError",
    "ResolutionError", "normalize", "to_unicode", "alpha_equivalent", "data_dir", "load",
]
