"""Demazure products, the downward action and the face monoid of finite Coxeter groups."""

__version__ = "0.1.0"

from .diagram import CoxeterDiagram, DiagramError, components_of, end_points, parse_type
from .rootsys import Golden, RootSystem, build_root_system, reflect, scalar_sign
from .element import (Element, bruhat_leq, canonical_word, from_word, gen, identity,
                      inverse, left_descents, mul, right_descents, support)
from .demazure import down, longest, star, w0J_w0I
from .facemonoid import (InternalMismatch, NotALongestElement, StarTable, closed_form,
                         full_table, recognize_w0J, star_sets, star_sets_inductive, verify)

__all__ = [
    "CoxeterDiagram", "DiagramError", "components_of", "end_points", "parse_type",
    "Golden", "RootSystem", "build_root_system", "reflect", "scalar_sign",
    "Element", "bruhat_leq", "canonical_word", "from_word", "gen", "identity",
    "inverse", "left_descents", "mul", "right_descents", "support",
    "down", "longest", "star", "w0J_w0I",
    "InternalMismatch", "NotALongestElement", "StarTable", "closed_form",
    "full_table", "recognize_w0J", "star_sets", "star_sets_inductive", "verify",
]
