"""
Brute-force definitional checks on groups small enough to enumerate.

Nothing here uses the folding algorithms or the lifting recursion: the
Bruhat order is the set of subword products of one reduced word, ``*`` is
the maximum of ``{uv : u <= x, v <= y}`` and ``|>`` the minimum of
``{uy : u <= x}``.  Everything runs on element indices with a precomputed
multiplication table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import demazure
from .element import Element, bruhat_leq, canonical_word, identity, inverse, mul
from .rootsys import RootSystem

__all__ = ["GuardExceeded", "NoUniqueMax", "NoUniqueMin", "GroupEnumeration",
           "classical_order", "enumerate_group", "bruhat_subword", "star_def",
           "down_def", "cross_check", "CrossCheckReport"]

DEFAULT_GUARD = 50_000


class GuardExceeded(ValueError):
    pass


class NoUniqueMax(ArithmeticError):
    pass


class NoUniqueMin(ArithmeticError):
    pass


def classical_order(rs: RootSystem) -> int:
    """Group order from the classical formulas, component by component."""
    orders = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152,
              "H3": 120, "H4": 14400}
    total = 1
    for c in rs.diagram.components:
        n = c.rank
        if c.kind == "A":
            total *= math.factorial(n + 1)
        elif c.kind == "B":
            total *= 2 ** n * math.factorial(n)
        elif c.kind == "D":
            total *= 2 ** (n - 1) * math.factorial(n)
        elif c.kind == "I":
            total *= 2 * c.m
        else:
            total *= orders[c.name]
    return total


@dataclass(eq=False)
class GroupEnumeration:
    rs: RootSystem
    elements: list[Element]
    by_length: list[list[int]]
    index: dict[Element, int] = field(repr=False)
    lengths: np.ndarray = field(repr=False)
    rgen: np.ndarray = field(repr=False)   # rgen[a, i-1] = index of elements[a] * s_i
    _mult: np.ndarray | None = field(default=None, repr=False)
    _below: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.elements)

    def idx(self, x: Element) -> int:
        return self.index[x]

    @property
    def mult(self) -> np.ndarray:
        """``mult[a, b]`` = index of ``elements[a] * elements[b]``."""
        if self._mult is None:
            n = len(self.elements)
            M = np.empty((n, n), dtype=np.int64)
            for a, x in enumerate(self.elements):
                for b, y in enumerate(self.elements):
                    M[a, b] = self.index[mul(x, y)]
            self._mult = M
        return self._mult

    def below(self, w: int) -> np.ndarray:
        """Boolean mask of all subword products of w's canonical word."""
        hit = self._below.get(w)
        if hit is not None:
            return hit
        reached = np.zeros(len(self.elements), dtype=bool)
        reached[0] = True   # identity
        for letter in canonical_word(self.elements[w]):
            cur = np.nonzero(reached)[0]
            reached[self.rgen[cur, letter - 1]] = True
        self._below[w] = reached
        return reached


def enumerate_group(rs: RootSystem, size_guard: int = DEFAULT_GUARD) -> GroupEnumeration:
    """Breadth-first closure from the identity under right multiplication by generators."""
    expected = classical_order(rs)
    if expected > size_guard:
        raise GuardExceeded(f"{rs.diagram.name} has {expected} elements > guard {size_guard}")
    start = identity(rs)
    elements = [start]
    index = {start: 0}
    edges = []
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in rs.diagram.nodes:
                y = x.rmul_gen(i)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > size_guard:
                        raise GuardExceeded(f"enumeration of {rs.diagram.name} passed {size_guard}")
                edges.append((index[x], i - 1, index[y]))
        frontier = nxt
    if len(elements) != expected:
        raise ArithmeticError(f"{rs.diagram.name}: enumerated {len(elements)}, expected {expected}")
    lengths = np.array([x.length for x in elements])
    by_length = [[] for _ in range(int(lengths.max()) + 1)]
    for k, ln in enumerate(lengths):
        by_length[ln].append(k)
    rgen = np.empty((len(elements), rs.rank), dtype=np.int64)
    for a, i, b in edges:
        rgen[a, i] = b
    return GroupEnumeration(rs, elements, by_length, index, lengths, rgen)


def bruhat_subword(u: Element, w: Element, enum: GroupEnumeration) -> bool:
    return bool(enum.below(enum.idx(w))[enum.idx(u)])


def _max_of(enum: GroupEnumeration, cand: np.ndarray) -> int:
    cand = np.unique(cand)
    lens = enum.lengths[cand]
    top = cand[lens == lens.max()]
    if len(top) != 1 or not enum.below(int(top[0]))[cand].all():
        raise NoUniqueMax(f"{len(top)} maximal-length candidates")
    return int(top[0])


def _min_of(enum: GroupEnumeration, cand: np.ndarray) -> int:
    cand = np.unique(cand)
    lens = enum.lengths[cand]
    bottom = cand[lens == lens.min()]
    if len(bottom) != 1 or not all(enum.below(int(p))[bottom[0]] for p in cand):
        raise NoUniqueMin(f"{len(bottom)} minimal-length candidates")
    return int(bottom[0])


def star_def_idx(a: int, b: int, enum: GroupEnumeration) -> int:
    us = np.nonzero(enum.below(a))[0]
    vs = np.nonzero(enum.below(b))[0]
    return _max_of(enum, enum.mult[np.ix_(us, vs)].ravel())


def down_def_idx(a: int, b: int, enum: GroupEnumeration) -> int:
    us = np.nonzero(enum.below(a))[0]
    return _min_of(enum, enum.mult[us, b])


def _products(enum: GroupEnumeration, us, vs) -> np.ndarray:
    els = enum.elements
    return np.array([enum.index[mul(els[u], els[v])] for u in us for v in vs])


def star_def(x: Element, y: Element, enum: GroupEnumeration) -> Element:
    """Bruhat-maximum of ``{uv : u <= x, v <= y}``."""
    us = np.nonzero(enum.below(enum.idx(x)))[0]
    vs = np.nonzero(enum.below(enum.idx(y)))[0]
    return enum.elements[_max_of(enum, _products(enum, us, vs))]


def down_def(x: Element, y: Element, enum: GroupEnumeration) -> Element:
    """Bruhat-minimum of ``{uy : u <= x}``."""
    us = np.nonzero(enum.below(enum.idx(x)))[0]
    return enum.elements[_min_of(enum, _products(enum, us, [enum.idx(y)]))]


@dataclass
class CrossCheckReport:
    type: str
    order: int
    pairs: int = 0
    mismatches: dict[str, int] = field(default_factory=lambda: {
        "bruhat": 0, "star": 0, "down": 0, "witness": 0})
    examples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.mismatches.values())

    def note(self, kind: str, msg: str) -> None:
        self.mismatches[kind] += 1
        if len(self.examples) < 20:
            self.examples.append(f"{kind}: {msg}")

    def to_dict(self) -> dict:
        return {"type": self.type, "order": self.order, "pairs": self.pairs,
                "ok": self.ok, "mismatches": dict(self.mismatches),
                "examples": list(self.examples)}


def cross_check(rs: RootSystem, size_guard: int = DEFAULT_GUARD) -> CrossCheckReport:
    """Compare the library against the definitions on every ordered pair of elements."""
    enum = enumerate_group(rs, size_guard)
    n = len(enum)
    report = CrossCheckReport(rs.diagram.name, n)
    els = enum.elements
    L = enum.lengths
    invs = [enum.idx(inverse(x)) for x in els]
    M = enum.mult
    for a, x in enumerate(els):
        below_a = enum.below(a)
        for b, y in enumerate(els):
            report.pairs += 1
            if bruhat_leq(y, x) != bool(below_a[b]):
                report.note("bruhat", f"{y} <= {x}")
            s = enum.idx(demazure.star(x, y))
            if s != star_def_idx(a, b, enum):
                report.note("star", f"{x} * {y}")
            t = enum.idx(demazure.down(x, y))
            if t != down_def_idx(a, b, enum):
                report.note("down", f"{x} |> {y}")
            # u' = (x*y) y^-1 <= x, v' = x^-1 (x*y) <= y, lengths add
            u1 = M[s, invs[b]]
            v1 = M[invs[a], s]
            if not (below_a[u1] and enum.below(b)[v1]
                    and L[s] == L[u1] + L[b] == L[a] + L[v1]):
                report.note("witness", f"{x} * {y}")
            # x |> y = u' y with u' <= x and l(x |> y) = l(y) - l(u')
            u2 = M[t, invs[b]]
            if not (below_a[u2] and L[t] == L[b] - L[u2]):
                report.note("witness", f"{x} |> {y}")
    return report
