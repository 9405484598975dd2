"""
Finite Coxeter types: parsing, Bourbaki labelling, Coxeter matrices and
subsets of the node set.

Nodes are labelled ``1..n`` globally; in a product such as ``A2xB3`` the
labels run consecutively component by component (``A2`` owns 1,2 and ``B3``
owns 3,4,5).  Subsets of the node set are plain ``frozenset[int]`` values in
the public API and bit masks (bit ``i-1`` for label ``i``) internally.

>>> d = parse_type("A2xA1")
>>> d.rank, d.coxmat[0][2]
(3, 2)
>>> components_of(parse_type("D4"), {1, 3, 4})
[frozenset({1}), frozenset({3}), frozenset({4})]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "DiagramError", "IrreducibleType", "CoxeterDiagram", "SubsetJ",
    "parse_type", "components_of", "end_points",
    "parse_subset", "format_subset", "to_mask", "from_mask",
]

SubsetJ = frozenset  # of node labels


class DiagramError(ValueError):
    """Raised for malformed or out-of-range Coxeter type names."""


@dataclass(frozen=True)
class IrreducibleType:
    kind: str          # one of "A", "B", "D", "E", "F", "H", "I"
    rank: int
    m: int | None = None   # bond order, only for kind "I"
    offset: int = 0        # global label of this component's node 1, minus one

    @property
    def name(self) -> str:
        if self.kind == "I":
            return f"I2({self.m})"
        return f"{self.kind}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(self.offset + 1, self.offset + self.rank + 1)

    @property
    def is_general_dihedral(self) -> bool:
        return self.kind == "I" and self.m != 6

    def local_bonds(self) -> list[tuple[int, int, int]]:
        """Edges ``(i, j, m_ij)`` with m_ij >= 3, in local Bourbaki labels."""
        n, k = self.rank, self.kind
        if k == "A":
            return [(i, i + 1, 3) for i in range(1, n)]
        if k == "B":
            return [(i, i + 1, 3) for i in range(1, n - 1)] + [(n - 1, n, 4)]
        if k == "D":
            return [(i, i + 1, 3) for i in range(1, n - 1)] + [(n - 2, n, 3)]
        if k == "E":
            return [(1, 3, 3), (2, 4, 3)] + [(i, i + 1, 3) for i in range(3, n)]
        if k == "F":
            return [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
        if k == "H":
            return [(1, 2, 5)] + [(i, i + 1, 3) for i in range(2, n)]
        if k == "I":
            return [(1, 2, self.m)]
        raise DiagramError(f"unknown component kind {k!r}")


@dataclass(frozen=True)
class CoxeterDiagram:
    components: tuple[IrreducibleType, ...]
    coxmat: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_components(cls, comps: Iterable[IrreducibleType]) -> CoxeterDiagram:
        placed = []
        offset = 0
        for c in comps:
            placed.append(IrreducibleType(c.kind, c.rank, c.m, offset))
            offset += c.rank
        mat = [[2] * offset for _ in range(offset)]
        for i in range(offset):
            mat[i][i] = 1
        for c in placed:
            for i, j, m in c.local_bonds():
                a, b = c.offset + i - 1, c.offset + j - 1
                mat[a][b] = mat[b][a] = m
        return cls(tuple(placed), tuple(tuple(r) for r in mat))

    @property
    def name(self) -> str:
        return "x".join(c.name for c in self.components)

    def __str__(self) -> str:
        return self.name

    @property
    def rank(self) -> int:
        return len(self.coxmat)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def full(self) -> frozenset[int]:
        return frozenset(self.nodes)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def m(self, i: int, j: int) -> int:
        return self.coxmat[i - 1][j - 1]

    def neighbors(self, i: int) -> list[int]:
        return [j for j in self.nodes if j != i and self.m(i, j) >= 3]

    def component_of(self, i: int) -> IrreducibleType:
        for c in self.components:
            if i in c.nodes:
                return c
        raise DiagramError(f"node {i} not in {self.name}")

    def check_subset(self, J: Iterable[int]) -> frozenset[int]:
        J = frozenset(J)
        bad = [j for j in J if not (isinstance(j, int) and 1 <= j <= self.rank)]
        if bad:
            raise DiagramError(f"labels {sorted(bad)} are not nodes of {self.name}")
        return J


_COMP_RE = re.compile(r"([ABDEFH])([1-9][0-9]*)|I2\(([1-9][0-9]*)\)")

# rank-out-of-range names and the isomorphic type one should write instead
_SUGGEST = {
    "B1": "A1", "D1": "A1", "D2": "A1xA1", "D3": "A3",
    "E3": "A2xA1", "E4": "A4", "E5": "D5", "H1": "A1", "H2": "I2(5)",
    "F1": "A1", "F2": "B2", "F3": "B3",
}


def _parse_component(text: str) -> IrreducibleType:
    m = _COMP_RE.fullmatch(text)
    if m is None:
        raise DiagramError(f"cannot parse Coxeter type component {text!r}")
    if m.group(3) is not None:
        order = int(m.group(3))
        if order < 3:
            raise DiagramError(f"I2({order}) is out of range: need m >= 3")
        if order == 3:
            return IrreducibleType("A", 2)
        if order == 4:
            return IrreducibleType("B", 2)
        return IrreducibleType("I", 2, order)
    kind, n = m.group(1), int(m.group(2))
    ok = {
        "A": n >= 1, "B": n >= 2, "D": n >= 4, "E": n in (6, 7, 8),
        "F": n == 4, "H": n in (3, 4),
    }[kind]
    if not ok:
        msg = f"{kind}{n} is out of range"
        if f"{kind}{n}" in _SUGGEST:
            msg += f"; use {_SUGGEST[kind + str(n)]} instead"
        raise DiagramError(msg)
    return IrreducibleType(kind, n)


def parse_type(text: str) -> CoxeterDiagram:
    """Parse ``COMP ("x" COMP)*`` into a validated diagram.

    Raises DiagramError on syntax errors, rank bounds, and general dihedral
    components inside a product.
    """
    if not isinstance(text, str) or not text:
        raise DiagramError("empty Coxeter type")
    comps = [_parse_component(part) for part in text.split("x")]
    if len(comps) > 1:
        for c in comps:
            if c.is_general_dihedral:
                raise DiagramError(
                    f"{c.name} is only supported as a standalone type, not in a product")
    return CoxeterDiagram.from_components(comps)


def _restricted_components(d: CoxeterDiagram, J: Iterable[int]) -> list[frozenset[int]]:
    todo = set(J)
    parts = []
    while todo:
        start = min(todo)
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in d.neighbors(i):
                if j in todo and j not in seen:
                    seen.add(j)
                    stack.append(j)
        todo -= seen
        parts.append(frozenset(seen))
    return sorted(parts, key=min)


def components_of(d: CoxeterDiagram, J: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the Coxeter graph restricted to J, sorted by smallest member."""
    return _restricted_components(d, d.check_subset(J))


def _end_points_within(d: CoxeterDiagram, K: frozenset[int]) -> list[int]:
    if len(K) == 1:
        return sorted(K)
    return sorted(i for i in K if sum(1 for j in d.neighbors(i) if j in K) == 1)


def end_points(d: CoxeterDiagram) -> list[int]:
    """Nodes of an irreducible diagram with exactly one neighbour."""
    if not d.is_irreducible:
        raise DiagramError(f"{d.name} is reducible; end points need an irreducible diagram")
    return _end_points_within(d, d.full)


def to_mask(J: Iterable[int]) -> int:
    mask = 0
    for j in J:
        mask |= 1 << (j - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def parse_subset(d: CoxeterDiagram, text: str) -> frozenset[int]:
    """Parse ``"1,2,4"`` (or ``"-"`` for the empty set) into a subset of d's nodes."""
    text = text.strip()
    if text in ("-", ""):
        return frozenset()
    try:
        labels = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise DiagramError(f"cannot parse subset {text!r}") from None
    return d.check_subset(labels)


def format_subset(J: Iterable[int]) -> str:
    J = sorted(J)
    return ",".join(map(str, J)) if J else "-"
