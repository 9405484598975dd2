"""
Closed-form values of ``J1 (*)_I J2`` per irreducible type.

Only pairs of proper, nonempty, connected subsets need a type rule; the
unit (``J (*) I = J``), absorbing (``J (*) {} = {}``) and disconnected
cases are shared.  A disconnected argument splits into its connected
components and the answer is the union over all pairs of components.

Type D encodings (labels 1..n, fork at n-2 with leaves n-1, n):

* a connected set containing both leaves is ``{a, ..., n}`` with a <= n-2;
* a connected set missing leaf n is an interval ``{a, ..., n-b}`` of the
  path ``1, ..., n-1`` (so b >= 1);
* a connected set missing leaf n-1 is mapped onto the previous case by the
  swap ``n-1 <-> n``.

The fork-containing rule ``{a, ..., n} (*) {a', ..., n} = {a+a'-1, ..., n}``
holds literally while ``a+a'-1 <= n-1`` (at ``n-1`` it gives the two leaves);
beyond that the result is empty.

In types B and D, a set ``{a, ..., n}`` reaching the far end combines with
an interval ``{a', ..., n-b'}`` (b' >= 1) to ``{a+a'-1, ..., n-b'-a+1}``.
The upper end loses ``a-1``, not a constant 1: e.g. in B5,
``{3,4,5} (*) {1,2,3,4}`` is empty.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .diagram import CoxeterDiagram, IrreducibleType, components_of

__all__ = ["closed_form", "closed_form_irreducible"]


def _span(lo: int, hi: int) -> frozenset[int]:
    return frozenset(range(lo, hi + 1))


def _rule_A(n, J1, J2):
    a, b = min(J1), n - max(J1)
    a2, b2 = min(J2), n - max(J2)
    return _span(a + a2 - 1, n - b - b2)


def _rule_B(n, J1, J2):
    a, b = min(J1), n - max(J1)
    a2, b2 = min(J2), n - max(J2)
    if b == 0 and b2 == 0:
        return _span(a + a2 - 1, n)
    if b == 0:
        return _span(a + a2 - 1, n - b2 - a + 1)
    if b2 == 0:
        return _span(a + a2 - 1, n - b - a2 + 1)
    return frozenset()


def _d_parity(n, J1, J2):
    """Both arguments are I-{n-1} or I-{n}."""
    odd = n % 2
    miss1, miss2 = (n - 1 if n - 1 not in J1 else n), (n - 1 if n - 1 not in J2 else n)
    if miss1 == miss2 == n:
        return frozenset(range(2 if odd else 1, n, 2))
    if miss1 == miss2 == n - 1:
        return frozenset(range(2 if odd else 1, n - 2, 2)) | {n}
    return frozenset(range(1 if odd else 2, n - 1, 2))


def _rule_D(n, J1, J2):
    fork = {n - 1, n}
    f1, f2 = fork <= J1, fork <= J2
    if not f1 and not f2:
        if len(J1) == n - 1 and len(J2) == n - 1:
            return _d_parity(n, J1, J2)
        return frozenset()
    if not f1:
        J1, J2, f2 = J2, J1, f1
    a = min(J1)
    if f2:
        lo = a + min(J2) - 1
        return _span(lo, n) if lo <= n - 1 else frozenset()
    if n in J2:
        J2 = frozenset({n - 1} | (J2 - {n}))
    a2, b2 = min(J2), n - max(J2)
    return _span(a + a2 - 1, n - b2 - a + 1)


def _pairs(n: int, table: dict[tuple[frozenset, frozenset], set[int]]):
    I = frozenset(range(1, n + 1))
    out = {}
    for (m1, m2), val in table.items():
        k1, k2 = I - m1, I - m2
        out[frozenset({k1, k2})] = frozenset(val)
    return out


_E6_BOTH = _pairs(6, {
    (frozenset({1}), frozenset({1})): {2, 4, 5},
    (frozenset({6}), frozenset({6})): {2, 3, 4},
    (frozenset({1}), frozenset({6})): {3, 4, 5},
    (frozenset({1}), frozenset({1, 6})): {4},
    (frozenset({6}), frozenset({1, 6})): {4},
})
_E7 = _pairs(7, {
    (frozenset({1}), frozenset({1})): {2, 5, 7},
    (frozenset({7}), frozenset({7})): {2, 3, 4, 5},
    (frozenset({1}), frozenset({7})): {3, 4, 5},
    (frozenset({7}), frozenset({1, 7})): {4},
    (frozenset({7}), frozenset({6, 7})): {4},
})
_E8 = _pairs(8, {
    (frozenset({8}), frozenset({8})): {2, 3, 4, 5},
})


def _rule_E(n, J1, J2):
    I = frozenset(range(1, n + 1))
    if n == 6:
        in1, in2 = 2 in J1, 2 in J2
        if not in1 and not in2:
            return frozenset()
        if in1 and in2:
            return _E6_BOTH.get(frozenset({J1, J2}), frozenset())
        if in2:
            J1, J2 = J2, J1
        if J2 == I - {2}:
            if J1 == I - {1}:
                return frozenset({4, 6})
            if J1 == I - {6}:
                return frozenset({1, 4})
        return frozenset()
    table = _E7 if n == 7 else _E8
    return table.get(frozenset({J1, J2}), frozenset())


@lru_cache(maxsize=None)
def _local_diagram(kind: str, rank: int, m: int | None) -> CoxeterDiagram:
    return CoxeterDiagram.from_components([IrreducibleType(kind, rank, m)])


def _connected_rule(c: IrreducibleType, J1: frozenset, J2: frozenset) -> frozenset:
    n = c.rank
    if c.kind == "A":
        return _rule_A(n, J1, J2)
    if c.kind == "B":
        return _rule_B(n, J1, J2)
    if c.kind == "D":
        return _rule_D(n, J1, J2)
    if c.kind == "E":
        return _rule_E(n, J1, J2)
    # F4, H3, H4, I2(m)
    return frozenset()


@lru_cache(maxsize=None)
def closed_form_irreducible(c: IrreducibleType, J1: frozenset, J2: frozenset) -> frozenset:
    """Closed form on one component, in local labels ``1..rank``."""
    I = frozenset(range(1, c.rank + 1))
    if J1 == I:
        return J2
    if J2 == I:
        return J1
    if not J1 or not J2:
        return frozenset()
    d = _local_diagram(c.kind, c.rank, c.m)
    parts1 = components_of(d, J1)
    parts2 = components_of(d, J2)
    out = frozenset()
    for K1 in parts1:
        for K2 in parts2:
            out |= _connected_rule(c, K1, K2)
    return out


def closed_form(d: CoxeterDiagram, J1: Iterable[int], J2: Iterable[int]) -> frozenset[int]:
    """Predicted ``J1 (*)_I J2``; reducible diagrams are handled componentwise."""
    J1, J2 = d.check_subset(J1), d.check_subset(J2)
    out = set()
    for c in d.components:
        local = IrreducibleType(c.kind, c.rank, c.m)
        k1 = frozenset(j - c.offset for j in J1 if j in c.nodes)
        k2 = frozenset(j - c.offset for j in J2 if j in c.nodes)
        out |= {j + c.offset for j in closed_form_irreducible(local, k1, k2)}
    return frozenset(out)
