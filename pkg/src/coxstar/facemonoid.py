"""
The commutative monoid ``(*)_I`` on subsets of the node set.

For subsets J1, J2 of I, ``J1 (*)_I J2`` is the J3 with::

    (w0^J1 w0^I) * (w0^J2 w0^I) = w0^J3 w0^I

computed through the equivalent form ``(w0^J1 w0^I) |> w0^J2 = w0^J3``.
Tables are indexed by bit masks (bit ``i-1`` for node ``i``).

Three independent routes to the same value are provided: the direct
``|>`` computation (:func:`star_sets`), the reduction to end-point pairs
of irreducible parabolic subgroups (:func:`star_sets_inductive`), and the
per-type closed forms (:func:`closed_form`).  :func:`verify` runs them
against each other.
"""

from __future__ import annotations

import logging
import os
import random
import time
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .closedform import closed_form
from .demazure import _fold, longest
from .diagram import CoxeterDiagram, _end_points_within, from_mask, to_mask
from .element import Element, canonical_word, left_descents, mul, support
from .rootsys import RootSystem

__all__ = [
    "NotALongestElement", "InternalMismatch", "RankBoundExceeded",
    "StarTable", "VerificationReport", "recognize_w0J", "star_sets",
    "star_sets_inductive", "closed_form", "full_table", "verify",
    "rank_bound", "CHECK_GROUPS",
]

log = logging.getLogger(__name__)

DEFAULT_RANK_BOUND = 9
# exhaustive associativity while 8**rank stays under this
ASSOC_BUDGET = 8 ** 8
ASSOC_SAMPLES = 5000


class NotALongestElement(ArithmeticError):
    """An element expected to be some w0^J is not."""


class InternalMismatch(RuntimeError):
    """Two computation routes that must agree did not."""


class RankBoundExceeded(ValueError):
    pass


def rank_bound() -> int:
    return int(os.environ.get("COXSTAR_RANK_BOUND", DEFAULT_RANK_BOUND))


def recognize_w0J(z: Element) -> frozenset[int]:
    """Return J with ``z == w0^J``, or raise NotALongestElement."""
    J = left_descents(z)
    if longest(z.rs, J) != z or support(z) != J:
        raise NotALongestElement(f"[{' '.join(map(str, canonical_word(z)))}] is not a w0^J")
    return J


class _Engine:
    """Per-root-system caches for mask-level computations."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n = rs.rank
        self.full = (1 << self.n) - 1
        d = rs.diagram
        self.adj = [to_mask(d.neighbors(i)) for i in d.nodes]
        self._w0_inv: dict[int, np.ndarray] = {}
        self._lookup: dict[bytes, int] = {}
        for mask in range(1 << self.n):
            z = longest(rs, from_mask(mask))
            self._w0_inv[mask] = z.inv
            self._lookup[z.inv.tobytes()] = mask
        self._w0I = longest(rs, d.nodes)
        self._words: dict[tuple[int, int], list[int]] = {}
        self._base: dict[tuple[int, int, int], int] = {}
        self._ind: dict[tuple[int, int, int], int] = {}
        self._comps: dict[int, list[int]] = {}

    def word(self, J: int, K: int) -> list[int]:
        """Canonical word of ``w0^J w0^K`` (J inside K)."""
        key = (J, K)
        w = self._words.get(key)
        if w is None:
            x = mul(longest(self.rs, from_mask(J)), longest(self.rs, from_mask(K)))
            w = self._words[key] = canonical_word(x)
        return w

    def recognize_inv(self, zinv: np.ndarray) -> int:
        return self._lookup.get(zinv.tobytes(), -1)

    def down_mask(self, J1: int, J2: int, K: int | None = None) -> int:
        """``(w0^J1 w0^K) |> w0^J2`` as a mask, -1 if not a longest element."""
        K = self.full if K is None else K
        w0 = self._w0_inv[J2]
        zinv, _ = _fold(self.rs, self.word(J1, K), w0, 0, grow=False)
        return self.recognize_inv(zinv)

    def star_form_mask(self, J1: int, J2: int) -> int:
        """J3 from ``(w0^J1 w0^I) * (w0^J2 w0^I) = w0^J3 w0^I``, -1 if no such J3."""
        rs = self.rs
        y = mul(longest(rs, from_mask(J2)), self._w0I)
        zinv, _ = _fold(rs, self.word(J1, self.full), y.inv, y.length, grow=True)
        # (z w0)^{-1} = w0 z^{-1}
        return self.recognize_inv(self._w0I.perm[zinv])

    def components(self, mask: int) -> list[int]:
        hit = self._comps.get(mask)
        if hit is not None:
            return hit
        parts = []
        todo = mask
        while todo:
            comp = todo & -todo
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    nxt |= self.adj[b.bit_length() - 1]
                    f ^= b
                nxt &= todo & ~comp
                comp |= nxt
                frontier = nxt
            parts.append(comp)
            todo &= ~comp
        self._comps[mask] = parts
        return parts

    def end_point(self, K: int, avoid: int) -> int:
        """Smallest end point of the irreducible K not in ``avoid``."""
        pts = _end_points_within(self.rs.diagram, from_mask(K))
        for i in pts:
            if not (avoid >> (i - 1)) & 1:
                return i
        raise InternalMismatch(f"no end point of {sorted(from_mask(K))} outside {sorted(from_mask(avoid))}")

    def base(self, K: int, A: int, B: int) -> int:
        """End-point pair ``(w0^A w0^K) |> w0^B`` computed directly."""
        key = (K, A, B)
        hit = self._base.get(key)
        if hit is None:
            hit = self.down_mask(A, B, K)
            if hit < 0:
                raise NotALongestElement(
                    f"end-point pair {sorted(from_mask(A))}, {sorted(from_mask(B))} "
                    f"in {sorted(from_mask(K))} is not a w0^J")
            if hit & ~(A & B):
                raise InternalMismatch(
                    f"end-point value {sorted(from_mask(hit))} not inside both arguments")
            self._base[key] = hit
        return hit

    def inductive(self, K: int, J1: int, J2: int) -> int:
        """``J1 (*)_K J2`` by reduction to end-point pairs of irreducible pieces."""
        key = (K, J1, J2)
        hit = self._ind.get(key)
        if hit is not None:
            return hit
        if J1 == K:
            out = J2
        elif J2 == K:
            out = J1
        elif not J1 or not J2:
            out = 0
        elif len(self.components(K)) > 1:
            out = 0
            for C in self.components(K):
                out |= self.inductive(C, J1 & C, J2 & C)
        elif len(self.components(J2)) > 1:
            out = 0
            for C in self.components(J2):
                out |= self.inductive(K, J1, C)
        elif len(self.components(J1)) > 1:
            # swap sides by commutativity, then split as above
            out = 0
            for C in self.components(J1):
                out |= self.inductive(K, J2, C)
        else:
            i = self.end_point(K, J1)
            i2 = self.end_point(K, J2)
            J1p = K & ~(1 << (i - 1))
            J2p = K & ~(1 << (i2 - 1))
            J3 = self.base(K, J2p, J1p)
            J4 = self.inductive(J2p, J2, J3)
            out = self.inductive(J1p, J1, J4)
        self._ind[key] = out
        return out


def _engine(rs: RootSystem) -> _Engine:
    eng = rs._cache.get("engine")
    if eng is None:
        eng = rs._cache["engine"] = _Engine(rs)
    return eng


def star_sets(rs: RootSystem, J1: Iterable[int], J2: Iterable[int]) -> frozenset[int]:
    """``J1 (*)_I J2`` via ``(w0^J1 w0^I) |> w0^J2``."""
    d = rs.diagram
    m1, m2 = to_mask(d.check_subset(J1)), to_mask(d.check_subset(J2))
    out = _engine(rs).down_mask(m1, m2)
    if out < 0:
        raise NotALongestElement(f"({sorted(J1)}, {sorted(J2)}) does not close in {d.name}")
    return from_mask(out)


def star_sets_inductive(rs: RootSystem, J1: Iterable[int], J2: Iterable[int],
                        check: bool = True) -> frozenset[int]:
    """``J1 (*)_I J2`` by the inductive reduction; with ``check`` it must match :func:`star_sets`."""
    d = rs.diagram
    m1, m2 = to_mask(d.check_subset(J1)), to_mask(d.check_subset(J2))
    eng = _engine(rs)
    out = eng.inductive(eng.full, m1, m2)
    if check:
        direct = eng.down_mask(m1, m2)
        if direct != out:
            raise InternalMismatch(
                f"inductive {sorted(from_mask(out))} != direct "
                f"{sorted(from_mask(direct)) if direct >= 0 else 'not closed'}"
                f" for ({sorted(J1)}, {sorted(J2)}) in {d.name}")
    return from_mask(out)


@dataclass
class StarTable:
    """Full ``(J1, J2) -> J3`` map; ``table[m1, m2]`` holds the mask of J3 (-1: not closed)."""
    diagram: CoxeterDiagram
    table: np.ndarray
    status: dict[str, bool] = field(default_factory=dict)
    flags: dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def entry(self, J1: Iterable[int], J2: Iterable[int]) -> frozenset[int]:
        J1, J2 = self.diagram.check_subset(J1), self.diagram.check_subset(J2)
        v = int(self.table[to_mask(J1), to_mask(J2)])
        if v < 0:
            raise NotALongestElement(f"({sorted(J1)}, {sorted(J2)}) did not close")
        return from_mask(v)

    def entries(self):
        """``(J1, J2, J3)`` over all ordered pairs, sorted by (J1 bits, J2 bits)."""
        size = 1 << self.rank
        for m1 in range(size):
            for m2 in range(size):
                v = int(self.table[m1, m2])
                yield from_mask(m1), from_mask(m2), (from_mask(v) if v >= 0 else None)


def _check_rank(rs: RootSystem, bound: int | None) -> None:
    bound = rank_bound() if bound is None else bound
    if rs.rank > bound:
        raise RankBoundExceeded(f"{rs.diagram.name} has rank {rs.rank} > bound {bound}")


def full_table(rs: RootSystem, bound: int | None = None) -> StarTable:
    """Compute every unordered pair once and fill the mirror entry by commutativity."""
    _check_rank(rs, bound)
    eng = _engine(rs)
    size = 1 << rs.rank
    T = np.full((size, size), -1, dtype=np.int64)
    for m1 in range(size):
        for m2 in range(m1, size):
            T[m1, m2] = T[m2, m1] = eng.down_mask(m1, m2)
    return StarTable(rs.diagram, T)


CHECK_GROUPS = {
    "all": ("closure", "commutative", "containment", "unit", "associative",
            "star_form", "monotone", "closed_form", "inductive"),
    "theorem": ("closure", "commutative", "containment", "unit", "associative"),
    "lemmas": ("closure", "commutative", "star_form", "monotone"),
    "closedform": ("closure", "closed_form"),
    "inductive": ("closure", "inductive"),
}


@dataclass
class VerificationReport:
    type: str
    rank: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    seconds: dict[str, float] = field(default_factory=dict)
    table: StarTable | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures and all(self.checks.values())

    def fail(self, check: str, msg: str, limit: int = 20) -> None:
        self.checks[check] = False
        if sum(1 for f in self.failures if f.startswith(check + ":")) < limit:
            self.failures.append(f"{check}: {msg}")

    def to_dict(self) -> dict:
        return {"type": self.type, "rank": self.rank, "ok": self.ok,
                "checks": dict(self.checks), "failures": list(self.failures)}


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, sorted(from_mask(mask)))) + "}" if mask >= 0 else "<not closed>"


def _assoc(T: np.ndarray, report: VerificationReport, rng: random.Random) -> None:
    size = T.shape[0]
    if size ** 3 <= ASSOC_BUDGET:
        for a in range(size):
            left = T[T[a, :], :]          # (a*b)*c indexed [b, c]
            right = T[a][T]               # a*(b*c) indexed [b, c]
            bad = np.argwhere(left != right)
            for b, c in bad[:3]:
                report.fail("associative", f"({_fmt(a)},{_fmt(b)},{_fmt(c)})")
        report.checks.setdefault("associative", True)
        return
    for _ in range(ASSOC_SAMPLES):
        a, b, c = (rng.randrange(size) for _ in range(3))
        if T[T[a, b], c] != T[a, T[b, c]]:
            report.fail("associative", f"({_fmt(a)},{_fmt(b)},{_fmt(c)})")
    report.checks.setdefault("associative", True)


def verify(rs: RootSystem, checks: str = "all", bound: int | None = None,
           seed: int = 0) -> VerificationReport:
    """Run the table checks; failures are collected in the report, never raised.

    InternalMismatch from the inductive route is the one exception that
    propagates, since it signals a bug rather than a counterexample.
    """
    _check_rank(rs, bound)
    wanted = CHECK_GROUPS[checks]
    d = rs.diagram
    report = VerificationReport(d.name, d.rank)
    eng = _engine(rs)
    size = 1 << rs.rank
    full = size - 1
    t0 = time.perf_counter()

    # every ordered pair independently, so commutativity is a real test
    T = np.full((size, size), -1, dtype=np.int64)
    for m1 in range(size):
        for m2 in range(size):
            T[m1, m2] = eng.down_mask(m1, m2)
    report.seconds["table"] = time.perf_counter() - t0
    flags = {}
    closed = T >= 0
    flags["closure"] = closed
    report.checks["closure"] = True
    for m1, m2 in np.argwhere(~closed)[:20]:
        report.fail("closure", f"({_fmt(m1)}, {_fmt(m2)}) is not a w0^J")
    safe = np.where(closed, T, 0)

    if "commutative" in wanted:
        flags["commutative"] = T == T.T
        report.checks["commutative"] = True
        for m1, m2 in np.argwhere(~flags["commutative"])[:20]:
            if m1 < m2:
                report.fail("commutative", f"{_fmt(m1)}*{_fmt(m2)}={_fmt(T[m1, m2])} "
                                           f"but reversed gives {_fmt(T[m2, m1])}")
    if "containment" in wanted:
        masks = np.arange(size)
        inter = masks[:, None] & masks[None, :]
        flags["containment"] = (safe & ~inter) == 0
        report.checks["containment"] = True
        for m1, m2 in np.argwhere(~flags["containment"])[:20]:
            report.fail("containment", f"{_fmt(m1)}*{_fmt(m2)}={_fmt(T[m1, m2])}")
    if "unit" in wanted:
        report.checks["unit"] = True
        for m in range(size):
            if T[m, full] != m or T[full, m] != m:
                report.fail("unit", f"{_fmt(m)} * I = {_fmt(T[m, full])}")
            if T[m, 0] != 0 or T[0, m] != 0:
                report.fail("unit", f"{_fmt(m)} * {{}} = {_fmt(T[m, 0])}")
    if "associative" in wanted:
        t1 = time.perf_counter()
        if closed.all():
            _assoc(T, report, random.Random(seed))
        else:
            report.fail("associative", "skipped: table not closed")
        report.seconds["associative"] = time.perf_counter() - t1
    if "monotone" in wanted:
        # J1 <= J1' implies J1*J2 <= J1'*J2 (together with commutativity this
        # gives monotonicity in both arguments)
        report.checks["monotone"] = True
        for m1 in range(size):
            for bit in range(rs.rank):
                sup = m1 | (1 << bit)
                if sup == m1:
                    continue
                bad = np.nonzero(safe[m1] & ~safe[sup])[0]
                for m2 in bad[:3]:
                    report.fail("monotone", f"{_fmt(m1)}*{_fmt(m2)} not inside {_fmt(sup)}*{_fmt(m2)}")
    if "star_form" in wanted:
        t1 = time.perf_counter()
        report.checks["star_form"] = True
        ok = np.ones((size, size), dtype=bool)
        for m1 in range(size):
            for m2 in range(size):
                s = eng.star_form_mask(m1, m2)
                if s != T[m1, m2]:
                    ok[m1, m2] = False
                    report.fail("star_form", f"({_fmt(m1)}, {_fmt(m2)}): * gives {_fmt(s)}, "
                                             f"|> gives {_fmt(T[m1, m2])}")
        flags["star_form"] = ok
        report.seconds["star_form"] = time.perf_counter() - t1
    if "closed_form" in wanted:
        t1 = time.perf_counter()
        report.checks["closed_form"] = True
        ok = np.ones((size, size), dtype=bool)
        for m1 in range(size):
            J1 = from_mask(m1)
            for m2 in range(size):
                cf = to_mask(closed_form(d, J1, from_mask(m2)))
                if cf != T[m1, m2]:
                    ok[m1, m2] = False
                    report.fail("closed_form", f"({_fmt(m1)}, {_fmt(m2)}): closed form "
                                               f"{_fmt(cf)}, computed {_fmt(T[m1, m2])}")
        flags["closed_form_match"] = ok
        report.seconds["closed_form"] = time.perf_counter() - t1
    if "inductive" in wanted:
        t1 = time.perf_counter()
        report.checks["inductive"] = True
        for m1 in range(size):
            for m2 in range(size):
                try:
                    v = eng.inductive(full, m1, m2)
                except NotALongestElement as exc:
                    report.fail("inductive", str(exc))
                    continue
                if v != T[m1, m2]:
                    raise InternalMismatch(
                        f"{d.name}: inductive {_fmt(v)} != direct {_fmt(T[m1, m2])} "
                        f"for ({_fmt(m1)}, {_fmt(m2)})")
        report.seconds["inductive"] = time.perf_counter() - t1

    report.seconds["total"] = time.perf_counter() - t0
    table = StarTable(d, T, flags=flags)
    table.status = {
        "closure": report.checks.get("closure", False),
        "commutative": report.checks.get("commutative", False),
        "containment": report.checks.get("containment", False),
        "closed_form_match": report.checks.get("closed_form", False),
    }
    report.table = table
    log.info("verified %s in %.2fs: %s", d.name, report.seconds["total"],
             "ok" if report.ok else f"{len(report.failures)} failures")
    return report
