"""
Finite root systems with exact coordinates and generator reflection tables.

Roots are stored in the simple-root basis.  Crystallographic components use
integer Cartan matrices; ``H3``/``H4`` use golden integers ``a + b*phi``.
For ``B_n`` (and the 4-bond of ``F4``) the long root is the one with the
smaller label: ``s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n``.  ``I2(6)``
uses ``s_1(alpha_2) = alpha_2 + 3 alpha_1``.

General dihedral groups ``I2(m)`` (m = 5 or m >= 7) are built
combinatorially: root ``k`` of the ``2m`` roots sits at angle ``k*pi/m``,
so reflection tables are integer index maps and no coordinates exist
(``roots`` holds ``None`` there).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .diagram import CoxeterDiagram, DiagramError

__all__ = ["Golden", "PHI", "Scalar", "scalar_sign", "RootSystem",
           "build_root_system", "reflect"]


@dataclass(frozen=True, slots=True)
class Golden:
    """The golden integer ``a + b*phi`` with ``phi**2 == phi + 1``."""
    a: int
    b: int = 0

    def _coerce(self, other):
        if isinstance(other, Golden):
            return other
        if isinstance(other, int):
            return Golden(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Golden(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        bd = self.b * o.b
        return Golden(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        # equal to an int when b == 0, so hash like one
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __repr__(self):
        return f"Golden({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}φ"
        return f"{self.a}{self.b:+d}φ"


PHI = Golden(0, 1)
Scalar = Union[int, Golden]


def scalar_sign(x: Scalar) -> int:
    """Exact sign (-1, 0, 1) of an integer or golden integer.

    ``a + b*phi == (t + b*sqrt5) / 2`` with ``t = 2a + b``.
    """
    if isinstance(x, int):
        return (x > 0) - (x < 0)
    t, b = 2 * x.a + x.b, x.b
    if t == 0 and b == 0:
        return 0
    if t >= 0 and b >= 0:
        return 1
    if t <= 0 and b <= 0:
        return -1
    if t * t > 5 * b * b:
        return 1 if t > 0 else -1
    return 1 if b > 0 else -1


def _pairing_matrix(d: CoxeterDiagram) -> list[list[Scalar]]:
    """Entries ``a[i][j]`` with ``s_i(alpha_j) = alpha_j - a[i][j] alpha_i``."""
    n = d.rank
    a: list[list[Scalar]] = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for c in d.components:
        for i, j, m in c.local_bonds():
            p, q = c.offset + i - 1, c.offset + j - 1   # p < q
            if m == 3:
                a[p][q] = a[q][p] = -1
            elif m == 4:
                a[p][q], a[q][p] = -1, -2
            elif m == 6:
                a[p][q], a[q][p] = -3, -1
            elif m == 5 and c.kind == "H":
                a[p][q] = a[q][p] = -PHI
            else:
                raise DiagramError(f"no exact pairing for bond order {m} in {c.name}")
    return a


@dataclass(eq=False)
class RootSystem:
    """Roots ``0..N-1`` are positive, root ``k + N`` is the negative of root ``k``.

    ``refl[i - 1]`` is the index permutation of the simple reflection with
    label ``i``; the simple root with label ``i`` has index ``i - 1``.
    """
    diagram: CoxeterDiagram
    roots: list[tuple | None]
    refl: np.ndarray
    N: int
    index: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def simple(self, i: int) -> int:
        return i - 1

    def negate(self, k: int) -> int:
        return k + self.N if k < self.N else k - self.N

    def reflect(self, i: int, k: int) -> int:
        return int(self.refl[i - 1, k])

    def is_positive(self, k: int) -> bool:
        return k < self.N

    def __repr__(self):
        return f"RootSystem({self.diagram.name}, N={self.N})"


def _reflect_coords(a, i: int, v: tuple) -> tuple:
    c = sum((a[i][j] * v[j] for j in range(len(v)) if v[j] != 0), 0)
    if c == 0:
        return v
    out = list(v)
    out[i] = out[i] - c
    return tuple(out)


def _root_sign(v: tuple) -> int:
    signs = {scalar_sign(x) for x in v} - {0}
    if len(signs) != 1:
        raise ArithmeticError(f"mixed-sign or zero root {v}")
    return signs.pop()


def _closure(d: CoxeterDiagram, order: Sequence[int]) -> tuple[list[tuple], np.ndarray]:
    n = d.rank
    a = _pairing_matrix(d)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    positives = list(simple)
    index = {v: k for k, v in enumerate(simple)}
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for lab in order:
            w = _reflect_coords(a, lab - 1, v)
            if _root_sign(w) < 0:
                if w != tuple(-x for x in simple[lab - 1]) or v != simple[lab - 1]:
                    raise ArithmeticError(f"s_{lab} sent positive root {v} to {w}")
                continue
            if w not in index:
                index[w] = len(positives)
                positives.append(w)
                queue.append(w)
    N = len(positives)
    roots = positives + [tuple(-x for x in v) for v in positives]
    for k in range(N, 2 * N):
        index[roots[k]] = k
    refl = np.empty((n, 2 * N), dtype=np.intp)
    for i in range(n):
        for k, v in enumerate(roots):
            refl[i, k] = index[_reflect_coords(a, i, v)]
    return roots, refl


def _dihedral(d: CoxeterDiagram) -> tuple[list[None], np.ndarray]:
    m = d.components[0].m
    # angle index k in 0..2m-1  ->  root index
    # positive angles 0..m-1; alpha_1 at angle 0, alpha_2 at angle m-1
    pos_angles = [0, m - 1] + list(range(1, m - 1))
    to_idx = {}
    for k, ang in enumerate(pos_angles):
        to_idx[ang] = k
        to_idx[ang + m] = k + m
    refl = np.empty((2, 2 * m), dtype=np.intp)
    for ang in range(2 * m):
        refl[0, to_idx[ang]] = to_idx[(m - ang) % (2 * m)]
        refl[1, to_idx[ang]] = to_idx[(3 * m - 2 - ang) % (2 * m)]
    return [None] * (2 * m), refl


def build_root_system(d: CoxeterDiagram, order: Sequence[int] | None = None) -> RootSystem:
    """Close the simple roots under the simple reflections.

    ``order`` permutes the generators visited at each closure step; it only
    changes the indices of non-simple roots.
    """
    if any(c.is_general_dihedral for c in d.components):
        if len(d.components) != 1:
            raise DiagramError("general dihedral components must stand alone")
        roots, refl = _dihedral(d)
    else:
        roots, refl = _closure(d, list(order) if order is not None else list(d.nodes))
    N = len(roots) // 2
    rs = RootSystem(d, roots, refl, N)
    rs.index = {v: k for k, v in enumerate(roots) if v is not None}
    return rs


def reflect(rs: RootSystem, i: int, k: int) -> int:
    return rs.reflect(i, k)
