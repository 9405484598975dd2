"""
Group elements as signed permutations of the roots.

An :class:`Element` stores the image of every root index under the
element's left action, ``perm[k] = w(root_k)``.  The length is the number
of positive roots sent to negative ones; left descents come from the
inverse permutation, right descents from ``perm`` itself.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .rootsys import RootSystem

__all__ = [
    "Element", "identity", "gen", "mul", "inverse", "left_descents",
    "right_descents", "from_word", "canonical_word", "support",
    "bruhat_leq", "format_word", "parse_word",
]


class Element:
    __slots__ = ("rs", "perm", "length", "_inv", "_hash")

    def __init__(self, rs: RootSystem, perm: np.ndarray, length: int | None = None,
                 inv: np.ndarray | None = None):
        self.rs = rs
        self.perm = perm
        perm.flags.writeable = False
        if length is None:
            length = int(np.count_nonzero(perm[: rs.N] >= rs.N))
        self.length = length
        self._inv = inv
        self._hash = None

    @classmethod
    def from_inverse(cls, rs: RootSystem, inv: np.ndarray, length: int | None = None) -> Element:
        perm = np.empty_like(inv)
        perm[inv] = np.arange(len(inv), dtype=inv.dtype)
        return cls(rs, perm, length, inv)

    @property
    def inv(self) -> np.ndarray:
        """Inverse permutation, computed on first use."""
        if self._inv is None:
            inv = np.empty_like(self.perm)
            inv[self.perm] = np.arange(len(self.perm), dtype=self.perm.dtype)
            inv.flags.writeable = False
            self._inv = inv
        return self._inv

    def _same_group(self, other: Element) -> None:
        if self.rs is not other.rs:
            raise ValueError(
                f"elements of different groups: {self.rs.diagram.name} vs {other.rs.diagram.name}")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.rs is other.rs and np.array_equal(self.perm, other.perm)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.perm.tobytes())
        return self._hash

    def __mul__(self, other: Element) -> Element:
        return mul(self, other)

    def __repr__(self):
        return f"Element({self.rs.diagram.name}, [{format_word(canonical_word(self))}])"

    def __str__(self):
        return format_word(canonical_word(self))

    def is_identity(self) -> bool:
        return self.length == 0

    def left_descent(self, i: int) -> bool:
        return bool(self.inv[i - 1] >= self.rs.N)

    def right_descent(self, i: int) -> bool:
        return bool(self.perm[i - 1] >= self.rs.N)

    def lmul_gen(self, i: int) -> Element:
        """``s_i * self``."""
        d = -1 if self.left_descent(i) else 1
        return Element(self.rs, self.rs.refl[i - 1][self.perm], self.length + d)

    def rmul_gen(self, i: int) -> Element:
        """``self * s_i``."""
        d = -1 if self.right_descent(i) else 1
        return Element(self.rs, self.perm[self.rs.refl[i - 1]], self.length + d)


def identity(rs: RootSystem) -> Element:
    return Element(rs, np.arange(2 * rs.N, dtype=np.intp), 0)


def gen(rs: RootSystem, i: int) -> Element:
    _check_letter(rs, i)
    return Element(rs, rs.refl[i - 1].copy(), 1)


def mul(x: Element, y: Element) -> Element:
    """Ordinary group product ``xy``."""
    x._same_group(y)
    return Element(x.rs, x.perm[y.perm])


def inverse(x: Element) -> Element:
    return Element(x.rs, x.inv.copy(), x.length, x.perm)


def left_descents(x: Element) -> frozenset[int]:
    N = x.rs.N
    inv = x.inv
    return frozenset(i for i in x.rs.diagram.nodes if inv[i - 1] >= N)


def right_descents(x: Element) -> frozenset[int]:
    N = x.rs.N
    return frozenset(i for i in x.rs.diagram.nodes if x.perm[i - 1] >= N)


def _check_letter(rs: RootSystem, i) -> None:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= rs.rank:
        raise ValueError(f"{i!r} is not a generator of {rs.diagram.name}")


def from_word(rs: RootSystem, word: Iterable[int]) -> Element:
    """Product ``s_{w[0]} s_{w[1]} ...``; the word need not be reduced."""
    perm = np.arange(2 * rs.N, dtype=np.intp)
    for i in word:
        _check_letter(rs, i)
        perm = perm[rs.refl[i - 1]]
    return Element(rs, perm)


def canonical_word(x: Element) -> list[int]:
    """ShortLex-minimal reduced word: strip the smallest left descent each step."""
    rs = x.rs
    N = rs.N
    nodes = rs.diagram.nodes
    inv = x.inv
    out = []
    for _ in range(x.length):
        for i in nodes:
            if inv[i - 1] >= N:
                break
        out.append(i)
        # (s_i x)^{-1} = x^{-1} s_i
        inv = inv[rs.refl[i - 1]]
    return out


def support(x: Element) -> frozenset[int]:
    return frozenset(canonical_word(x))


def bruhat_leq(u: Element, w: Element) -> bool:
    """Bruhat order via the lifting property, descending along w's smallest left descent."""
    u._same_group(w)
    rs = u.rs
    N = rs.N
    nodes = rs.diagram.nodes
    uinv, lu = u.inv, u.length
    winv, lw = w.inv, w.length
    while True:
        if lu > lw:
            return False
        if lu == lw:
            return bool(np.array_equal(uinv, winv))
        if lu == 0:
            return True
        for i in nodes:
            if winv[i - 1] >= N:
                break
        r = rs.refl[i - 1]
        if uinv[i - 1] >= N:
            uinv = uinv[r]
            lu -= 1
        winv = winv[r]
        lw -= 1


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


def parse_word(rs: RootSystem, text: str) -> list[int]:
    """Parse a space-separated word such as ``"1 2 1"``; empty text is the empty word."""
    try:
        word = [int(tok) for tok in text.split()]
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    for i in word:
        _check_letter(rs, i)
    return word
