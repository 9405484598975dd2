"""
The Demazure product ``x * y`` and the downward operation ``x |> y``.

Both fold the canonical word ``i_1 ... i_k`` of x from the right onto y::

    star:  z <- s_i z  if that is longer   (z = max{z, s_i z})
    down:  z <- s_i z  if that is shorter  (z = min{z, s_i z})

z and s_i z always differ in length by one, so each step is a single
left-descent test.  The fold keeps only the inverse permutation of z,
because the left descent test reads ``z^{-1}(alpha_i)`` and
``(s_i z)^{-1} = z^{-1} s_i`` is one fancy-index.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .element import Element, canonical_word, mul
from .rootsys import RootSystem

__all__ = ["star", "down", "longest", "w0J_w0I", "star_word", "down_word"]


def _fold(rs: RootSystem, word: Sequence[int], zinv: np.ndarray, zlen: int,
          grow: bool) -> tuple[np.ndarray, int]:
    N = rs.N
    refl = rs.refl
    for i in reversed(word):
        if (zinv[i - 1] >= N) != grow:
            zinv = zinv[refl[i - 1]]
            zlen += 1 if grow else -1
    return zinv, zlen


def star_word(rs: RootSystem, word: Sequence[int], y: Element) -> Element:
    """``s_{w_1} * (s_{w_2} * (... * y))`` for an arbitrary word."""
    zinv, zlen = _fold(rs, word, y.inv, y.length, grow=True)
    return Element.from_inverse(rs, zinv, zlen)


def down_word(rs: RootSystem, word: Sequence[int], y: Element) -> Element:
    """``s_{w_1} |> (s_{w_2} |> (... |> y))`` for an arbitrary word."""
    zinv, zlen = _fold(rs, word, y.inv, y.length, grow=False)
    return Element.from_inverse(rs, zinv, zlen)


def star(x: Element, y: Element) -> Element:
    """Demazure product: the Bruhat-maximum of ``{uv : u <= x, v <= y}``."""
    x._same_group(y)
    return star_word(x.rs, canonical_word(x), y)


def down(x: Element, y: Element) -> Element:
    """The Bruhat-minimum of ``{uy : u <= x}``."""
    x._same_group(y)
    return down_word(x.rs, canonical_word(x), y)


def longest(rs: RootSystem, J: Iterable[int]) -> Element:
    """Longest element of the parabolic subgroup generated by ``{s_j : j in J}``."""
    J = sorted(rs.diagram.check_subset(J))
    key = ("longest", tuple(J))
    hit = rs._cache.get(key)
    if hit is not None:
        return hit
    N = rs.N
    refl = rs.refl
    zinv = np.arange(2 * N, dtype=np.intp)
    zlen = 0
    while True:
        for j in J:
            if zinv[j - 1] < N:
                zinv = zinv[refl[j - 1]]
                zlen += 1
                break
        else:
            break
    z = Element.from_inverse(rs, zinv, zlen)
    rs._cache[key] = z
    return z


def w0J_w0I(rs: RootSystem, J: Iterable[int]) -> Element:
    """``w_0^J w_0^I``, of length ``l(w_0^I) - l(w_0^J)``."""
    return mul(longest(rs, J), longest(rs, rs.diagram.nodes))


def star_mirror(x: Element, y: Element) -> Element:
    """``x * y`` folded the other way: walk y's word left to right, right-multiplying x."""
    x._same_group(y)
    z = x
    for i in canonical_word(y):
        if not z.right_descent(i):
            z = z.rmul_gen(i)
    return z
