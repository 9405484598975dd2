"""Explicit |> evaluations on the maximal parabolics, type by type.

Notation: ``R(a, b)`` is the word ``s_a s_{a-1} ... s_b`` (empty if a < b),
``Ri(a, b)`` its reverse, and ``x = s4 s3 s5 s4 s2`` in type E.
"""

import pytest

from coxstar import down, from_word, identity, longest, mul, w0J_w0I

from conftest import rsys
from conftest import word_range as R
from conftest import word_range_inv as Ri

X = [4, 3, 5, 4, 2]
Xi = X[::-1]


def setup(name):
    rs = rsys(name)
    full = frozenset(rs.diagram.nodes)
    W = lambda w: from_word(rs, w)  # noqa: E731
    L = lambda J: longest(rs, J)  # noqa: E731
    top = lambda k: w0J_w0I(rs, full - {k})  # noqa: E731
    minus = lambda *ks: full - set(ks)  # noqa: E731
    return rs, W, L, top, minus


@pytest.mark.parametrize("n", range(2, 8))
def test_type_a(n):
    rs, W, L, top, minus = setup(f"A{n}")
    assert top(1) == W(Ri(n, 1))
    assert top(n) == W(R(n, 1))
    a = down(top(1), L(minus(1)))
    assert a == mul(W(Ri(n, 2)), L(minus(1))) == L(minus(1, 2))
    a = down(top(1), L(minus(n)))
    assert a == mul(W(Ri(n - 1, 1)), L(minus(n))) == L(minus(1, n))
    a = down(top(n), L(minus(n)))
    assert a == mul(W(R(n - 1, 1)), L(minus(n))) == L(minus(n - 1, n))


@pytest.mark.parametrize("n", range(2, 8))
def test_type_b(n):
    rs, W, L, top, minus = setup(f"B{n}")
    assert top(1) == W(Ri(n - 1, 1) + R(n, 1))
    assert top(n) == W([n] + sum((Ri(n, k) for k in range(n - 1, 0, -1)), []))
    a = down(top(1), L(minus(1)))
    assert a == mul(W(Ri(n - 1, 2) + R(n, 2)), L(minus(1))) == L(minus(1, 2))
    inner = down(W(R(n, 1)), L(minus(n)))
    assert inner == L(minus(n - 1, n))
    assert down(top(1), L(minus(n))) == down(W(Ri(n - 1, 1)), inner) == L(minus(1, n - 1, n))
    a = down(top(n), L(minus(n)))
    mid = [n - 1] + sum((Ri(n - 1, k) for k in range(n - 2, 0, -1)), [])
    assert a == mul(W(mid), L(minus(n))) == identity(rs)


def _d_leaf_word(n, first):
    """``s_f (R(n-2,n-2)^-1 s_g) (R(n-2,n-3)^-1 s_f) ...`` alternating the two leaves."""
    other = n if first == n - 1 else n - 1
    w = [first]
    for k, top in enumerate(range(n - 2, 0, -1)):
        w += Ri(n - 2, top) + [(other, first)[k % 2]]
    return w


@pytest.mark.parametrize("n", range(4, 8))
def test_type_d(n):
    rs, W, L, top, minus = setup(f"D{n}")
    odd = n % 2
    assert top(1) == W(Ri(n - 2, 1) + R(n, 1))
    assert top(n - 1) == W(_d_leaf_word(n, n - 1))
    assert top(n) == W(_d_leaf_word(n, n))
    # parity cases
    assert down(top(n - 1), L(minus(n))) == W(range(1 if odd else 2, n - 1, 2))
    assert down(top(n), L(minus(n))) == W(range(2 if odd else 1, n, 2))
    assert down(top(n - 1), L(minus(n - 1))) == W(list(range(2 if odd else 1, n - 2, 2)) + [n])
    a = down(top(1), L(minus(1)))
    assert a == mul(W(Ri(n - 2, 2) + R(n, 2)), L(minus(1))) == L(minus(1, 2))
    a = down(top(1), L(minus(n - 1)))
    assert a == mul(W(Ri(n - 2, 1) + [n] + R(n - 2, 1)), L(minus(n - 1))) == L(minus(1, n - 1, n))
    assert down(top(1), L(minus(n))) == L(minus(1, n - 1, n))


def test_d4_parity_example():
    rs, W, L, top, minus = setup("D4")
    assert down(top(4), L(minus(4))) == W([1, 3])


def test_type_e6():
    rs, W, L, top, minus = setup("E6")
    assert top(1) == W([1] + Ri(6, 3) + Xi + Ri(6, 1))
    assert top(2) == W(Xi + Ri(6, 1) + R(5, 1) + X)
    # the two middle factors are s4 s5 s6 and s3 s4 s5
    assert top(6) == W(R(6, 1) + Ri(6, 4) + Ri(5, 3) + [2, 4, 3, 1])
    a = down(top(1), L(minus(1)))
    assert a == mul(W(Ri(6, 3) + Xi + Ri(6, 2)), L(minus(1))) == L({2, 4, 5})
    assert down(W([1] + Ri(6, 3)), L(minus(2))) == L(minus(1, 2))
    a = down(top(1), L(minus(2)))
    assert a == mul(W(Ri(6, 3) + [4, 3, 5, 4]), L(minus(1, 2))) == W([4, 6])
    a = down(top(1), L(minus(6)))
    assert a == mul(W([1] + Ri(5, 3) + Xi + Ri(5, 1)), L(minus(6))) == L({3, 4, 5})
    assert down(W([1] + Ri(6, 3) + R(5, 3) + [1, 4, 3, 5, 4]), L(minus(2))) == W([3, 5])
    assert down(top(2), L(minus(2))) == identity(rs)
    assert down(top(6), L(minus(6))) == L({2, 3, 4})
    assert down(top(6), L(minus(2))) == W([1, 4])


def test_type_e7():
    rs, W, L, top, minus = setup("E7")
    assert top(1) == W([1, 3, 4, 2] + R(5, 3) + [1] + R(6, 2) + Ri(6, 4) + R(7, 1) + X + R(6, 3) + [1])
    assert top(2) == W([2, 4, 3, 1] + R(5, 2) + Ri(6, 4) + R(5, 1) + X + R(7, 1) + X
                       + R(6, 3) + R(7, 4) + [2])
    assert top(7) == W(R(7, 1) + X + R(6, 3) + [1] + R(7, 2) + Ri(7, 4))
    assert down(W(R(6, 2) + Ri(6, 4) + R(7, 2) + X + R(6, 3)), L(minus(1))) == L({2, 4, 5, 7})
    assert down(top(1), L(minus(1))) == W([2, 5, 7])
    assert down(W(R(7, 1) + X + R(6, 3) + [1]), L(minus(2))) == W([1, 4] + R(6, 3) + [1])
    assert down(top(1), L(minus(2))) == identity(rs)
    assert down(W(R(6, 1) + X + R(6, 3) + [1]), L(minus(7))) == L(minus(6, 7))
    assert down(top(1), L(minus(7))) == L({3, 4, 5})
    assert down(W(R(7, 1) + X + R(6, 3) + R(7, 4)), L(minus(2))) == W([1, 4, 6])
    assert down(top(2), L(minus(2))) == identity(rs)
    assert down(W(R(5, 1) + X + R(6, 1) + X + R(6, 3) + R(6, 4) + [2]), L(minus(7))) == L({1, 3, 4, 6})
    assert down(top(2), L(minus(7))) == identity(rs)
    a = down(top(7), L(minus(7)))
    assert a == mul(W(R(6, 1) + X + R(6, 3) + [1] + R(6, 2) + Ri(6, 4)), L(minus(7))) == L({2, 3, 4, 5})


def test_type_e8():
    rs, W, L, top, minus = setup("E8")
    blk = R(8, 1) + X + R(6, 3) + [1]
    assert top(1) == W([1, 3, 4, 2] + R(5, 3) + [1] + R(6, 2) + Ri(6, 4) + R(7, 1) + X + R(6, 3) + [1]
                       + blk + R(7, 2) + Ri(6, 4) + blk)
    assert top(2) == W([2, 4, 3, 1] + R(5, 2) + Ri(6, 4) + R(5, 1) + X + R(7, 1) + X + R(6, 3)
                       + R(7, 4) + [2] + blk + R(7, 2) + Ri(7, 4) + R(8, 1) + X + R(6, 3) + R(7, 4) + [2])
    assert top(8) == W(blk + R(7, 2) + Ri(7, 4) + blk + R(7, 2) + Ri(8, 4))
    inner = W(blk + R(7, 2) + Ri(6, 4) + blk)
    assert down(inner, L(minus(1))) == W([3, 5, 7])
    assert down(inner, L(minus(8))) == L({2, 3, 4, 5, 6})
    for p, q in [(1, 1), (1, 2), (1, 8), (2, 2), (2, 8)]:
        assert down(top(p), L(minus(q))) == identity(rs), (p, q)
    a = down(top(8), L(minus(8)))
    mid = R(6, 1) + X + R(6, 3) + [1] + R(6, 2) + Ri(6, 4) + R(7, 1) + X + R(6, 3) + [1] + R(7, 2) + Ri(7, 4)
    assert a == mul(W(mid), L(minus(8))) == L({2, 3, 4, 5})


@pytest.mark.parametrize("name,w1,wn", [
    ("F4", Ri(4, 1) + [2, 3, 2, 1, 2, 3, 2] + R(4, 1), R(4, 1) + [3, 2, 3, 4, 3, 2, 3] + Ri(4, 1)),
    ("H3", [1, 2, 1, 2, 3, 2, 1, 2, 1, 3, 2, 1], [3, 2, 1, 2, 1, 3, 2, 1, 2, 3]),
    ("H4", [1, 2, 1, 2, 3, 2, 1, 2, 1, 3, 2, 1] + (R(4, 1) + [2, 1] + R(3, 1) + [2, 3]) * 4 + [3, 2],
     (R(4, 1) + [2, 1] + R(3, 1) + [2, 3]) * 4 + [4]),
])
def test_non_simply_laced_ends(name, w1, wn):
    rs, W, L, top, minus = setup(name)
    n = rs.rank
    assert top(1) == W(w1)
    assert top(n) == W(wn)
    for p, q in [(1, 1), (1, n), (n, 1), (n, n)]:
        assert down(top(p), L(minus(q))) == identity(rs)
