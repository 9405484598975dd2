from functools import lru_cache

import pytest

from coxstar import build_root_system, parse_type
from coxstar.oracle import enumerate_group


@lru_cache(maxsize=None)
def rsys(name: str):
    """One root system per type for the whole session (the engine caches live on it)."""
    return build_root_system(parse_type(name))


@lru_cache(maxsize=None)
def enum(name: str):
    return enumerate_group(rsys(name))


def word_range(a: int, b: int) -> list[int]:
    """``s_a s_{a-1} ... s_b`` as a word; empty when a < b."""
    return list(range(a, b - 1, -1)) if a >= b else []


def word_range_inv(a: int, b: int) -> list[int]:
    return word_range(a, b)[::-1]


@pytest.fixture
def A3():
    return rsys("A3")
