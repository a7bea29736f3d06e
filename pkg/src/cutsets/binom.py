"""Exact binomial coefficients, cascade (m-binomial) representations and the
boundary operator used by the Kruskal-Katona theorem.

Every count in the package is a plain Python ``int``, so arithmetic is exact
at any magnitude.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=1 << 16)
def binomial(a: int, b: int) -> int:
    """C(a, b), with the convention C(a, b) = 0 when b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class CascadeRep:
    """K = C(a_m, m) + C(a_{m-1}, m-1) + ... + C(a_t, t).

    ``terms`` holds the pairs ``(a_i, i)`` with ``i`` running down from ``m``.
    """

    m: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"level parameter must be >= 1, got {self.m}")
        if not self.terms:
            raise ValueError("a cascade representation has at least one term")
        expected = self.m
        prev = None
        for a, i in self.terms:
            if i != expected:
                raise ValueError(f"indices must descend from m by one; got {i}, expected {expected}")
            if i < 1 or a < i:
                raise ValueError(f"term C({a},{i}) violates a_i >= i >= 1")
            if prev is not None and a >= prev:
                raise ValueError(f"top entries must strictly decrease; {a} after {prev}")
            prev = a
            expected -= 1

    def __str__(self) -> str:
        return "+".join(f"C({a},{i})" for a, i in self.terms)

    @property
    def value(self) -> int:
        return evaluate(self)


def _largest_top(k: int, i: int, hi: int) -> int:
    """Largest a in [i, hi] with C(a, i) <= k (requires C(i, i) = 1 <= k)."""
    lo = i
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if binomial(mid, i) <= k:
            lo = mid
        else:
            hi = mid - 1
    return lo


def cascade(k: int, m: int) -> CascadeRep:
    """Greedy m-binomial representation of a positive integer ``k``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"cascade representation needs K >= 1, got {k}")
    # C(a, m) >= a - m + 1 for m >= 1, so a = k + m is always too large;
    # tighten by doubling to keep the binary search short for small k.
    hi = m
    while binomial(hi, m) <= k:
        hi = min(2 * hi + 1, k + m)
        if hi == k + m:
            break
    terms = []
    rest = k
    for i in range(m, 0, -1):
        a = _largest_top(rest, i, hi)
        terms.append((a, i))
        rest -= binomial(a, i)
        if rest == 0:
            break
        # next top entry is strictly smaller
        hi = a - 1
    return CascadeRep(m, tuple(terms))


def evaluate(rep: CascadeRep) -> int:
    """Sum of the terms of a cascade representation."""
    return sum(binomial(a, i) for a, i in rep.terms)


def boundary(k: int, m: int) -> int:
    """The boundary operator: lower every index of the m-cascade of ``k``.

    Non-positive ``k`` maps to 0. For ``1 <= k <= C(n, m)`` the result is the
    size of the shadow of the first ``k`` m-subsets in colex order.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k <= 0:
        return 0
    return sum(binomial(a, i - 1) for a, i in cascade(k, m).terms)
