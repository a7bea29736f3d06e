"""The extremal function g_n(m, l) and its closed forms and bounds.

g_n(m, l) is the least k such that the profile with k on every level
m..l (and 0 elsewhere) belongs to a cutset of 2^[n].
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .binom import CascadeRep, binomial, cascade
from .canonical import Profile, is_cutset_profile


def _check_band(n: int, m: int, l: int):
    if not 0 <= m <= l <= n:
        raise ValueError(f"need 0 <= m <= l <= n, got n={n}, m={m}, l={l}")


def constant_profile(n: int, m: int, l: int, k: int) -> Profile:
    _check_band(n, m, l)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    f = tuple(k if m <= i <= l else 0 for i in range(n + 1))
    return Profile(n, f)


def reduce_band(n: int, m: int, l: int) -> tuple[int, int]:
    """Map (m, l) to an equivalent band with l <= n - m."""
    _check_band(n, m, l)
    if l > n - m:
        return n - l, n - m
    return m, l


def g(n: int, m: int, l: int) -> int:
    """Least k making the constant band m..l a cutset profile.

    Binary search over [1, C(n, m)]: feasibility is monotone in k, k = 0 is
    never feasible and k = C(n, m) always is (the whole level m).
    """
    m, l = reduce_band(n, m, l)
    lo, hi = 0, binomial(n, m)  # lo infeasible, hi feasible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if is_cutset_profile(constant_profile(n, m, l, mid)):
            hi = mid
        else:
            lo = mid
    return hi


def theorem1_value(n: int, m: int, l: int) -> int:
    """Closed form of g_n(m, l) for l = m, m+1, m+2."""
    _check_band(n, m, l)
    if l == m:
        return binomial(n, m)
    if l == m + 1:
        return binomial(n - 1, m)
    if l == m + 2:
        if 2 * m > n - 2:
            raise ValueError(f"the l = m+2 closed form needs m <= n/2 - 1, got n={n}, m={m}")
        return sum(binomial(n - 2 * j - 2, m - j) for j in range(m + 1))
    raise ValueError(f"no closed form for l = {l} with m = {m}; need l - m in {{0, 1, 2}}")


def theorem2_bounds(n: int, m: int, l: int) -> tuple[int, int]:
    """(lower, upper) with lower < g_n(m, l) <= upper, valid for n >> m.

    Covers m+2 <= l <= n-m-1 and l = n-m.
    """
    _check_band(n, m, l)
    if m + 2 <= l <= n - m - 1:
        return binomial(n - 2, m), sum(binomial(n - 2 * j - 2, m - j) for j in range(m + 1))
    if l == n - m:
        return binomial(n - 3, m), sum(binomial(n - 2 * j - 3, m - j) for j in range(m + 1))
    raise ValueError(f"bounds need m+2 <= l <= n-m-1 or l = n-m, got n={n}, m={m}, l={l}")


def corollary3_value(n: int, l: int) -> int:
    """g_n(1, l) for n > 4."""
    if n <= 4:
        raise ValueError(f"needs n > 4, got {n}")
    if not 1 <= l <= n - 1:
        raise ValueError(f"needs 1 <= l <= n-1, got l={l}")
    if l == 1:
        return n
    if l == n - 1:
        return n - 2
    return n - 1


def minusing_profile(n: int, m: int) -> Profile:
    """A symmetric profile on levels m..n-m that admits no cutset.

    C(n-3, m) on levels m, m+1, n-m-1, n-m and C(n+m-i-1, m+1) on levels
    i and n-i for m+2 <= i <= n//2.
    """
    half = n // 2
    if m < 1:
        raise ValueError(f"needs m >= 1, got {m}")
    if not (m + 2 <= half and n - m - 1 > half):
        raise ValueError(f"level ranges overlap for n={n}, m={m}; need n >= 2m + 4")
    f = [0] * (n + 1)
    edge = binomial(n - 3, m)
    for i in (m, m + 1, n - m - 1, n - m):
        f[i] = edge
    for i in range(m + 2, half + 1):
        f[i] = f[n - i] = binomial(n + m - i - 1, m + 1)
    return Profile(n, tuple(f))


def vertical_identity_sides(n: int, m: int, d: int) -> tuple[int, int]:
    if not (1 <= m and 2 * m <= n and 0 <= d <= m - 1):
        raise ValueError(f"needs 1 <= m <= n/2 and 0 <= d <= m-1, got n={n}, m={m}, d={d}")
    left = sum(binomial(n - 2 * j - 2, m - j) for j in range(m - d))
    left += sum(binomial(n - 2 * j - 1, m + 2 - j) for j in range(m - d))
    left += binomial(n - 2 * m + 2 * d, d + 2)
    return left, binomial(n, m + 2)


def vertical_identity_check(n: int, m: int, d: int) -> bool:
    """Check the two-column Pascal triangle identity behind the l = m+2 case."""
    left, right = vertical_identity_sides(n, m, d)
    return left == right


def conjecture_value(n: int, m: int, l: int) -> int | None:
    """Conjectured g_n(m, l) for 2m <= l <= n-m-1 and l = n-m, else None."""
    if 2 * m <= l <= n - m - 1:
        return binomial(n, m) - binomial(n, m - 1)
    if l == n - m:
        return binomial(n - 1, m) - binomial(n - 1, m - 1)
    return None


@dataclass(frozen=True)
class GRow:
    l: int
    g: int
    rep: CascadeRep | None  # None on band m = 0, where g = 1

    @property
    def cascade_text(self) -> str:
        return str(self.rep) if self.rep is not None else f"{self.g}"


@dataclass(frozen=True)
class GTable:
    n: int
    m: int
    rows: tuple[GRow, ...]


def _row(args: tuple[int, int, int]) -> GRow:
    n, m, l = args
    value = g(n, m, l)
    return GRow(l, value, _rep(value, m))


def _rep(value: int, m: int) -> CascadeRep | None:
    return cascade(value, m) if m >= 1 else None


def g_table(n: int, m: int, l_from: int | None = None, l_to: int | None = None,
            jobs: int = 1, known: dict[int, int] | None = None) -> GTable:
    """g_n(m, l) for every l in l_from..l_to (default m..n-m).

    ``known`` maps l to an already computed value and skips the search.
    """
    l_from = m if l_from is None else l_from
    l_to = n - m if l_to is None else l_to
    if l_from > l_to:
        raise ValueError(f"empty l range {l_from}..{l_to}")
    _check_band(n, m, l_from)
    _check_band(n, m, l_to)
    known = known or {}
    pending = [(n, m, l) for l in range(l_from, l_to + 1) if l not in known]
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(_row, pending))
    else:
        computed = [_row(t) for t in pending]
    rows = {r.l: r for r in computed}
    for l, value in known.items():
        if l_from <= l <= l_to:
            rows[l] = GRow(l, value, _rep(value, m))
    return GTable(n, m, tuple(rows[l] for l in range(l_from, l_to + 1)))
