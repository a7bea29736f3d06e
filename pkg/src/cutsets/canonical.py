"""Feasibility of cutset profiles via the canonical collection.

For a profile f the canonical collection C(f, m0) is assembled from last
segments (levels 0..m0) and initial segments (levels m0+1..n) of the colex
order. Its segment sizes are driven by two integer recursions::

    u_0 = 1,  u_{m+1} = boundary(u_m - f_m, n - m)
    v_n = 1,  v_{m-1} = boundary(v_m - f_m, m)

and f is the profile of a cutset iff u_m + v_m - f_m <= C(n, m), a test that
gives the same answer at every level m.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .binom import binomial, boundary
from .colex import Family, Segment, last, initial, materialize, rank, segment, shade, shadow

#: levels with more than this many subsets are never materialised
DEFAULT_BUDGET = 10**6


class BudgetExceeded(Exception):
    """Raised when an explicit-set computation would exceed its size budget."""


class LevelInconsistency(AssertionError):
    """The level-wise feasibility test disagreed between two levels."""


@dataclass(frozen=True)
class Profile:
    """Per-level counts (f_0, ..., f_n) with 0 <= f_m <= C(n, m)."""

    n: int
    f: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if len(self.f) != self.n + 1:
            raise ValueError(f"profile for n={self.n} needs {self.n + 1} entries, got {len(self.f)}")
        for m, x in enumerate(self.f):
            if not 0 <= x <= binomial(self.n, m):
                raise ValueError(f"f_{m} = {x} outside 0..C({self.n},{m})")

    @classmethod
    def of(cls, f: Sequence[int]) -> "Profile":
        return cls(len(f) - 1, tuple(int(x) for x in f))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Profile":
        """Parse a JSON array such as ``[0,2,5,6,0,0]``."""
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"profile is not valid JSON: {text!r}") from exc
        if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
            raise ValueError(f"profile must be a JSON array of integers: {text!r}")
        p = cls.of(raw)
        if n is not None and p.n != n:
            raise ValueError(f"profile has {len(raw)} entries but n={n} needs {n + 1}")
        return p

    def __getitem__(self, m: int) -> int:
        return self.f[m]

    def __le__(self, other: "Profile") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.f, other.f))

    def to_json(self) -> str:
        return json.dumps(list(self.f), separators=(",", ":"))


@dataclass(frozen=True)
class UVVectors:
    u: tuple[int, ...]
    v: tuple[int, ...]


@dataclass(frozen=True)
class CanonicalCollection:
    profile: Profile
    pivot: int
    up_segments: tuple[Segment, ...]    # levels 0..pivot
    down_segments: tuple[Segment, ...]  # levels pivot+1..n
    uv: UVVectors

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self.up_segments + self.down_segments

    def counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.segments)


def uv(p: Profile) -> UVVectors:
    n, f = p.n, p.f
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    u[0] = 1
    for m in range(n):
        u[m + 1] = boundary(u[m] - f[m], n - m)
    v[n] = 1
    for m in range(n, 0, -1):
        v[m - 1] = boundary(v[m] - f[m], m)
    return UVVectors(tuple(u), tuple(v))


def slack(p: Profile, vectors: UVVectors | None = None) -> tuple[int, ...]:
    """C(n, m) + f_m - u_m - v_m for every level; feasible iff nonnegative."""
    vectors = vectors or uv(p)
    return tuple(
        binomial(p.n, m) + p.f[m] - vectors.u[m] - vectors.v[m] for m in range(p.n + 1)
    )


def is_cutset_profile(p: Profile, level: int | None = None, all_levels: bool = False) -> bool:
    """True iff some cutset of the Boolean lattice 2^[n] has profile ``p``.

    The test is evaluated at ``level`` (default floor(n/2)). With
    ``all_levels`` every level is evaluated and LevelInconsistency is raised
    if they disagree.
    """
    if level is None:
        level = p.n // 2
    if not 0 <= level <= p.n:
        raise ValueError(f"check level {level} outside 0..{p.n}")
    s = slack(p)
    verdict = s[level] >= 0
    if all_levels:
        verdicts = {x >= 0 for x in s}
        if len(verdicts) != 1:
            raise LevelInconsistency(f"feasibility differs across levels for {list(p.f)}: slack={list(s)}")
    return verdict


def _check_pivot(p: Profile, pivot: int):
    if not 0 <= pivot <= p.n:
        raise ValueError(f"pivot {pivot} outside 0..{p.n}")


def canonical(p: Profile, pivot: int) -> CanonicalCollection:
    """Segments of C(p, pivot), computed from the u/v recursions only."""
    _check_pivot(p, pivot)
    n, f = p.n, p.f
    vectors = uv(p)
    up = []
    for i in range(pivot + 1):
        top = binomial(n, i)
        u = vectors.u[i]
        up.append(segment(i, top - u + 1, min(top - u + f[i], top), n))
    down = []
    for i in range(pivot + 1, n + 1):
        v = vectors.v[i]
        down.append(segment(i, max(1, v - f[i] + 1), v, n))
    return CanonicalCollection(p, pivot, tuple(up), tuple(down), vectors)


def _check_budget(n: int, levels, budget: int):
    for i in levels:
        if binomial(n, i) > budget:
            raise BudgetExceeded(f"level {i} of [{n}] has C({n},{i}) = {binomial(n, i)} subsets, budget is {budget}")


def emit_sets(c: CanonicalCollection, budget: int = DEFAULT_BUDGET) -> list[Family]:
    """Materialise every segment; one Family per level 0..n."""
    _check_budget(c.profile.n, range(c.profile.n + 1), budget)
    return [materialize(s) for s in c.segments]


def _segment_of(fam: Family) -> Segment:
    if not fam.members:
        return segment(fam.level, 1, 0, fam.n)
    ranks = sorted(rank(s) for s in fam.members)
    if ranks[-1] - ranks[0] + 1 != len(ranks):
        raise LevelInconsistency(f"level {fam.level} of the canonical collection is not contiguous")
    return segment(fam.level, ranks[0], ranks[-1], fam.n)


def simulate_sets(p: Profile, pivot: int, budget: int = DEFAULT_BUDGET) -> CanonicalCollection:
    """Build C(p, pivot) by running the set recursion on explicit families.

    Shades, shadows and the removal of colex segments are carried out on
    actual subsets; the returned u/v are the sizes of the reachable sets.
    This path never calls the boundary operator and serves as an oracle
    for ``uv`` and ``canonical``.
    """
    _check_pivot(p, pivot)
    n, f = p.n, p.f
    _check_budget(n, range(n + 1), budget)

    up_sets = []
    reach = Family(n, 0, frozenset({()}))
    u = []
    for m in range(n + 1):
        if m > 0:
            reach = shade(Family(n, m - 1, reach.members - up_sets[-1].members))
        size = len(reach)
        if reach.members != last(size, m, n).members:
            raise LevelInconsistency(f"upward reachable set at level {m} is not a last collection")
        u.append(size)
        cut = last(size, m, n).members - last(size - f[m], m, n).members
        up_sets.append(Family(n, m, cut))
        if m == n:
            break

    down_sets: list[Family] = [None] * (n + 1)  # type: ignore[list-item]
    reach = Family(n, n, frozenset({tuple(range(1, n + 1))}))
    v = [0] * (n + 1)
    for m in range(n, -1, -1):
        if m < n:
            reach = shadow(Family(n, m + 1, reach.members - down_sets[m + 1].members))
        size = len(reach)
        if reach.members != initial(size, m, n).members:
            raise LevelInconsistency(f"downward reachable set at level {m} is not an initial collection")
        v[m] = size
        cut = initial(size, m, n).members - initial(size - f[m], m, n).members
        down_sets[m] = Family(n, m, cut)

    up = tuple(_segment_of(up_sets[i]) for i in range(pivot + 1))
    down = tuple(_segment_of(down_sets[i]) for i in range(pivot + 1, n + 1))
    return CanonicalCollection(p, pivot, up, down, UVVectors(tuple(u), tuple(v)))
