"""Explicit cutsets and brute-force oracles.

The constructions build concrete families; ``is_cutset`` and
``exhaustive_feasible`` decide cutset questions by direct search over the
Boolean lattice and share no code with the boundary-operator machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .canonical import BudgetExceeded, Profile
from .colex import Family, Subset, as_subset

#: largest ground set for the 2^n-state chain DP
DP_MAX_N = 25
#: largest ground set for exhaustive profile search
EXHAUSTIVE_MAX_N = 5


@dataclass(frozen=True)
class MultiFamily:
    """Subsets of [n] of mixed sizes."""

    n: int
    members: frozenset[Subset]

    def __post_init__(self):
        for s in self.members:
            as_subset(s, self.n)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(sorted(self.members, key=lambda s: (len(s), s[::-1])))

    def __contains__(self, s) -> bool:
        return tuple(s) in self.members

    def level(self, i: int) -> frozenset[Subset]:
        return frozenset(s for s in self.members if len(s) == i)

    def levels(self) -> list[int]:
        return sorted({len(s) for s in self.members})

    def __or__(self, other: "MultiFamily") -> "MultiFamily":
        if self.n != other.n:
            raise ValueError("cannot join families over different ground sets")
        return MultiFamily(self.n, self.members | other.members)


def multifamily(n: int, members: Iterable[Iterable[int]]) -> MultiFamily:
    return MultiFamily(n, frozenset(tuple(s) for s in members))


def from_families(n: int, families: Iterable[Family]) -> MultiFamily:
    out: set[Subset] = set()
    for fam in families:
        out |= fam.members
    return MultiFamily(n, frozenset(out))


def profile_of(c: MultiFamily) -> Profile:
    f = [0] * (c.n + 1)
    for s in c.members:
        f[len(s)] += 1
    return Profile(c.n, tuple(f))


# -- constructions ----------------------------------------------------------

def _k_subsets(ground: int, k: int) -> list[Subset]:
    if k < 0 or ground < 0:
        return []
    return list(combinations(range(1, ground + 1), k))


def two_level(n: int, m: int) -> MultiFamily:
    """m-subsets avoiding n together with (m+1)-subsets containing n."""
    if not 0 <= m <= n - 1:
        raise ValueError(f"two_level needs 0 <= m <= n-1, got n={n}, m={m}")
    lower = _k_subsets(n - 1, m)
    upper = [s + (n,) for s in lower]
    return multifamily(n, lower + upper)


def qrs_parts(n: int, m: int) -> tuple[list[list[Subset]], list[list[Subset]], list[list[Subset]]]:
    """The blocks Q_0..Q_m, R_1..R_m and S_1..S_m (index 0 of R/S unused)."""
    if not (1 <= m and 2 * m <= n - 2):
        raise ValueError(f"qrs needs 1 <= m <= n/2 - 1, got n={n}, m={m}")
    q: list[list[Subset]] = []
    for j in range(m + 1):
        tail = tuple(sorted(n - 2 * t + 1 for t in range(1, j + 1)))  # n-1, n-3, ..., n-2j+1
        q.append([a + tail for a in _k_subsets(n - 2 * j - 2, m - j)])
    r: list[list[Subset]] = [[]]
    s: list[list[Subset]] = [[]]
    for j in range(1, m + 1):
        r.append([tuple(sorted(x + (n - 2 * j + 2,))) for x in q[j - 1]])
        # built from R_j, not R_{j-1}: S_1 must be the (m+2)-sets containing n-1 and n
        s.append([tuple(sorted(x + (n - 2 * j + 1,))) for x in r[j]])
    return q, r, s


def qrs(n: int, m: int) -> tuple[MultiFamily, MultiFamily, MultiFamily]:
    """A cutset with profile (f+1, f, f) on levels m, m+1, m+2.

    Returns the three layers separately; their union is the cutset.
    """
    q, r, s = qrs_parts(n, m)
    return (
        multifamily(n, (x for block in q for x in block)),
        multifamily(n, (x for block in r for x in block)),
        multifamily(n, (x for block in s for x in block)),
    )


def complement(s: Subset, n: int) -> Subset:
    present = set(s)
    return tuple(x for x in range(1, n + 1) if x not in present)


def double_by_complements(a: MultiFamily, n: int, check: bool = True) -> tuple[MultiFamily, bool]:
    """Join a cutset of 2^[n-1] with the complements (in [n]) of its members.

    ``a`` must live on levels below n/2. When ``check`` is set and n-1 is
    small enough the input is verified to be a cutset of 2^[n-1].
    Returns the doubled family and whether the input was verified.
    """
    if a.n != n - 1:
        raise ValueError(f"input must be a family over [{n - 1}], got [{a.n}]")
    top = max((len(s) for s in a.members), default=0)
    if 2 * top >= n:
        raise ValueError(f"input reaches level {top}, must stay below n/2 = {n / 2}")
    verified = False
    if check and n - 1 <= 20:
        if not is_cutset(a):
            raise ValueError(f"input is not a cutset of 2^[{n - 1}]")
        verified = True
    members = set(a.members)
    members.update(complement(s, n) for s in a.members)
    return MultiFamily(n, frozenset(members)), verified


# -- oracles ----------------------------------------------------------------

def _to_mask(s: Subset) -> int:
    out = 0
    for x in s:
        out |= 1 << (x - 1)
    return out


@lru_cache(maxsize=32)
def _levels_by_popcount(n: int) -> tuple[np.ndarray, ...]:
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pop += (masks >> b) & 1
    return tuple(masks[pop == k] for k in range(n + 1))


def is_cutset(c: MultiFamily) -> bool:
    """Whether ``c`` meets every maximal chain of 2^[n].

    reach[S] means some chain from the empty set up to S avoids ``c``;
    ``c`` is a cutset iff [n] is unreachable.
    """
    n = c.n
    if n > DP_MAX_N:
        raise BudgetExceeded(f"chain DP supports n <= {DP_MAX_N}, got {n}")
    blocked = np.zeros(1 << n, dtype=bool)
    for s in c.members:
        blocked[_to_mask(s)] = True
    reach = np.zeros(1 << n, dtype=bool)
    reach[0] = not blocked[0]
    for idx in _levels_by_popcount(n)[1:]:
        acc = np.zeros(len(idx), dtype=bool)
        for b in range(n):
            has = ((idx >> b) & 1).astype(bool)
            acc[has] |= reach[idx[has] ^ (1 << b)]
        reach[idx] = acc & ~blocked[idx]
    return not reach[(1 << n) - 1]


def exhaustive_feasible(p: Profile) -> bool:
    """Whether some family with profile exactly ``p`` is a cutset.

    Depth-first over the levels. The search state is the set of level-i
    nodes reachable from the empty set by a chain avoiding the members
    chosen so far. Members placed outside that set never matter, and
    covering more reachable nodes never hurts, so at each level only the
    choices of min(f_i, |reach|) reachable nodes are enumerated.
    """
    n, f = p.n, p.f
    if n > EXHAUSTIVE_MAX_N:
        raise BudgetExceeded(f"exhaustive search supports n <= {EXHAUSTIVE_MAX_N}, got {n}")
    failed: set[tuple[int, frozenset[int]]] = set()

    def up(nodes: Iterable[int]) -> frozenset[int]:
        return frozenset(x | (1 << b) for x in nodes for b in range(n) if not x >> b & 1)

    def search(i: int, reach: frozenset[int]) -> bool:
        if (i, reach) in failed:
            return False
        if f[i] >= len(reach):
            return True
        for chosen in combinations(sorted(reach), f[i]):
            if i < n and search(i + 1, up(reach.difference(chosen))):
                return True
        failed.add((i, reach))
        return False

    return search(0, frozenset({0}))


def is_cutset_family(families: Iterable[Family], n: int) -> bool:
    return is_cutset(from_families(n, families))
