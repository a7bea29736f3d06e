"""Squashed (colex) order on the m-subsets of [n].

Subsets are tuples of strictly increasing integers in ``1..n``. Ranks are
1-based: the first m-subset ``(1, ..., m)`` has rank 1 and the last one
``(n-m+1, ..., n)`` has rank C(n, m).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .binom import binomial

Subset = tuple[int, ...]


def as_subset(elements: Iterable[int], n: int | None = None) -> Subset:
    """Validate and normalise ``elements`` into a Subset."""
    s = tuple(elements)
    for x, y in zip(s, s[1:]):
        if x >= y:
            raise ValueError(f"subset elements must be strictly increasing: {list(s)}")
    if s and s[0] < 1:
        raise ValueError(f"subset elements must be >= 1: {list(s)}")
    if n is not None and s and s[-1] > n:
        raise ValueError(f"subset {list(s)} is not contained in [{n}]")
    return s


def compare_squashed(a: Subset, b: Subset) -> int:
    """-1, 0 or 1 as ``a`` is before, equal to or after ``b`` in colex order."""
    if len(a) != len(b):
        raise ValueError(f"cannot compare subsets of sizes {len(a)} and {len(b)}")
    diff = set(a) ^ set(b)
    if not diff:
        return 0
    return -1 if max(diff) in b else 1


def rank(a: Subset) -> int:
    return 1 + sum(binomial(c - 1, i) for i, c in enumerate(a, start=1))


def unrank(k: int, m: int, n: int) -> Subset:
    top = binomial(n, m)
    if not 1 <= k <= top:
        raise ValueError(f"rank {k} outside 1..{top} for level {m} of [{n}]")
    r = k - 1
    out = [0] * m
    c = n
    for i in range(m, 0, -1):
        # largest c with C(c - 1, i) <= r
        while binomial(c - 1, i) > r:
            c -= 1
        out[i - 1] = c
        r -= binomial(c - 1, i)
        c -= 1
    return tuple(out)


def successor(a: Subset, n: int) -> Subset | None:
    """The next subset in colex order, or None after the last one."""
    m = len(a)
    for i in range(m):
        limit = a[i + 1] if i + 1 < m else n + 1
        if a[i] + 1 < limit:
            return tuple(range(1, i + 1)) + (a[i] + 1,) + a[i + 1:]
    return None


def iter_colex(m: int, n: int, start: int = 1, end: int | None = None) -> Iterator[Subset]:
    """Subsets of rank ``start..end`` at level ``m`` of [n], in order."""
    if end is None:
        end = binomial(n, m)
    if start > end:
        return
    cur: Subset | None = unrank(start, m, n)
    for _ in range(end - start + 1):
        assert cur is not None
        yield cur
        cur = successor(cur, n)


@dataclass(frozen=True)
class Family:
    """A set of subsets of [n], all of size ``level``."""

    n: int
    level: int
    members: frozenset[Subset]

    def __post_init__(self):
        for s in self.members:
            if len(s) != self.level:
                raise ValueError(f"member {list(s)} does not have size {self.level}")
            as_subset(s, self.n)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sorted())

    def __contains__(self, s) -> bool:
        return tuple(s) in self.members

    def sorted(self) -> list[Subset]:
        return sorted(self.members, key=rank)


def family(n: int, level: int, members: Iterable[Iterable[int]]) -> Family:
    return Family(n, level, frozenset(tuple(s) for s in members))


@dataclass(frozen=True)
class Segment:
    """Ranks ``start..end`` (inclusive) at one level; empty when start = end + 1."""

    level: int
    start: int
    end: int
    n: int

    def __post_init__(self):
        if not 1 <= self.start <= self.end + 1:
            raise ValueError(f"bad segment bounds {self.start}..{self.end}")
        if self.end > binomial(self.n, self.level):
            raise ValueError(f"segment end {self.end} beyond C({self.n},{self.level})")

    def __len__(self) -> int:
        return self.end - self.start + 1

    @property
    def empty(self) -> bool:
        return self.end < self.start


def segment(level: int, start: int, end: int, n: int) -> Segment:
    """Build a Segment; every empty range is normalised to ``1..0``."""
    if end < start:
        return Segment(level, 1, 0, n)
    return Segment(level, start, end, n)


def materialize(s: Segment) -> Family:
    return Family(s.n, s.level, frozenset(iter_colex(s.level, s.n, s.start, s.end)))


def initial(k: int, m: int, n: int) -> Family:
    """The first ``k`` m-subsets of [n]; empty for k <= 0."""
    top = binomial(n, m)
    if k > top:
        raise ValueError(f"K = {k} exceeds C({n},{m}) = {top}")
    return materialize(segment(m, 1, k, n))


def last(k: int, m: int, n: int) -> Family:
    """The last ``k`` m-subsets of [n]; empty for k <= 0."""
    top = binomial(n, m)
    if k > top:
        raise ValueError(f"K = {k} exceeds C({n},{m}) = {top}")
    if k <= 0:
        return Family(n, m, frozenset())
    return materialize(segment(m, top - k + 1, top, n))


def shadow(b: Family) -> Family:
    """All (m-1)-subsets contained in some member of ``b``."""
    if b.level < 1:
        raise ValueError("the shadow of level 0 is undefined")
    out = set()
    for s in b.members:
        out.update(combinations(s, b.level - 1))
    return Family(b.n, b.level - 1, frozenset(out))


def shade(b: Family) -> Family:
    """All (m+1)-subsets of [n] containing some member of ``b``."""
    if b.level > b.n - 1:
        raise ValueError(f"the shade of level {b.level} in [{b.n}] is undefined")
    out = set()
    for s in b.members:
        present = set(s)
        for x in range(1, b.n + 1):
            if x not in present:
                out.add(tuple(sorted(present | {x})))
    return Family(b.n, b.level + 1, frozenset(out))


# -- text format: one JSON integer array per line ---------------------------

def format_subset(s: Subset) -> str:
    return json.dumps(list(s), separators=(",", ":"))


def parse_subsets(lines: Iterable[str], n: int | None = None) -> list[Subset]:
    """Parse the line-oriented family format. Blank lines are skipped."""
    out = []
    seen = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"line {lineno}: not a JSON array: {line!r}") from exc
        if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
            raise ValueError(f"line {lineno}: expected an array of integers: {line!r}")
        try:
            s = as_subset(raw, n)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if s in seen:
            raise ValueError(f"line {lineno}: duplicate subset {line}")
        seen.add(s)
        out.append(s)
    return out
