import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cutsets.binom import boundary
from cutsets.colex import (
    Segment,
    compare_squashed,
    family,
    format_subset,
    initial,
    iter_colex,
    last,
    materialize,
    parse_subsets,
    rank,
    segment,
    shade,
    shadow,
    successor,
    unrank,
)

from .oracles import colex_level


def test_compare_squashed():
    assert compare_squashed((1, 3), (2, 3)) == -1
    assert compare_squashed((2, 3), (1, 3)) == 1
    assert compare_squashed((2, 4), (2, 4)) == 0
    assert compare_squashed((3, 4), (1, 5)) == -1


def test_compare_size_mismatch():
    with pytest.raises(ValueError):
        compare_squashed((1,), (1, 2))


@pytest.mark.parametrize("n,m", [(5, 2), (6, 3), (7, 1), (4, 4)])
def test_compare_agrees_with_enumeration(n, m):
    level = colex_level(n, m)
    for i, a in enumerate(level):
        for j, b in enumerate(level):
            assert compare_squashed(a, b) == (i > j) - (i < j)


def test_rank_examples():
    assert rank((1, 2, 3)) == 1
    assert rank((2, 3)) == 3
    assert rank((6, 7, 8, 9)) == comb(9, 4)
    assert rank(()) == 1


def test_unrank_examples():
    assert unrank(1, 3, 9) == (1, 2, 3)
    assert unrank(3, 2, 5) == (2, 3)
    assert unrank(comb(9, 4), 4, 9) == (6, 7, 8, 9)
    with pytest.raises(ValueError):
        unrank(0, 2, 5)
    with pytest.raises(ValueError):
        unrank(11, 2, 5)


@pytest.mark.parametrize("n", range(0, 15))
def test_rank_unrank_exhaustive(n):
    for m in range(n + 1):
        for k, s in enumerate(colex_level(n, m), start=1):
            assert rank(s) == k
            assert unrank(k, m, n) == s


@settings(max_examples=300, deadline=None)
@given(st.integers(15, 80).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))).flatmap(
    lambda nm: st.tuples(st.just(nm[0]), st.just(nm[1]), st.integers(1, comb(nm[0], nm[1])))))
def test_rank_unrank_random_large(nmk):
    n, m, k = nmk
    s = unrank(k, m, n)
    assert len(s) == m and s[-1] <= n
    assert rank(s) == k


def test_successor_walks_the_level():
    for n, m in [(6, 3), (7, 2), (5, 5), (5, 0)]:
        expected = colex_level(n, m)
        assert list(iter_colex(m, n)) == expected
        assert successor(expected[-1], n) is None


def test_initial_and_last():
    assert initial(3, 2, 4).sorted() == [(1, 2), (1, 3), (2, 3)]
    assert last(2, 2, 4).sorted() == [(2, 4), (3, 4)]
    assert len(initial(0, 2, 4)) == 0
    assert len(last(-2, 2, 4)) == 0
    with pytest.raises(ValueError):
        initial(7, 2, 4)


def test_shadow_and_shade_definitions():
    assert shadow(family(3, 3, [(1, 2, 3)])).sorted() == [(1, 2), (1, 3), (2, 3)]
    assert shade(family(5, 2, [(3, 4)])).sorted() == [(1, 3, 4), (2, 3, 4), (3, 4, 5)]
    assert shadow(initial(13, 2, 7)).members == initial(6, 1, 7).members
    with pytest.raises(ValueError):
        shadow(family(3, 0, [()]))
    with pytest.raises(ValueError):
        shade(family(3, 3, [(1, 2, 3)]))


def test_materialize():
    assert materialize(Segment(2, 1, 3, 4)).members == initial(3, 2, 4).members
    assert len(materialize(segment(2, 4, 3, 4))) == 0
    assert materialize(Segment(3, 1, comb(6, 3), 6)).members == frozenset(combinations(range(1, 7), 3))


def test_segment_invariants():
    with pytest.raises(ValueError):
        Segment(2, 3, 1, 4)
    with pytest.raises(ValueError):
        Segment(2, 1, 7, 4)
    assert segment(2, 5, 4, 4) == Segment(2, 1, 0, 4)


def test_family_validation():
    with pytest.raises(ValueError):
        family(4, 2, [(1, 2, 3)])
    with pytest.raises(ValueError):
        family(4, 2, [(1, 5)])
    with pytest.raises(ValueError):
        family(4, 2, [(2, 1)])


@pytest.mark.parametrize("n", range(1, 13))
def test_initial_shadows_and_last_shades_exhaustive(n):
    # grow F_m(K) and L_m(K) one subset at a time and keep the shadow/shade
    for m in range(1, n + 1):
        level = colex_level(n, m)
        seen: set = set()
        hi = 0
        for k, s in enumerate(level, start=1):
            new = set(combinations(s, m - 1)) - seen
            seen |= new
            hi = max([hi, *map(rank, new)])
            assert len(seen) == boundary(k, m)
            assert hi == len(seen)  # an initial collection
    for m in range(0, n):
        level = colex_level(n, m)
        top = comb(n, m + 1)
        seen = set()
        lo = top + 1
        for k, s in enumerate(reversed(level), start=1):
            rest = set(range(1, n + 1)) - set(s)
            new = {tuple(sorted(s + (x,))) for x in rest} - seen
            seen |= new
            lo = min([lo, *map(rank, new)])
            assert len(seen) == boundary(k, n - m)
            assert lo == top - len(seen) + 1  # a last collection


def test_family_level_shadow_identity_spot():
    for n, m, k in [(8, 4, 50), (10, 3, 97), (12, 6, 600)]:
        assert shadow(initial(k, m, n)).members == initial(boundary(k, m), m - 1, n).members
        assert shade(last(k, m, n)).members == last(boundary(k, n - m), m + 1, n).members


def test_kruskal_katona_random_families():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(2, 12)
        m = rng.randint(1, n - 1)
        level = list(combinations(range(1, n + 1), m))
        b = family(n, m, rng.sample(level, rng.randint(1, len(level))))
        assert len(shadow(b)) >= boundary(len(b), m)
        assert len(shade(b)) >= boundary(len(b), n - m)


@pytest.mark.parametrize("n", range(0, 11))
def test_complement_maps_last_onto_initial(n):
    full = set(range(1, n + 1))
    for m in range(n + 1):
        for k in range(comb(n, m) + 1):
            comp = {tuple(sorted(full - set(s))) for s in last(k, m, n).members}
            assert comp == set(initial(k, n - m, n).members)


def test_text_format_round_trip():
    lines = ["[1,3,5]", "", "[]", "[2]"]
    subsets = parse_subsets(lines)
    assert subsets == [(1, 3, 5), (), (2,)]
    assert [format_subset(s) for s in subsets] == ["[1,3,5]", "[]", "[2]"]


@pytest.mark.parametrize("bad", [["[1,1]"], ["[3,2]"], ["[1,2]", "[1,2]"], ["{1}"], ["[0]"], ['["a"]']])
def test_text_format_rejects(bad):
    with pytest.raises(ValueError, match="line"):
        parse_subsets(bad)


def test_text_format_checks_ground_set():
    with pytest.raises(ValueError, match="line 1"):
        parse_subsets(["[1,6]"], n=5)
