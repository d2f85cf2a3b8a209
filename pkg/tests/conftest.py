from fractions import Fraction as F
from functools import lru_cache
from itertools import permutations, product

import pytest
from hypothesis import strategies as st

from hnstrata.isodata import hodge_from_tuple, newton_from_slopes
from hnstrata.permcomb import Perm, intervals

rationals = st.builds(F, st.integers(-12, 12), st.integers(1, 6))


def rat_tuples(min_size=1, max_size=8):
    return st.lists(rationals, min_size=min_size, max_size=max_size).map(tuple)


def all_perms(n):
    return [Perm(p) for p in permutations(range(1, n + 1))]


def brute_double_cosets(left, right):
    """Partition S_n into double cosets S_left x S_right by orbit closure.

    Left multiplication by a simple transposition (i i+1) inside a left block
    swaps the values i, i+1; right multiplication by one inside a right block
    swaps positions j, j+1. Works on raw one-line tuples.
    """
    n = sum(left)
    gens_l = [i for rng in intervals(left) for i in rng[:-1]]
    gens_r = [j for rng in intervals(right) for j in rng[:-1]]
    seen, cosets = set(), []
    for start in permutations(range(1, n + 1)):
        if start in seen:
            continue
        orbit, stack = {start}, [start]
        while stack:
            x = stack.pop()
            nbrs = []
            for i in gens_l:
                nbrs.append(tuple(i + 1 if v == i else i if v == i + 1 else v for v in x))
            for j in gens_r:
                y = list(x)
                y[j - 1], y[j] = y[j], y[j - 1]
                nbrs.append(tuple(y))
            for y in nbrs:
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        cosets.append({Perm(t) for t in orbit})
    return cosets


def count_tables(rows, cols):
    """Count non-negative integer matrices with given margins, column by column."""
    @lru_cache(maxsize=None)
    def rec(j, remaining):
        if j == len(cols):
            return int(not any(remaining))
        total = 0
        for split in product(*(range(r + 1) for r in remaining)):
            if sum(split) == cols[j]:
                total += rec(j + 1, tuple(r - s for r, s in zip(remaining, split)))
        return total

    return rec(0, tuple(rows))


@pytest.fixture
def d3():
    return newton_from_slopes(["1/2", "0"]), hodge_from_tuple([4, 1, 0])


@pytest.fixture
def d5():
    return newton_from_slopes([0] * 5), hodge_from_tuple([5, 4, 3, 2, -14])


@pytest.fixture
def d2():
    return newton_from_slopes([0, 0]), hodge_from_tuple([1, 0])


@st.composite
def instances(draw, max_d=5, rational_mu=False):
    """Random (NewtonData, HodgeData) with d <= max_d."""
    slopes, room = [], draw(st.integers(1, max_d))
    while room:
        b = draw(st.integers(1, min(3, room)))
        a = draw(st.integers(-4, 4))
        q = F(a, b)
        slopes.append(q)
        room -= q.denominator
    d = sum(q.denominator for q in slopes)
    entry = rationals if rational_mu else st.integers(-6, 6).map(F)
    mu = draw(st.lists(entry, min_size=d, max_size=d))
    return newton_from_slopes(sorted(slopes, reverse=True)), hodge_from_tuple(mu)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
