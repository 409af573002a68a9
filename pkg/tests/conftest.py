"""Independent oracles and hypothesis strategies shared by the test modules."""

import itertools
from math import comb

import pytest
from hypothesis import strategies as st

from catalan_zeta.dyck import DyckPath, path_from_area_sequence


def catalan_closed(n):
    return comb(2 * n, n) // (n + 1)


def brute_force_paths(n):
    """All N/E strings of length 2n that stay weakly above the diagonal."""
    out = []
    for steps in itertools.product("NE", repeat=2 * n):
        height = 0
        for s in steps:
            height += 1 if s == "N" else -1
            if height < 0:
                break
        else:
            if height == 0:
                out.append("".join(steps))
    return out


def brute_force_property_a(n):
    """Length-n words over {0..n-1} filtered literally by (A1) and (A2)."""
    out = []
    for w in itertools.product(range(n), repeat=n):
        if any(w[i + 1] < w[i] - 1 for i in range(n - 1)):
            continue
        ok = True
        for k in set(w) - {0}:
            i = w.index(k)
            if not (k - 1 in w[:i] and k - 1 in w[i + 1 :]):
                ok = False
                break
        if ok:
            out.append(w)
    return out


def geometric_bounce(steps):
    """Walk the bounce path on the lattice: north until D starts an east step, then east to the diagonal."""
    east_starts = set()
    x = y = 0
    for s in steps:
        if s == "N":
            y += 1
        else:
            east_starts.add((x, y))
            x += 1
    n = len(steps) // 2
    total = 0
    j = 0
    while j < n:
        y = j
        while (j, y) not in east_starts:
            y += 1
        j = y
        if j < n:
            total += n - j
    return total


def pair_count_dinv(a):
    return sum(1 for k, l in itertools.combinations(range(len(a)), 2) if a[k] - a[l] in (0, 1))


@st.composite
def area_sequences(draw, min_size=0, max_size=12):
    n = draw(st.integers(min_size, max_size))
    a = []
    for i in range(n):
        a.append(0 if i == 0 else draw(st.integers(0, a[-1] + 1)))
    return tuple(a)


@st.composite
def dyck_paths(draw, min_size=0, max_size=12):
    return path_from_area_sequence(draw(area_sequences(min_size, max_size)))


EXAMPLE_SEQUENCE = (0, 1, 2, 2, 2, 3, 1, 2)


@pytest.fixture
def example_path() -> DyckPath:
    return path_from_area_sequence(EXAMPLE_SEQUENCE)
