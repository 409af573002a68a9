import random

import pytest
from hypothesis import given, strategies as st

from catalan_zeta.dyck import enumerate_area_sequences
from catalan_zeta.errors import NotPropertyA, NotPropertyB
from catalan_zeta.words import Word, a_to_b, b_to_a, classify, enumerate_words_A

from conftest import brute_force_property_a, catalan_closed

SWAP_INPUTS = ["001021", "011021", "010021", "010210", "010211", "010212", "012102", "010221"]
SWAP_OUTPUTS = ["001201", "011201", "012001", "012010", "012011", "012012", "012120", "012201"]


def digits(w):
    return "".join(map(str, w))


# -- parsing ---------------------------------------------------------------

def test_parse_formats():
    assert Word.parse("0,1,2,0,1").entries == (0, 1, 2, 0, 1)
    assert Word.parse("01201").entries == (0, 1, 2, 0, 1)
    assert Word.parse("0, 10, 3").entries == (0, 10, 3)
    assert str(Word.parse("01201")) == "0,1,2,0,1"


@pytest.mark.parametrize("bad", ["", "0,-1", "0,a"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Word.parse(bad)


# -- classification --------------------------------------------------------

def test_classify_known_a_word():
    assert classify("01021").satisfies_A


def test_classify_b_not_a():
    r = classify("01201")
    assert not r.satisfies_A1
    assert r.violations["A1"] == 4
    assert r.satisfies_B and r.satisfies_C and r.satisfies_D
    assert r.first_violation == ("A1", 4)


def test_classify_single_zero():
    r = classify("0")
    assert r.satisfies_A and r.satisfies_B and r.satisfies_C and r.satisfies_D
    assert r.first_violation is None


def test_classify_a2_reports_value_position():
    r = classify("020")
    assert r.violations["A2"] == 2
    assert "A2 violated at index 2 (value 2)" in r.describe()


def test_c3_only_needs_right_witness():
    r = classify("0110")
    assert r.satisfies_C3
    r = classify("0011")
    assert not r.satisfies_C3 and r.violations["C3"] == 3


def test_report_flags_are_consistent():
    for w in [(0, 1, 0, 2, 1), (1, 0), (0, 2, 1, 0), (0, 0, 1, 1)]:
        r = classify(w)
        assert r.satisfies_A == (r.satisfies_A1 and r.satisfies_A2)
        assert r.satisfies_B == (r.satisfies_B1 and r.satisfies_A2)
        assert r.satisfies_C == (r.satisfies_C1 and r.satisfies_B1 and r.satisfies_C3)
        assert r.satisfies_D == (r.satisfies_C1 and r.satisfies_B1)
        assert classify(w) == r


@given(st.lists(st.integers(0, 4), min_size=1, max_size=8))
def test_b_equals_c_property(w):
    r = classify(w)
    assert r.satisfies_B == r.satisfies_C


@pytest.mark.parametrize("n", range(1, 9))
def test_b_equals_c_on_rise_bounded_words(n):
    # words failing B1 or C1 fail both B and C, so area sequences cover every other case
    for a in enumerate_area_sequences(n):
        r = classify(a.entries)
        assert r.satisfies_B == r.satisfies_C


# -- swap bijection --------------------------------------------------------

@pytest.mark.parametrize("w, expected", list(zip(SWAP_INPUTS, SWAP_OUTPUTS)))
def test_swap_golden(w, expected):
    assert digits(a_to_b(w)) == expected
    assert digits(b_to_a(expected)) == w


def test_golden_inputs_are_the_only_length_six_swaps():
    moved = [digits(w) for w in enumerate_words_A(6) if not classify(w).satisfies_B1]
    assert sorted(moved) == sorted(SWAP_INPUTS)


def test_swap_trivial():
    assert digits(a_to_b("000")) == "000"
    assert digits(b_to_a("0101")) == "0101"


def test_swap_preconditions():
    with pytest.raises(NotPropertyA):
        a_to_b("020")
    with pytest.raises(NotPropertyB):
        b_to_a("010021")


@pytest.mark.parametrize("n", range(1, 9))
def test_swap_round_trip_exhaustive(n):
    words = list(enumerate_words_A(n))
    images = set()
    for w in words:
        b = a_to_b(w)
        assert classify(b).satisfies_B
        assert sorted(b) == sorted(w)
        assert b_to_a(b) == w
        images.add(b.entries)
    b_words = {a.entries for a in enumerate_area_sequences(n) if classify(a.entries).satisfies_B}
    assert images == b_words
    for b in b_words:
        assert a_to_b(b_to_a(b)).entries == b


def random_order_normal_form(w, rng):
    a = list(w)
    while True:
        hits = [i for i in range(len(a) - 1) if a[i + 1] > a[i] + 1]
        if not hits:
            return tuple(a)
        i = rng.choice(hits)
        a[i], a[i + 1] = a[i + 1], a[i]


@pytest.mark.parametrize("n", range(1, 8))
def test_swap_confluence(n):
    rng = random.Random(n)
    for w in enumerate_words_A(n):
        target = a_to_b(w).entries
        for _ in range(20):
            assert random_order_normal_form(w, rng) == target


# -- enumeration -----------------------------------------------------------

def test_enumerate_four():
    assert [digits(w) for w in enumerate_words_A(4)] == ["0000", "0010", "0100", "0101", "0110"]


def test_enumerate_five():
    expected = (
        "00000 00010 00100 00101 00110 01000 01001 "
        "01010 01011 01021 01100 01101 01110 01210"
    ).split()
    assert [digits(w) for w in enumerate_words_A(5)] == expected


def test_enumerate_seven_count():
    assert sum(1 for _ in enumerate_words_A(7)) == catalan_closed(6) == 132


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    assert [w.entries for w in enumerate_words_A(n)] == brute_force_property_a(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_word_count_and_shape(n):
    words = [w.entries for w in enumerate_words_A(n)]
    assert len(words) == catalan_closed(n - 1)
    for w in words:
        assert w[0] == 0
        assert set(w) == set(range(max(w) + 1))


def test_enumerate_rejects_zero():
    with pytest.raises(ValueError):
        list(enumerate_words_A(0))
