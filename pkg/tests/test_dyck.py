import pytest
from hypothesis import given

from catalan_zeta.dyck import (
    AreaSequence,
    DyckPath,
    area,
    area_sequence_of,
    bounce,
    dinv,
    enumerate_paths,
    inner_touch_points,
    path_from_area_sequence,
    returns,
    rises,
    statistics,
    validate_path,
)
from catalan_zeta.errors import BelowDiagonal, NotAreaSequence, UnbalancedPath

from conftest import (
    EXAMPLE_SEQUENCE,
    brute_force_paths,
    catalan_closed,
    dyck_paths,
    geometric_bounce,
    pair_count_dinv,
)


# -- validation ------------------------------------------------------------

def test_validate_accepts_alternating_path():
    assert validate_path("NENENE").semilength == 3


def test_validate_empty():
    assert validate_path("").semilength == 0


def test_below_diagonal_reports_first_index():
    with pytest.raises(BelowDiagonal) as info:
        validate_path("NEEN")
    assert info.value.index == 3


def test_unbalanced():
    with pytest.raises(UnbalancedPath):
        validate_path("NNE")


@pytest.mark.parametrize("text", ["UDUD", "1010", "nene", "N E N E"])
def test_aliases_normalise(text):
    assert validate_path(text).steps == "NENE"


def test_unknown_symbol():
    with pytest.raises(ValueError):
        validate_path("NXE")


def test_direct_construction_validates():
    with pytest.raises(BelowDiagonal):
        DyckPath("EN")


# -- area sequences --------------------------------------------------------

@pytest.mark.parametrize(
    "steps, expected",
    [
        ("NNNEEE", (0, 1, 2)),
        ("NNENEE", (0, 1, 1)),
        ("NNEENE", (0, 1, 0)),
        ("NENNEE", (0, 0, 1)),
        ("NENENE", (0, 0, 0)),
    ],
)
def test_area_sequences_of_the_five_paths(steps, expected):
    assert area_sequence_of(steps).entries == expected
    assert path_from_area_sequence(expected).steps == steps


def test_path_from_area_sequence_two_blocks():
    assert path_from_area_sequence((0, 1, 2, 0, 1)).steps == "NNNEEENNEE"


def test_path_from_empty_sequence():
    assert path_from_area_sequence(()).steps == ""


@pytest.mark.parametrize("bad, index", [((1, 0), 1), ((0, 2), 2), ((0, 1, 3), 3)])
def test_not_area_sequence(bad, index):
    with pytest.raises(NotAreaSequence) as info:
        path_from_area_sequence(bad)
    assert info.value.index == index


def test_area_sequence_entries_bounded_by_position():
    for n in range(8):
        for p in enumerate_paths(n):
            assert all(x <= i for i, x in enumerate(area_sequence_of(p)))


@pytest.mark.parametrize("n", range(11))
def test_round_trip_exhaustive(n):
    for p in enumerate_paths(n):
        assert path_from_area_sequence(area_sequence_of(p)) == p


@given(dyck_paths())
def test_round_trip_property(path):
    a = area_sequence_of(path)
    assert isinstance(a, AreaSequence)
    assert path_from_area_sequence(a) == path


# -- statistics ------------------------------------------------------------

def test_area_values(example_path):
    assert area("NNNEEE") == 3
    assert area("NENENE") == 0
    assert area(example_path) == sum(EXAMPLE_SEQUENCE) == 13


def test_dinv_values(example_path):
    assert dinv("NENENE") == 3
    assert dinv("NNNEEE") == 0
    assert pair_count_dinv(EXAMPLE_SEQUENCE) == 11
    assert dinv(example_path) == 11


@given(dyck_paths())
def test_dinv_matches_pair_count(path):
    assert dinv(path) == pair_count_dinv(area_sequence_of(path).entries)


def test_rises_values():
    assert rises("NNEENE") == 2
    assert rises("NENENE") == 1
    assert rises("") == 0
    assert rises("NNNEEE") == 3


def test_returns_values():
    assert (returns("NENENE"), inner_touch_points("NENENE")) == (3, 2)
    assert (returns("NNNEEE"), inner_touch_points("NNNEEE")) == (1, 0)
    # zeta image of the worked example, area sequence (0,0,1,1,2,3,3,1)
    image = "NENNENNNENEEENEE"
    assert area_sequence_of(image).entries == (0, 0, 1, 1, 2, 3, 3, 1)
    assert (returns(image), inner_touch_points(image)) == (2, 1)


def test_empty_path_statistics_are_zero():
    stats = statistics("")
    assert stats == {
        "area": 0,
        "dinv": 0,
        "bounce": 0,
        "rises": 0,
        "returns": 0,
        "inner_touch_points": 0,
        "area_sequence": [],
    }


@pytest.mark.parametrize("steps, expected", [("NENENE", 3), ("NNNEEE", 0), ("NNENEE", 1)])
def test_bounce_values(steps, expected):
    assert geometric_bounce(steps) == expected
    assert bounce(steps) == expected


@given(dyck_paths())
def test_bounce_matches_geometric_walk(path):
    assert bounce(path) == geometric_bounce(path.steps)


@pytest.mark.parametrize("n", range(11))
def test_bounce_extremes(n):
    assert bounce("N" * n + "E" * n) == 0
    assert bounce("NE" * n) == n * (n - 1) // 2


@given(dyck_paths(min_size=1))
def test_basic_inequalities(path):
    assert returns(path) >= 1
    assert rises(path) >= 1
    assert area(path) == sum(area_sequence_of(path))


# -- enumeration -----------------------------------------------------------

def test_enumerate_three():
    paths = [p.steps for p in enumerate_paths(3)]
    assert paths == ["NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"]


def test_enumerate_zero():
    assert [p.steps for p in enumerate_paths(0)] == [""]


def test_enumerate_ten_count():
    assert catalan_closed(10) == 16796
    assert sum(1 for _ in enumerate_paths(10)) == 16796


@pytest.mark.parametrize("n", range(8))
def test_enumeration_matches_brute_force(n):
    # product("NE") yields N<E lexicographic order, matching the enumeration order
    assert [p.steps for p in enumerate_paths(n)] == brute_force_paths(n)


def test_enumeration_restartable():
    assert list(enumerate_paths(4)) == list(enumerate_paths(4))
