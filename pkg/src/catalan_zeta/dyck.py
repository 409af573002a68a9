"""Dyck paths, area sequences and the classical path statistics.

A Dyck path of semilength ``n`` is stored as a string over ``N`` and ``E``.
The area sequence ``(a_1, ..., a_n)`` has ``a_i = i - x_i - 1`` where ``x_i``
counts the East steps before the ``i``-th North step; it determines the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import BelowDiagonal, NotAreaSequence, UnbalancedPath

NORTH = "N"
EAST = "E"

_ALIASES = {"N": NORTH, "U": NORTH, "1": NORTH, "E": EAST, "D": EAST, "0": EAST}


def _check_steps(steps: str) -> None:
    height = 0
    for index, step in enumerate(steps, start=1):
        height += 1 if step == NORTH else -1
        if height < 0:
            raise BelowDiagonal(index)
    if height != 0:
        north = steps.count(NORTH)
        raise UnbalancedPath(north, len(steps) - north)


@dataclass(frozen=True)
class DyckPath:
    """A validated Dyck path; ``steps`` is a string over ``"N"`` and ``"E"``."""

    steps: str = ""

    def __post_init__(self):
        if set(self.steps) - {NORTH, EAST}:
            raise ValueError(f"invalid step symbols in {self.steps!r}")
        _check_steps(self.steps)

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        return validate_path(text)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)


@dataclass(frozen=True)
class AreaSequence:
    """A sequence with ``a_1 = 0`` and ``a_{i+1} <= a_i + 1`` (Property D)."""

    entries: tuple = ()

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if entries and entries[0] != 0:
            raise NotAreaSequence(1, "first entry must be 0")
        for i in range(1, len(entries)):
            if entries[i] < 0:
                raise NotAreaSequence(i + 1, "entries must be nonnegative")
            if entries[i] > entries[i - 1] + 1:
                raise NotAreaSequence(i + 1, "rise by more than one")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


PathLike = Union[DyckPath, str]


def validate_path(symbols: Iterable[str]) -> DyckPath:
    """Build a :class:`DyckPath` from step symbols.

    Accepts ``N``/``E`` and the aliases ``U``/``D`` and ``1``/``0``, in either
    case; whitespace is ignored. Raises :class:`BelowDiagonal` at the first
    prefix with more East than North steps, else :class:`UnbalancedPath`.
    """
    steps = []
    for symbol in symbols:
        if symbol.isspace():
            continue
        try:
            steps.append(_ALIASES[symbol.upper()])
        except KeyError:
            raise ValueError(f"unknown step symbol {symbol!r}") from None
    return DyckPath("".join(steps))


def as_path(path: PathLike) -> DyckPath:
    return path if isinstance(path, DyckPath) else validate_path(path)


def as_area_sequence(a: Union[AreaSequence, Sequence[int]]) -> AreaSequence:
    return a if isinstance(a, AreaSequence) else AreaSequence(tuple(a))


def area_sequence_of(path: PathLike) -> AreaSequence:
    path = as_path(path)
    entries = []
    east = 0
    for step in path.steps:
        if step == NORTH:
            entries.append(len(entries) - east)
        else:
            east += 1
    return AreaSequence(tuple(entries))


def path_from_area_sequence(a: Union[AreaSequence, Sequence[int]]) -> DyckPath:
    """Inverse of :func:`area_sequence_of`.

    Before the ``i``-th North step there must be ``i - a_i - 1`` East steps in
    total; the remaining East steps close the path.
    """
    a = as_area_sequence(a)
    steps = []
    east = 0
    for i, value in enumerate(a, start=1):
        target = i - value - 1
        steps.append(EAST * (target - east))
        steps.append(NORTH)
        east = target
    steps.append(EAST * (len(a) - east))
    return DyckPath("".join(steps))


def area(path: PathLike) -> int:
    return sum(area_sequence_of(path))


def dinv(path: PathLike) -> int:
    """Number of pairs ``k < l`` of the area sequence with ``a_k - a_l`` in {0, 1}."""
    a = area_sequence_of(path).entries
    return sum(
        1
        for k in range(len(a))
        for l in range(k + 1, len(a))
        if 0 <= a[k] - a[l] <= 1
    )


def rises(path: PathLike) -> int:
    steps = as_path(path).steps
    east = steps.find(EAST)
    return len(steps) if east < 0 else east


def returns(path: PathLike) -> int:
    return area_sequence_of(path).entries.count(0)


def inner_touch_points(path: PathLike) -> int:
    """Returns to the diagonal other than the final one; 0 for the empty path."""
    return max(returns(path) - 1, 0)


def bounce_touch_points(path: PathLike) -> list:
    """Diagonal points ``0 = j_0 < j_1 < ... < j_m = n`` of the bounce path.

    ``j_{t+1}`` is the number of North steps before the ``(j_t + 1)``-st East
    step, i.e. how far the bounce path climbs before it must turn.
    """
    steps = as_path(path).steps
    n = len(steps) // 2
    # north_before_east[x] = number of N preceding the (x+1)-st E
    north_before_east = []
    north = 0
    for step in steps:
        if step == NORTH:
            north += 1
        else:
            north_before_east.append(north)
    points = [0]
    while points[-1] < n:
        points.append(north_before_east[points[-1]])
    return points


def bounce(path: PathLike) -> int:
    points = bounce_touch_points(path)
    n = points[-1]
    return sum(n - j for j in points[1:-1])


def statistics(path: PathLike) -> dict:
    path = as_path(path)
    return {
        "area": area(path),
        "dinv": dinv(path),
        "bounce": bounce(path),
        "rises": rises(path),
        "returns": returns(path),
        "inner_touch_points": inner_touch_points(path),
        "area_sequence": list(area_sequence_of(path)),
    }


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order, North before East."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")

    def extend(prefix: str, north: int, east: int) -> Iterator[str]:
        if north == n and east == n:
            yield prefix
            return
        if north < n:
            yield from extend(prefix + NORTH, north + 1, east)
        if east < north:
            yield from extend(prefix + EAST, north, east + 1)

    for steps in extend("", 0, 0):
        yield DyckPath(steps)


def enumerate_area_sequences(n: int) -> Iterator[AreaSequence]:
    """Area sequences of length ``n``, in the same order as :func:`enumerate_paths`."""
    for path in enumerate_paths(n):
        yield area_sequence_of(path)
