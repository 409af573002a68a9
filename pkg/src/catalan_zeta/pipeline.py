"""The bijection from (A)-words of length n to Dyck paths of semilength n - 1.

word --swap--> (B)-word = area sequence with (C3) --> path --zeta--> single
return path --strip--> smaller path. Every stage is exposed so the chain can
be traced.
"""

from __future__ import annotations

from .dyck import (
    EAST,
    NORTH,
    DyckPath,
    PathLike,
    area_sequence_of,
    as_path,
    path_from_area_sequence,
    returns,
)
from .errors import NotPropertyA, NotSingleReturn
from .words import Word, WordLike, a_to_b, as_word, b_to_a, classify
from .zeta import zeta, zeta_inverse


def strip(path: PathLike) -> DyckPath:
    """Drop the first and last step of a path that touches the diagonal only at the end."""
    path = as_path(path)
    if path.semilength < 1 or returns(path) != 1:
        raise NotSingleReturn(f"{path} has {returns(path)} returns, need exactly 1")
    return DyckPath(path.steps[1:-1])


def wrap(path: PathLike) -> DyckPath:
    return DyckPath(NORTH + as_path(path).steps + EAST)


def trace_word_to_path(w: WordLike) -> list:
    """``[(stage, value), ...]`` for every intermediate object of :func:`word_to_path`."""
    w = as_word(w)
    report = classify(w)
    if not report.satisfies_A:
        raise NotPropertyA(report)
    b = a_to_b(w)
    pre = path_from_area_sequence(b.entries)
    image = zeta(pre)
    return [
        ("word", w),
        ("b_word", b),
        ("area_sequence", area_sequence_of(pre)),
        ("path", pre),
        ("zeta", image),
        ("stripped", strip(image)),
    ]


def word_to_path(w: WordLike) -> DyckPath:
    return trace_word_to_path(w)[-1][1]


def trace_path_to_word(path: PathLike) -> list:
    path = as_path(path)
    wrapped = wrap(path)
    pre = zeta_inverse(wrapped)
    a = area_sequence_of(pre)
    return [
        ("path", path),
        ("wrapped", wrapped),
        ("zeta_inverse", pre),
        ("area_sequence", a),
        ("word", b_to_a(Word(a.entries))),
    ]


def path_to_word(path: PathLike) -> Word:
    return trace_path_to_word(path)[-1][1]
