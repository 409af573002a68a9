"""The zeta map on Dyck paths and its inverse.

For a path with area sequence ``a`` let ``d_i`` be the number of entries equal
to ``i - 1``. The image starts with the bounce path ``N^{d_1} E^{d_1} N^{d_2}
...`` and fills the rectangle between the ``k``-th and ``(k+1)``-st peak by
scanning ``a`` left to right, writing ``E`` for each ``k - 1`` and ``N`` for
each ``k``. Zeta sends dinv to area and area to bounce.
"""

from __future__ import annotations

from typing import Sequence, Union

from .dyck import (
    EAST,
    NORTH,
    AreaSequence,
    DyckPath,
    PathLike,
    area_sequence_of,
    as_area_sequence,
    as_path,
    inner_touch_points,
    path_from_area_sequence,
    rises,
)
from .errors import NotZetaImageShape


def bounce_counts(a: Union[AreaSequence, Sequence[int]]) -> tuple:
    """Histogram ``(d_1, ..., d_m)`` of the values ``0, ..., m - 1`` in ``a``."""
    a = as_area_sequence(a)
    if not len(a):
        return ()
    counts = [0] * (max(a) + 1)
    for value in a:
        counts[value] += 1
    return tuple(counts)


def bounce_path_of_counts(d: Sequence[int]) -> DyckPath:
    if any(x < 1 for x in d):
        raise ValueError("bounce counts must be positive")
    return DyckPath("".join(NORTH * x + EAST * x for x in d))


def rectangle_words(a: Union[AreaSequence, Sequence[int]]) -> list:
    """The fillings ``R_1, ..., R_{m-1}``; ``R_k`` has ``d_k`` Easts and ``d_{k+1}`` Norths."""
    a = as_area_sequence(a)
    m = len(bounce_counts(a))
    words = []
    for k in range(1, m):
        words.append("".join(EAST if x == k - 1 else NORTH for x in a if x in (k - 1, k)))
    return words


def zeta(path: PathLike) -> DyckPath:
    a = area_sequence_of(path)
    d = bounce_counts(a)
    if not d:
        return DyckPath("")
    return DyckPath(NORTH * d[0] + "".join(rectangle_words(a)) + EAST * d[-1])


def _split_rectangles(steps: str) -> tuple:
    """Parse a zeta image into ``(d, [R_1, ..., R_{m-1}])``."""
    d1 = len(steps) - len(steps.lstrip(NORTH))
    if d1 == 0:
        raise NotZetaImageShape("path does not start with a North step")
    d = [d1]
    rects = []
    pos = d1
    while True:
        need = d[-1]
        start = pos
        if pos >= len(steps) or steps[pos] != EAST:
            raise NotZetaImageShape(f"segment at step {pos + 1} does not start with East")
        seen = 0
        while seen < need:
            if pos >= len(steps):
                raise NotZetaImageShape("ran out of East steps inside a rectangle")
            if steps[pos] == EAST:
                seen += 1
            pos += 1
        while pos < len(steps) and steps[pos] == NORTH:
            pos += 1
        segment = steps[start:pos]
        north = segment.count(NORTH)
        if north == 0:
            if pos != len(steps):
                raise NotZetaImageShape("tail of East steps is not at the end")
            return tuple(d), rects
        rects.append(segment)
        d.append(north)


def zeta_inverse(path: PathLike) -> DyckPath:
    """Recover the preimage of ``path`` under :func:`zeta`.

    ``R_1`` read as 0/1 gives the restriction of the area sequence to values
    ``<= 1``. Each later ``R_k`` says how many ``k``'s follow the ``j``-th
    ``k - 1``; inside the values ``<= k`` such a block sits right after its
    ``k - 1``, because under Property (D) a ``k`` is preceded by ``k - 1`` or
    ``k`` once larger values are deleted.
    """
    steps = as_path(path).steps
    if not steps:
        return DyckPath("")
    d, rects = _split_rectangles(steps)
    if not rects:
        return path_from_area_sequence((0,) * d[0])
    a = [0 if step == EAST else 1 for step in rects[0]]
    for k, rect in enumerate(rects[1:], start=2):
        # blocks[j] = number of k's directly after the j-th (k-1)
        blocks = []
        for step in rect:
            if step == EAST:
                blocks.append(0)
            elif not blocks:
                raise NotZetaImageShape(f"rectangle {k} does not start with East")
            else:
                blocks[-1] += 1
        built = []
        j = 0
        for value in a:
            built.append(value)
            if value == k - 1:
                if j >= len(blocks):
                    raise NotZetaImageShape(f"rectangle {k} has too few East steps")
                built.extend([k] * blocks[j])
                j += 1
        if j != len(blocks):
            raise NotZetaImageShape(f"rectangle {k} has too many East steps")
        a = built
    return path_from_area_sequence(a)


def c3_violation_count(a: Union[AreaSequence, Sequence[int]]) -> int:
    """Number of ``i`` such that ``i + 1`` occurs and every ``i`` precedes every ``i + 1``."""
    a = tuple(a)
    first = {}
    last = {}
    for pos, value in enumerate(a):
        first.setdefault(value, pos)
        last[value] = pos
    return sum(1 for i in last if i + 1 in first and last[i] < first[i + 1])


def zeros_to_rises_holds(path: PathLike) -> bool:
    """Zeros of the area sequence equal the initial rises of the zeta image."""
    path = as_path(path)
    return area_sequence_of(path).entries.count(0) == rises(zeta(path))


def c3_to_single_return_holds(path: PathLike) -> bool:
    """Separated value pairs ``i, i + 1`` equal the inner touch points of the image."""
    path = as_path(path)
    return c3_violation_count(area_sequence_of(path)) == inner_touch_points(zeta(path))
