"""Planted trees, crucial vertices, the c(p,q,n) table and the Speyer operator.

A planted tree on vertices ``0..n`` is labelled in preorder, so labels double
as birth order. Vertex ``i > 0`` sits in generation ``a_i`` of the area
sequence; its parent is the latest earlier vertex one generation up.
Walking around the tree and writing ``N`` down an edge and ``E`` up an edge
gives back the Dyck path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .dyck import (
    EAST,
    NORTH,
    AreaSequence,
    DyckPath,
    PathLike,
    area_sequence_of,
    as_area_sequence,
    as_path,
    enumerate_paths,
    path_from_area_sequence,
    returns,
    rises,
)
from .errors import TooFewCrucial, TooFewReturns, TooFewRises
from .zeta import zeta, zeta_inverse


@dataclass(frozen=True)
class PlantedTree:
    """Ordered rooted tree; ``children[v]`` lists the children of ``v`` left to right."""

    children: tuple = ((),)

    def __post_init__(self):
        children = tuple(tuple(int(c) for c in cs) for cs in self.children)
        object.__setattr__(self, "children", children)
        size = len(children)
        if size == 0:
            raise ValueError("a planted tree has at least the root")
        order = []
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            if len(order) > size:
                raise ValueError("children lists contain a cycle")
            stack.extend(reversed(children[v]))
        if order != list(range(size)):
            raise ValueError("vertices must be labelled 0..n in preorder")

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "PlantedTree":
        """Build from ``[-1, parent(1), ..., parent(n)]``."""
        if not parents or parents[0] != -1:
            raise ValueError("parent array must start with -1 for the root")
        children = [[] for _ in parents]
        for v, p in enumerate(parents[1:], start=1):
            if not 0 <= p < len(parents) or p == v:
                raise ValueError(f"invalid parent {p} for vertex {v}")
            children[p].append(v)
        return cls(tuple(tuple(cs) for cs in children))

    @classmethod
    def from_parens(cls, text: str) -> "PlantedTree":
        steps = text.strip().replace("(", NORTH).replace(")", EAST)
        return tree_from_area_sequence(area_sequence_of(steps))

    @classmethod
    def parse(cls, text: str) -> "PlantedTree":
        """Accept a balanced-parentheses string or a parent array like ``[-1,0,1]``."""
        text = text.strip()
        if set(text) <= set("() "):
            return cls.from_parens(text)
        body = text.strip("[]")
        return cls.from_parents([int(x) for x in body.replace(",", " ").split()])

    @property
    def n(self) -> int:
        """Number of non-root vertices."""
        return len(self.children) - 1

    @property
    def root_degree(self) -> int:
        return len(self.children[0])

    def parents(self) -> list:
        parents = [-1] * len(self.children)
        for v, cs in enumerate(self.children):
            for c in cs:
                parents[c] = v
        return parents

    def generations(self) -> list:
        """Generation of every vertex; the root is in generation -1."""
        gen = [-1] * len(self.children)
        for v, cs in enumerate(self.children):
            for c in cs:
                gen[c] = gen[v] + 1
        return gen

    def walk(self) -> str:
        """Clockwise contour from the root: ``N`` away from it, ``E`` back."""
        out = []

        def visit(v):
            for c in self.children[v]:
                out.append(NORTH)
                visit(c)
                out.append(EAST)

        visit(0)
        return "".join(out)

    def to_parens(self) -> str:
        return self.walk().replace(NORTH, "(").replace(EAST, ")")

    def __str__(self) -> str:
        return self.to_parens()


def tree_from_area_sequence(a: Union[AreaSequence, Sequence[int]]) -> PlantedTree:
    a = as_area_sequence(a)
    # latest[g] = most recent vertex seen in generation g
    latest = {-1: 0}
    children = [[] for _ in range(len(a) + 1)]
    for i, g in enumerate(a, start=1):
        children[latest[g - 1]].append(i)
        latest[g] = i
    return PlantedTree(tuple(tuple(cs) for cs in children))


def area_sequence_from_tree(tree: PlantedTree) -> AreaSequence:
    return area_sequence_of(tree.walk())


def tree_of_path(path: PathLike) -> PlantedTree:
    return tree_from_area_sequence(area_sequence_of(path))


def path_of_tree(tree: PlantedTree) -> DyckPath:
    return DyckPath(tree.walk())


def enumerate_trees(n: int) -> Iterator[PlantedTree]:
    """Planted trees on ``n + 1`` vertices, ordered like their Dyck paths."""
    for path in enumerate_paths(n):
        yield tree_of_path(path)


def crucial_vertices(tree: PlantedTree) -> frozenset:
    """Vertices that are the youngest of their generation and the only parent in it.

    Youngest means the largest label, labels being birth order.
    """
    by_generation = {}
    for v, g in enumerate(tree.generations()):
        by_generation.setdefault(g, []).append(v)
    crucial = set()
    for members in by_generation.values():
        youngest = max(members)
        if tree.children[youngest] and all(
            not tree.children[v] for v in members if v != youngest
        ):
            crucial.add(youngest)
    return frozenset(crucial)


@dataclass(frozen=True)
class StatTable:
    """Counts ``c(p, q, n)`` keyed by ``(p, q)``: returns/crucial and rises/root degree."""

    n: int
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, key) -> int:
        return self.counts.get(key, 0)

    def terms(self) -> list:
        """``[(p, q, count), ...]`` in descending lexicographic order of ``(p, q)``."""
        return [(p, q, self.counts[p, q]) for p, q in sorted(self.counts, reverse=True)]

    def polynomial(self) -> str:
        def monomial(p, q, c):
            body = "".join(
                var if e == 1 else f"{var}^{e}" for var, e in (("x", p), ("y", q)) if e
            )
            if not body:
                return str(c)
            return body if c == 1 else f"{c}{body}"

        return " + ".join(monomial(*t) for t in self.terms()) or "0"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "polynomial": self.polynomial(),
            "table": [{"p": p, "q": q, "count": c} for p, q, c in self.terms()],
        }


def stat_table_from_paths(n: int) -> StatTable:
    counts = Counter((returns(D), rises(D)) for D in enumerate_paths(n))
    return StatTable(n, dict(counts))


def stat_table_from_trees(n: int) -> StatTable:
    counts = Counter(
        (len(crucial_vertices(T)), T.root_degree) for T in enumerate_trees(n)
    )
    return StatTable(n, dict(counts))


def stat_table(n: int) -> StatTable:
    """``c(p, q, n)`` computed over paths and over trees; the two must agree."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    by_paths = stat_table_from_paths(n)
    by_trees = stat_table_from_trees(n)
    if by_paths != by_trees:
        raise RuntimeError(f"c(p,q,{n}) differs between paths and trees")
    return by_paths


def tutte_polynomial(n: int) -> StatTable:
    return stat_table(n)


def arches(path: PathLike) -> list:
    """Split a path into its prime factors ``N D_i E``."""
    steps = as_path(path).steps
    parts = []
    height = 0
    start = 0
    for i, step in enumerate(steps):
        height += 1 if step == NORTH else -1
        if height == 0:
            parts.append(steps[start : i + 1])
            start = i + 1
    return parts


def speyer_step(path: PathLike) -> DyckPath:
    """``N D_1 E N D_2 E rest`` to ``N N D_1 E D_2 E rest``: one return fewer, one rise more."""
    parts = arches(path)
    if len(parts) < 2:
        raise TooFewReturns(f"need at least 2 returns, got {len(parts)}")
    first, second = parts[0], parts[1]
    merged = NORTH + first + second[1:-1] + EAST
    return DyckPath(merged + "".join(parts[2:]))


def speyer_step_inverse(path: PathLike) -> DyckPath:
    path = as_path(path)
    if rises(path) < 2:
        raise TooFewRises(f"need at least 2 initial rises, got {rises(path)}")
    parts = arches(path)
    inner = arches(parts[0][1:-1])
    first = inner[0]
    second = NORTH + "".join(inner[1:]) + EAST
    return DyckPath(first + second + "".join(parts[1:]))


def tree_operator(tree: PlantedTree) -> PlantedTree:
    """Trade one crucial vertex for one more child of the root.

    Conjugates :func:`speyer_step` by zeta: zeta carries the crucial count to
    returns and the root degree to initial rises.
    """
    if len(crucial_vertices(tree)) < 2:
        raise TooFewCrucial("tree needs at least 2 crucial vertices")
    image = speyer_step(zeta(path_of_tree(tree)))
    return tree_of_path(zeta_inverse(image))
