"""Exhaustive invariant suites behind ``catalan-zeta verify``.

Each suite walks sizes in increasing order and stops at the first failing
case, so the reported counterexample is minimal in ``n``. The maps under test
are bundled in :class:`Maps`; swapping one for a mutant lets the harness be
checked against itself.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import dyck, trees, words
from .zeta import bounce_counts, c3_violation_count, rectangle_words, zeta, zeta_inverse
from .dyck import DyckPath, enumerate_paths
from .pipeline import strip, wrap
from .words import Word, classify, enumerate_words_A


def catalan(n: int) -> int:
    """Catalan numbers from the convolution recurrence, independent of any enumeration."""
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


@dataclass(frozen=True)
class Maps:
    zeta: Callable = zeta
    zeta_inverse: Callable = zeta_inverse
    a_to_b: Callable = words.a_to_b
    b_to_a: Callable = words.b_to_a

    def word_to_path(self, w):
        return strip(self.zeta(dyck.path_from_area_sequence(self.a_to_b(w).entries)))

    def path_to_word(self, p):
        a = dyck.area_sequence_of(self.zeta_inverse(wrap(p)))
        return self.b_to_a(Word(a.entries))


class CheckFailed(AssertionError):
    pass


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


@dataclass
class Counterexample:
    n: int
    case: str
    message: str


@dataclass
class SuiteResult:
    name: str
    bound: int
    cases: int = 0
    seconds: float = 0.0
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class Suite:
    name: str
    bound: int
    cases: Callable  # n -> iterable of cases
    check: Callable  # (maps, n, case, rng) -> None, raises on failure
    start: int = 0


# -- mutants ---------------------------------------------------------------

def _swap_until_stable(a, should_swap, leftmost=True):
    a = list(a)
    for _ in range(len(a) ** 2 + 1):
        hits = [i for i in range(len(a) - 1) if should_swap(a[i], a[i + 1])]
        if not hits:
            return Word(tuple(a))
        i = hits[0] if leftmost else hits[-1]
        a[i], a[i + 1] = a[i + 1], a[i]
    raise RuntimeError("swap procedure did not terminate")


def _zeta_variant(path, low, high, tail_from_first=False):
    a = dyck.area_sequence_of(path)
    d = bounce_counts(a)
    if not d:
        return DyckPath("")
    body = "".join(
        "".join(low if x == k - 1 else high for x in a if x in (k - 1, k))
        for k in range(1, len(d))
    )
    tail = d[0] if tail_from_first else d[-1]
    return DyckPath("N" * d[0] + body + "E" * tail)


MUTANTS = {
    "zeta-role-swap": dict(zeta=lambda p: _zeta_variant(p, "N", "E")),
    "zeta-wrong-tail": dict(zeta=lambda p: _zeta_variant(p, "E", "N", tail_from_first=True)),
    "a-to-b-nonstrict": dict(a_to_b=lambda w: _swap_until_stable(w, lambda x, y: y >= x + 1)),
    "a-to-b-offset-sign": dict(a_to_b=lambda w: _swap_until_stable(w, lambda x, y: y > x - 1)),
    "a-to-b-operand-swap": dict(a_to_b=lambda w: _swap_until_stable(w, lambda x, y: x > y + 1)),
    "b-to-a-nonstrict": dict(
        b_to_a=lambda w: _swap_until_stable(w, lambda x, y: y <= x - 1, leftmost=False)
    ),
    "b-to-a-offset-sign": dict(
        b_to_a=lambda w: _swap_until_stable(w, lambda x, y: y < x + 1, leftmost=False)
    ),
    "b-to-a-operand-swap": dict(
        b_to_a=lambda w: _swap_until_stable(w, lambda x, y: x < y - 1, leftmost=False)
    ),
}


def mutant_maps(name: str) -> Maps:
    return Maps(**MUTANTS[name])


# -- suites ----------------------------------------------------------------

def _lex_key(path: DyckPath):
    return path.steps.replace("N", "0").replace("E", "1")


def _level(n):
    return [n]


def _paths(n):
    return enumerate_paths(n)


def _words(n):
    return enumerate_words_A(n)


def _check_path_level(maps, n, _, rng):
    paths = list(enumerate_paths(n))
    expect(len(paths) == catalan(n), f"{len(paths)} paths, expected Cat_{n} = {catalan(n)}")
    expect(len(set(paths)) == len(paths), "duplicate paths")
    expect([_lex_key(p) for p in paths] == sorted(_lex_key(p) for p in paths), "not in N<E order")
    expect(dyck.bounce("N" * n + "E" * n) == 0, "bounce(N^nE^n) != 0")
    expect(dyck.bounce("NE" * n) == n * (n - 1) // 2, "bounce((NE)^n) != n(n-1)/2")


def _check_path_stats(maps, n, path, rng):
    a = dyck.area_sequence_of(path)
    expect(dyck.path_from_area_sequence(a) == path, "area sequence round trip")
    expect(dyck.area(path) == sum(a), "area != sum of area sequence")
    if n >= 1:
        expect(dyck.returns(path) >= 1, "no return")
        expect(dyck.rises(path) >= 1, "no initial rise")


def _check_word_level(maps, n, _, rng):
    ws = [w.entries for w in enumerate_words_A(n)]
    expect(len(ws) == catalan(n - 1), f"|L_{n}| = {len(ws)}, expected {catalan(n - 1)}")
    expect(ws == sorted(set(ws)), "words not distinct and sorted")
    for w in ws:
        expect(classify(w).satisfies_A, f"{w} lacks Property (A)")
        expect(w[0] == 0 and set(w) == set(range(max(w) + 1)), f"{w} values not an interval from 0")


def _check_word_oracle(maps, n, _, rng):
    brute = [w for w in itertools.product(range(n), repeat=n) if classify(w).satisfies_A]
    found = [w.entries for w in enumerate_words_A(n)]
    expect(found == brute, "enumeration differs from brute-force filter")


def _b_words(n):
    return {a.entries for a in dyck.enumerate_area_sequences(n) if classify(a.entries).satisfies_B}


def _check_swap_level(maps, n, _, rng):
    images = {maps.a_to_b(w).entries for w in enumerate_words_A(n)}
    expect(images == _b_words(n), "a_to_b image is not the set of (B)-words")
    for b in sorted(_b_words(n)):
        expect(maps.a_to_b(maps.b_to_a(b)).entries == b, f"a_to_b(b_to_a({b})) != {b}")


def _check_swap_word(maps, n, w, rng):
    b = maps.a_to_b(w)
    expect(classify(b).satisfies_B, f"a_to_b gives {b}, which lacks (B)")
    expect(sorted(b) == sorted(w), "a_to_b changed the multiset")
    back = maps.b_to_a(b)
    expect(sorted(back) == sorted(b), "b_to_a changed the multiset")
    expect(back == w, f"b_to_a(a_to_b(w)) = {back}")


def _check_confluence(maps, n, w, rng):
    target = maps.a_to_b(w)
    for _ in range(20):
        a = list(w)
        while True:
            hits = [i for i in range(n - 1) if a[i + 1] > a[i] + 1]
            if not hits:
                break
            i = rng.choice(hits)
            a[i], a[i + 1] = a[i + 1], a[i]
        expect(tuple(a) == target.entries, f"random swap order gives {tuple(a)}, not {target}")


def _check_b_equals_c(maps, n, a, rng):
    r = classify(a.entries)
    expect(r.satisfies_B == r.satisfies_C, f"B={r.satisfies_B} but C={r.satisfies_C}")


def _check_b_equals_c_all(maps, n, _, rng):
    for w in itertools.product(range(n), repeat=n):
        r = classify(w)
        expect(r.satisfies_B == r.satisfies_C, f"{w}: B={r.satisfies_B} but C={r.satisfies_C}")


def _check_zeta_level(maps, n, _, rng):
    images = {maps.zeta(p) for p in enumerate_paths(n)}
    expect(len(images) == catalan(n), "zeta is not injective")


def _check_zeta_path(maps, n, path, rng):
    image = maps.zeta(path)
    expect(isinstance(image, DyckPath) and image.semilength == n, "zeta changed the semilength")
    expect(maps.zeta_inverse(image) == path, f"zeta_inverse(zeta(D)) = {maps.zeta_inverse(image)}")
    expect(maps.zeta(maps.zeta_inverse(path)) == path, "zeta(zeta_inverse(P)) != P")
    expect(dyck.dinv(path) == dyck.area(image), "dinv(D) != area(zeta(D))")
    expect(dyck.area(path) == dyck.bounce(image), "area(D) != bounce(zeta(D))")
    a = dyck.area_sequence_of(path)
    d = bounce_counts(a)
    expect(dyck.bounce(image) == sum(i * x for i, x in enumerate(d)), "bounce != sum (i-1) d_i")
    expect(a.entries.count(0) == dyck.rises(image), "property (i) fails")
    expect(
        c3_violation_count(a) == dyck.inner_touch_points(image), "property (ii) fails"
    )
    expect(all(r.startswith("E") for r in rectangle_words(a)), "rectangle word starts with N")
    if n >= 1:
        expect(
            classify(a.entries).satisfies_C3 == (dyck.returns(image) == 1),
            "(C3) does not match a single return",
        )


def _check_zeta_oracle(maps, n, _, rng):
    preimage = {}
    for p in enumerate_paths(n):
        preimage[maps.zeta(p)] = p
    for p in enumerate_paths(n):
        expect(p in preimage, f"{p} has no preimage")
        got = maps.zeta_inverse(p)
        expect(got == preimage[p], f"zeta_inverse({p}) = {got}, brute force gives {preimage[p]}")


def _check_pipeline_level(maps, n, _, rng):
    ws = list(enumerate_words_A(n))
    images = [maps.word_to_path(w) for w in ws]
    targets = list(enumerate_paths(n - 1))
    expect(len(set(images)) == len(ws), "word_to_path is not injective")
    expect(set(images) == set(targets), f"word_to_path does not hit all of D_{n - 1}")
    for p in targets:
        expect(maps.word_to_path(maps.path_to_word(p)) == p, f"word_to_path(path_to_word({p})) != {p}")


def _check_pipeline_word(maps, n, w, rng):
    z = maps.zeta(dyck.path_from_area_sequence(maps.a_to_b(w).entries))
    expect(dyck.returns(z) == 1 and dyck.rises(z) >= 1, f"zeta image {z} is not single-return")
    back = maps.path_to_word(maps.word_to_path(w))
    expect(back == w, f"path_to_word(word_to_path(w)) = {back}")
    expect(classify(back).satisfies_A, "path_to_word output lacks (A)")


def _check_tree_path(maps, n, path, rng):
    a = dyck.area_sequence_of(path)
    t = trees.tree_from_area_sequence(a)
    expect(trees.area_sequence_from_tree(t) == a, "tree -> area sequence round trip")
    expect(trees.PlantedTree.from_parents(t.parents()) == t, "parent array round trip")
    expect(trees.PlantedTree.from_parens(t.to_parens()) == t, "parentheses round trip")
    expect(t.generations()[1:] == list(a), "generation != area sequence entry")
    crucial = trees.crucial_vertices(t)
    expect(t.root_degree == a.entries.count(0), "root degree != number of zeros")
    non_root = crucial - {0}
    expect(len(non_root) == c3_violation_count(a), "crucial non-root count mismatch")
    violators = {k for k in set(a) if k > 0 and k - 1 not in a.entries[a.entries.index(k):]}
    gens = t.generations()
    expect(violators == {gens[v] + 1 for v in non_root}, "crucial generations != (C3) violators")
    image = maps.zeta(path)
    expect(dyck.returns(image) == len(crucial), "returns(zeta(D)) != #crucial")
    expect(dyck.rises(image) == t.root_degree, "rises(zeta(D)) != root degree")


def _check_table_level(maps, n, _, rng):
    by_paths = trees.stat_table_from_paths(n)
    by_trees = trees.stat_table_from_trees(n)
    expect(by_paths == by_trees, "c(p,q,n) over paths and trees differ")
    expect(by_paths.total() == catalan(n), "table does not sum to Cat_n")
    if n >= 1:
        expect(all(p >= 1 and q >= 1 for p, q in by_paths.counts), "key with p or q = 0")
        for s in range(2, 2 * n + 1):
            values = {by_paths[p, s - p] for p in range(1, s)}
            expect(len(values) == 1, f"c(p,q,{n}) not constant on p+q={s}: {sorted(values)}")
        ones_p = sum(c for (p, q), c in by_paths.counts.items() if p == 1)
        ones_q = sum(c for (p, q), c in by_paths.counts.items() if q == 1)
        expect(ones_p == ones_q == catalan(n - 1), "sum c(1,q,n) or c(p,1,n) != Cat_{n-1}")


def _check_speyer_level(maps, n, _, rng):
    level = {}
    for p in enumerate_paths(n):
        level.setdefault((dyck.returns(p), dyck.rises(p)), set()).add(p)
    for (r, q), members in level.items():
        if r < 2:
            continue
        images = {trees.speyer_step(p) for p in members}
        expect(len(images) == len(members), f"speyer_step not injective on ({r},{q})")
        expect(images == level.get((r - 1, q + 1), set()), f"speyer_step not onto ({r - 1},{q + 1})")
        for p in members:
            expect(trees.speyer_step_inverse(trees.speyer_step(p)) == p, f"inverse fails at {p}")


def _crucial_trees(n):
    return [t for t in trees.enumerate_trees(n) if len(trees.crucial_vertices(t)) >= 2]


def _check_tree_operator(maps, n, t, rng):
    image = trees.speyer_step(maps.zeta(trees.path_of_tree(t)))
    u = trees.tree_of_path(maps.zeta_inverse(image))
    expect(len(trees.crucial_vertices(u)) == len(trees.crucial_vertices(t)) - 1, "crucial count")
    expect(u.root_degree == t.root_degree + 1, "root degree")


SUITES = [
    Suite("paths", 10, _level, _check_path_level),
    Suite("path-stats", 10, _paths, _check_path_stats),
    Suite("words", 10, _level, _check_word_level, start=1),
    Suite("words-brute-force", 6, _level, _check_word_oracle, start=1),
    Suite("swap-level", 8, _level, _check_swap_level, start=1),
    Suite("swap-round-trip", 8, _words, _check_swap_word, start=1),
    Suite("swap-confluence", 7, _words, _check_confluence, start=1),
    Suite("b-equals-c", 8, dyck.enumerate_area_sequences, _check_b_equals_c, start=1),
    Suite("b-equals-c-all-words", 6, _level, _check_b_equals_c_all, start=1),
    Suite("zeta-injective", 10, _level, _check_zeta_level),
    Suite("zeta", 10, _paths, _check_zeta_path),
    Suite("zeta-brute-force", 8, _level, _check_zeta_oracle),
    Suite("pipeline-level", 8, _level, _check_pipeline_level, start=1),
    Suite("pipeline-words", 8, _words, _check_pipeline_word, start=1),
    Suite("trees", 10, _paths, _check_tree_path),
    Suite("stat-table", 10, _level, _check_table_level),
    Suite("speyer", 8, _level, _check_speyer_level),
    Suite("tree-operator", 8, _crucial_trees, _check_tree_operator),
]


def run_suite(suite: Suite, maps: Maps, max_n: int, seed: int) -> SuiteResult:
    bound = min(suite.bound, max_n)
    result = SuiteResult(suite.name, bound)
    rng = random.Random(f"{seed}:{suite.name}")
    started = time.perf_counter()
    for n in range(suite.start, bound + 1):
        for case in suite.cases(n):
            result.cases += 1
            try:
                suite.check(maps, n, case, rng)
            except Exception as exc:  # any crash in a map under test is a counterexample
                message = str(exc) or type(exc).__name__
                if not isinstance(exc, CheckFailed):
                    message = f"{type(exc).__name__}: {message}"
                result.counterexample = Counterexample(n, str(case), message)
                result.seconds = time.perf_counter() - started
                return result
    result.seconds = time.perf_counter() - started
    return result


def run_all(
    max_n: int = 10,
    seed: int = 0,
    maps: Optional[Maps] = None,
    only: Optional[Iterable[str]] = None,
) -> list:
    maps = maps or Maps()
    wanted = set(only) if only else None
    return [
        run_suite(suite, maps, max_n, seed)
        for suite in SUITES
        if wanted is None or suite.name in wanted
    ]
