"""Words over nonnegative integers and the Properties (A)-(D).

(A1)  no drop greater than one: ``a_{i+1} >= a_i - 1``
(A2)  the leftmost ``k > 0`` has a ``k - 1`` somewhere before and after it
(B1)  no rise greater than one: ``a_{i+1} <= a_i + 1``
(C1)  ``a_1 = 0``
(C3)  the leftmost ``k > 0`` has a ``k - 1`` somewhere after it

(A) = A1 + A2, (B) = B1 + A2, (C) = C1 + B1 + C3, (D) = C1 + B1.
Swapping neighbours that violate (B1) turns (A)-words into (B)-words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .errors import NotPropertyA, NotPropertyB

TAG_ORDER = ("A1", "A2", "B1", "C1", "C3")


@dataclass(frozen=True)
class Word:
    entries: tuple = ()

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if not entries:
            raise ValueError("a word has at least one entry")
        if min(entries) < 0:
            raise ValueError("word entries must be nonnegative")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"0,1,2"`` or the digit shorthand ``"012"``."""
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split()]
        else:
            parts = list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"cannot parse word {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


WordLike = Union[Word, Sequence[int], str]


def as_word(w: WordLike) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of :func:`classify`.

    ``violations`` maps each failing tag to the 1-based index of its first
    violation. For A2 and C3 this is the leftmost occurrence of the offending
    value ``k``; for A1 and B1 it is the index ``i + 1`` of the step.
    """

    word: tuple
    violations: dict = field(default_factory=dict)

    satisfies_A1 = property(lambda self: "A1" not in self.violations)
    satisfies_A2 = property(lambda self: "A2" not in self.violations)
    satisfies_B1 = property(lambda self: "B1" not in self.violations)
    satisfies_C1 = property(lambda self: "C1" not in self.violations)
    satisfies_C3 = property(lambda self: "C3" not in self.violations)

    @property
    def satisfies_A(self) -> bool:
        return self.satisfies_A1 and self.satisfies_A2

    @property
    def satisfies_B(self) -> bool:
        return self.satisfies_B1 and self.satisfies_A2

    @property
    def satisfies_C(self) -> bool:
        return self.satisfies_C1 and self.satisfies_B1 and self.satisfies_C3

    @property
    def satisfies_D(self) -> bool:
        return self.satisfies_C1 and self.satisfies_B1

    @property
    def first_violation(self) -> Optional[tuple]:
        for tag in TAG_ORDER:
            if tag in self.violations:
                return tag, self.violations[tag]
        return None

    def describe(self) -> str:
        if not self.violations:
            return "no violations"
        parts = []
        for tag in TAG_ORDER:
            if tag in self.violations:
                i = self.violations[tag]
                parts.append(f"{tag} violated at index {i} (value {self.word[i - 1]})")
        return "; ".join(parts)

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "A": self.satisfies_A,
            "B": self.satisfies_B,
            "C": self.satisfies_C,
            "D": self.satisfies_D,
            "violations": {t: self.violations[t] for t in TAG_ORDER if t in self.violations},
        }


def _witness_violations(a: tuple) -> tuple:
    """First failing index for the two-sided (A2) and right-sided (C3) witness."""
    first = {}
    last = {}
    for i, value in enumerate(a):
        first.setdefault(value, i)
        last[value] = i
    a2 = c3 = None
    for k in sorted(first):
        if k == 0:
            continue
        i = first[k]
        has_left = k - 1 in first and first[k - 1] < i
        has_right = k - 1 in last and last[k - 1] > i
        if not (has_left and has_right) and (a2 is None or i < a2):
            a2 = i
        if not has_right and (c3 is None or i < c3):
            c3 = i
    return a2, c3


def classify(w: WordLike) -> PropertyReport:
    a = as_word(w).entries
    violations = {}
    for i in range(len(a) - 1):
        if "A1" not in violations and a[i + 1] < a[i] - 1:
            violations["A1"] = i + 2
        if "B1" not in violations and a[i + 1] > a[i] + 1:
            violations["B1"] = i + 2
    if a[0] != 0:
        violations["C1"] = 1
    a2, c3 = _witness_violations(a)
    if a2 is not None:
        violations["A2"] = a2 + 1
    if c3 is not None:
        violations["C3"] = c3 + 1
    return PropertyReport(a, violations)


def a_to_b(w: WordLike) -> Word:
    """Swap the leftmost neighbours with ``a_{i+1} > a_i + 1`` until none remain."""
    w = as_word(w)
    report = classify(w)
    if not report.satisfies_A:
        raise NotPropertyA(report)
    a = list(w)
    i = 0
    while i < len(a) - 1:
        if a[i + 1] > a[i] + 1:
            a[i], a[i + 1] = a[i + 1], a[i]
            # pairs left of i - 1 are untouched by the swap
            i = max(i - 1, 0)
        else:
            i += 1
    return Word(tuple(a))


def b_to_a(w: WordLike) -> Word:
    """Swap the rightmost neighbours with ``a_{i+1} < a_i - 1`` until none remain."""
    w = as_word(w)
    report = classify(w)
    if not report.satisfies_B:
        raise NotPropertyB(report)
    a = list(w)
    i = len(a) - 2
    while i >= 0:
        if a[i + 1] < a[i] - 1:
            a[i], a[i + 1] = a[i + 1], a[i]
            i = min(i + 1, len(a) - 2)
        else:
            i -= 1
    return Word(tuple(a))


def enumerate_words_A(n: int) -> Iterator[Word]:
    """All words of length ``n`` with Property (A), in lexicographic order.

    Depth-first with two prunings: a value may drop by at most one (A1), and
    may exceed the running maximum by at most one, since a new value ``k``
    needs an earlier ``k - 1`` (A2).
    """
    if n < 1:
        raise ValueError("word length must be positive")
    prefix = []

    def extend(top: int) -> Iterator[Word]:
        if len(prefix) == n:
            if classify(prefix).satisfies_A2:
                yield Word(tuple(prefix))
            return
        low = prefix[-1] - 1 if prefix else 0
        for value in range(max(low, 0), top + 2):
            prefix.append(value)
            yield from extend(max(top, value))
            prefix.pop()

    yield from extend(-1)
