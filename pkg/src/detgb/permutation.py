"""Permutations, Rothe diagrams, essential sets and the vexillary test.

Indices are 1-based everywhere: ``w(i)`` is the image of ``i`` and boxes are
``(row, col)`` pairs of the ``n x n`` grid.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Permutation", "EssentialBox", "parse_permutation",
    "rothe_diagram", "rank_nw", "rank_table", "essential_set",
    "is_vexillary", "avoids_2143", "essential_antichain",
    "inversion_number", "all_permutations",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {list(self.word)}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, 1))

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.word))
        return "[" + ",".join(map(str, self.word)) + "]"

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


_SPLIT = re.compile(r"[\s,\[\]()]+")


def parse_permutation(text: str | Iterable) -> Permutation:
    """Parse ``"2143"``, ``"[10,9,2,...]"``, ``"1 2 3"`` or an iterable of ints.

    The compact digit form is only meaningful for ``n <= 9``.
    """
    if not isinstance(text, str):
        return Permutation(tuple(int(v) for v in text))
    s = text.strip()
    if re.fullmatch(r"\d+", s):
        return Permutation(tuple(int(ch) for ch in s))
    parts = [p for p in _SPLIT.split(s) if p]
    if not parts or not all(p.isdigit() for p in parts):
        raise ValueError(f"cannot parse permutation from {text!r}")
    return Permutation(tuple(int(p) for p in parts))


class EssentialBox(NamedTuple):
    p: int
    q: int
    rank: int

    @property
    def size(self) -> int:
        """Size of the minors this box contributes (``rank + 1``)."""
        return self.rank + 1


def rothe_diagram(w: Permutation) -> frozenset[tuple[int, int]]:
    """Boxes ``(i, j)`` with ``j < w(i)`` and ``w^-1(j) > i``."""
    inv = w.inverse()
    return frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w(i))
        if inv(j) > i
    )


def rank_nw(w: Permutation, p: int, q: int) -> int:
    """Rank of the northwest ``p x q`` corner of the permutation matrix."""
    if not (1 <= p <= w.n and 1 <= q <= w.n):
        raise ValueError(f"({p}, {q}) outside the {w.n}x{w.n} grid")
    return sum(1 for i in range(1, p + 1) if w(i) <= q)


def rank_table(w: Permutation) -> list[list[int]]:
    """All northwest ranks at once; ``table[p][q]`` with a zero border."""
    n = w.n
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(1, n + 1):
        wp = w(p)
        row, prev = table[p], table[p - 1]
        for q in range(1, n + 1):
            row[q] = prev[q] + (1 if wp <= q else 0)
    return table


def essential_set(w: Permutation) -> list[EssentialBox]:
    """South-east maximal boxes of the Rothe diagram, sorted by ``(p, q)``."""
    diagram = rothe_diagram(w)
    ranks = rank_table(w)
    boxes = [
        EssentialBox(p, q, ranks[p][q])
        for (p, q) in diagram
        if (p, q + 1) not in diagram and (p + 1, q) not in diagram
    ]
    return sorted(boxes)


def avoids_2143(w: Permutation) -> bool:
    """Direct pattern scan for ``i<j<k<l`` with ``w_j < w_i < w_l < w_k``."""
    word = w.word
    n = len(word)
    for j in range(1, n):
        for i in range(j):
            if not word[j] < word[i]:
                continue
            for k in range(j + 1, n):
                if not word[k] > word[i]:
                    continue
                for l in range(k + 1, n):
                    if word[i] < word[l] < word[k]:
                        return False
    return True


def essential_antichain(w: Permutation) -> bool:
    """True iff no two essential boxes are strictly NW/SE of each other."""
    ess = essential_set(w)
    return not any(
        a.p < b.p and a.q < b.q for a in ess for b in ess
    )


def is_vexillary(w: Permutation) -> bool:
    """2143-avoidance, checked against the essential-set characterisation."""
    result = essential_antichain(w)
    if __debug__:
        assert result == avoids_2143(w), f"vexillary tests disagree on {w}"
    return result


def inversion_number(w: Permutation) -> int:
    word = w.word
    return sum(1 for a, b in itertools.combinations(word, 2) if a > b)


def all_permutations(n: int) -> Iterable[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)
