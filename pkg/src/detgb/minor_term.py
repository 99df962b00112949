"""Minors of the generic matrix, their expansions and leading terms, and the
length test deciding whether a term is divisible by the leading term of some
minor inside a block.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .block import Block
from .polynomial import Cell, Polynomial, Term, make_term
from .term_order import ANTI_DIAGONAL, DIAGONAL, KINDS, TermOrder

__all__ = [
    "Minor", "BlockKindError", "expand_minor", "leading_term", "leading_cells",
    "term_intersect_block", "term_length", "divisible_by_block_minor",
    "find_divisor_minor", "exhaustive_divisor_search", "contains", "complement",
    "permutation_sign", "is_leading_shape",
]


class BlockKindError(ValueError):
    """A block lacks the (anti-)diagonal closure the length test relies on."""


@dataclass(frozen=True, order=True)
class Minor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(i) for i in self.rows)
        cols = tuple(int(j) for j in self.cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs equally many rows and columns, at least one: {rows} {cols}")
        if any(a >= b for a, b in zip(rows, rows[1:])) or any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError(f"minor indices must be strictly increasing: {rows} {cols}")
        if rows[0] < 1 or cols[0] < 1:
            raise ValueError("minor indices are 1-based")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def of(cls, rows: Iterable[int], cols: Iterable[int]) -> Minor:
        return cls(tuple(sorted(rows)), tuple(sorted(cols)))

    @classmethod
    def single(cls, i: int, j: int) -> Minor:
        return cls((i,), (j,))

    @property
    def size(self) -> int:
        return len(self.rows)

    def cells(self) -> set[Cell]:
        return {(i, j) for i in self.rows for j in self.cols}

    def inside(self, block: Block) -> bool:
        cells = block.cells
        return all((i, j) in cells for i in self.rows for j in self.cols)

    def contains(self, other: Minor) -> bool:
        return contains(self, other)

    def complement(self, other: Minor) -> Minor:
        return complement(self, other)

    def expand(self) -> Polynomial:
        return expand_minor(self)

    def __str__(self):
        r = ",".join(map(str, self.rows))
        c = ",".join(map(str, self.cols))
        return f"({{{r}}},{{{c}}})"

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}

    @classmethod
    def from_json(cls, data) -> Minor:
        return cls(tuple(data["rows"]), tuple(data["cols"]))


def permutation_sign(perm: tuple[int, ...]) -> int:
    """Sign of a permutation of ``0..k-1`` via cycle counting."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=16)
def _signed_perms(r: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((p, permutation_sign(p)) for p in itertools.permutations(range(r)))


@lru_cache(maxsize=65536)
def _expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    terms = {}
    for perm, sign in _signed_perms(len(rows)):
        # rows ascending, so the cell tuple is already canonical
        terms[tuple((rows[k], cols[perm[k]]) for k in range(len(rows)))] = sign
    return Polynomial._raw(terms)


def expand_minor(m: Minor) -> Polynomial:
    """Determinant of ``X[rows, cols]`` by the Leibniz formula."""
    return _expand(m.rows, m.cols)


def _kind_of(kind_or_order) -> str:
    kind = kind_or_order.kind if isinstance(kind_or_order, TermOrder) else kind_or_order
    if kind not in KINDS:
        raise ValueError(f"need an anti-diagonal or diagonal order, got {kind!r}")
    return kind


def leading_cells(m: Minor, kind_or_order) -> Term:
    kind = _kind_of(kind_or_order)
    if kind == ANTI_DIAGONAL:
        return tuple(zip(m.rows, reversed(m.cols)))
    return tuple(zip(m.rows, m.cols))


def leading_term(m: Minor, kind_or_order) -> Term:
    """Anti-diagonal or diagonal product of ``m``."""
    return leading_cells(m, kind_or_order)


def is_leading_shape(t: Term, kind: str) -> bool:
    """Do the columns of ``t`` (rows ascending) run strictly down (anti) or up (diagonal)?"""
    cols = [j for _, j in sorted(t)]
    rows = [i for i, _ in sorted(t)]
    if any(a >= b for a, b in zip(rows, rows[1:])):
        return False
    if kind == ANTI_DIAGONAL:
        return all(a > b for a, b in zip(cols, cols[1:]))
    return all(a < b for a, b in zip(cols, cols[1:]))


def term_intersect_block(t: Term, block: Block) -> Term:
    cells = block.cells
    return tuple(c for c in t if c in cells)


def _longest_monotone(cells: Term, kind: str) -> list[Cell]:
    """Longest run of cells with strictly increasing rows and strictly monotone columns."""
    if not cells:
        return []
    sign = -1 if kind == ANTI_DIAGONAL else 1
    # within a row, visit values in decreasing order so a strict run uses each row once
    cells = sorted(set(cells), key=lambda c: (c[0], -sign * c[1]))
    tails: list[int] = []
    tail_idx: list[int] = []
    parent = [-1] * len(cells)
    for k, (_, j) in enumerate(cells):
        v = sign * j
        pos = bisect.bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
            tail_idx.append(k)
        else:
            tails[pos] = v
            tail_idx[pos] = k
        parent[k] = tail_idx[pos - 1] if pos else -1
    out = []
    k = tail_idx[-1]
    while k != -1:
        out.append(cells[k])
        k = parent[k]
    return out[::-1]


def term_length(t: Term, block: Block, kind: str) -> int:
    """Longest decreasing (anti) or increasing (diagonal) column run of ``t`` inside ``block``."""
    kind = _kind_of(kind)
    return len(_longest_monotone(term_intersect_block(make_term(t), block), kind))


def _require_kind(block: Block, kind: str) -> None:
    if not block.has_kind(kind):
        raise BlockKindError(f"block is not {kind.replace('_', '-')}; the length test does not apply")


def divisible_by_block_minor(t: Term, block: Block, r: int, kind: str) -> bool:
    """Is ``t`` divisible by the leading term of some ``r``-minor lying in ``block``?"""
    kind = _kind_of(kind)
    _require_kind(block, kind)
    return term_length(t, block, kind) >= r


def find_divisor_minor(t: Term, block: Block, r: int, kind: str) -> Minor | None:
    """A witness ``r``-minor in ``block`` whose leading term divides ``t``, or None."""
    kind = _kind_of(kind)
    _require_kind(block, kind)
    run = _longest_monotone(term_intersect_block(make_term(t), block), kind)
    if len(run) < r or r < 1:
        return None
    chosen = run[:r]
    m = Minor.of((i for i, _ in chosen), (j for _, j in chosen))
    assert m.inside(block)
    return m


def exhaustive_divisor_search(t: Term, block: Block, r: int, kind: str) -> Minor | None:
    """Reference search: try every ``r`` cells of ``t`` as a leading term.

    Does not assume anything about the shape of ``block``.
    """
    kind = _kind_of(kind)
    t = make_term(t)
    for chosen in itertools.combinations(t, r):
        if not is_leading_shape(chosen, kind):
            continue
        m = Minor.of((i for i, _ in chosen), (j for _, j in chosen))
        if m.inside(block):
            return m
    return None


def contains(m1: Minor, m2: Minor) -> bool:
    return set(m2.rows) <= set(m1.rows) and set(m2.cols) <= set(m1.cols)


def complement(m1: Minor, m2: Minor) -> Minor:
    """Rows and columns of ``m1`` not used by the strictly smaller ``m2``."""
    if not contains(m1, m2) or m2.size >= m1.size:
        raise ValueError(f"{m2} is not a strictly smaller minor of {m1}")
    used_r, used_c = set(m2.rows), set(m2.cols)
    return Minor(tuple(i for i in m1.rows if i not in used_r),
                 tuple(j for j in m1.cols if j not in used_c))
