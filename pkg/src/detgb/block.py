"""Cell subsets of the generic matrix and their (anti-)diagonality."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .polynomial import Cell

DIAGONAL_ONLY = "diagonal"
ANTI_DIAGONAL_ONLY = "anti_diagonal"
BOTH = "both"
NEITHER = "neither"


class Block:
    """An immutable set of cells ``(row, col)``, 1-based."""

    __slots__ = ("cells", "__dict__")

    def __init__(self, cells: Iterable[Cell]):
        self.cells = frozenset((int(i), int(j)) for i, j in cells)
        if any(i < 1 or j < 1 for i, j in self.cells):
            raise ValueError("block cells must be 1-based")

    @classmethod
    def rectangle(cls, p: int, q: int) -> Block:
        """The northwest ``p x q`` submatrix."""
        return cls.box(1, p, 1, q)

    @classmethod
    def box(cls, r1: int, r2: int, c1: int, c2: int) -> Block:
        return cls((i, j) for i in range(r1, r2 + 1) for j in range(c1, c2 + 1))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __iter__(self):
        return iter(sorted(self.cells))

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        return isinstance(other, Block) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __and__(self, other: Block) -> Block:
        return Block(self.cells & other.cells)

    def __or__(self, other: Block) -> Block:
        return Block(self.cells | other.cells)

    def __repr__(self):
        return f"Block({len(self.cells)} cells)"

    @cached_property
    def rows(self) -> tuple[int, ...]:
        return tuple(sorted({i for i, _ in self.cells}))

    @cached_property
    def cols(self) -> tuple[int, ...]:
        return tuple(sorted({j for _, j in self.cells}))

    @cached_property
    def _counts(self):
        # 2D prefix sums for O(1) rectangle-fullness queries
        m = max(self.rows, default=0)
        n = max(self.cols, default=0)
        pre = [[0] * (n + 1) for _ in range(m + 1)]
        for i in range(1, m + 1):
            row, up = pre[i], pre[i - 1]
            acc = 0
            for j in range(1, n + 1):
                acc += (i, j) in self.cells
                row[j] = up[j] + acc
        return pre

    def rectangle_full(self, r1: int, r2: int, c1: int, c2: int) -> bool:
        """Is every cell of rows ``r1..r2`` x cols ``c1..c2`` in the block?"""
        pre = self._counts
        if r1 < 1 or c1 < 1 or r2 >= len(pre) or c2 >= len(pre[0]):
            return False
        got = pre[r2][c2] - pre[r1 - 1][c2] - pre[r2][c1 - 1] + pre[r1 - 1][c1 - 1]
        return got == (r2 - r1 + 1) * (c2 - c1 + 1)

    @cached_property
    def is_diagonal(self) -> bool:
        """NW and SE corners in the block force the whole rectangle in."""
        cells = sorted(self.cells)
        for a, (i, j) in enumerate(cells):
            for k, l in cells[a + 1:]:
                if l >= j and not self.rectangle_full(i, k, j, l):
                    return False
        return True

    @cached_property
    def is_anti_diagonal(self) -> bool:
        """NE and SW corners in the block force the whole rectangle in."""
        cells = sorted(self.cells)
        for a, (i, j) in enumerate(cells):
            for k, l in cells[a + 1:]:
                if k == i:
                    # same row: the segment between them is a degenerate rectangle
                    if not self.rectangle_full(i, i, j, l):
                        return False
                elif l <= j and not self.rectangle_full(i, k, l, j):
                    return False
        return True

    def diagonality(self) -> str:
        d, a = self.is_diagonal, self.is_anti_diagonal
        if d and a:
            return BOTH
        if d:
            return DIAGONAL_ONLY
        if a:
            return ANTI_DIAGONAL_ONLY
        return NEITHER

    def has_kind(self, kind: str) -> bool:
        if kind == "diagonal":
            return self.is_diagonal
        if kind == "anti_diagonal":
            return self.is_anti_diagonal
        raise ValueError(f"unknown block kind {kind!r}")

    def render(self, m: int | None = None, n: int | None = None) -> str:
        m = m or max(self.rows, default=0)
        n = n or max(self.cols, default=0)
        return "\n".join(
            "".join("#" if (i, j) in self.cells else "." for j in range(1, n + 1))
            for i in range(1, m + 1)
        )


def check_diagonality(block: Block) -> str:
    """One of ``'both'``, ``'diagonal'``, ``'anti_diagonal'``, ``'neither'``."""
    return block.diagonality()
