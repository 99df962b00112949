"""Scanning variable orders and the lexicographic term orders they induce.

Anti-diagonal scans start at a NE or SW corner, diagonal scans at NW or SE:

    NEW  x[1,n] first, row 1 westward, then row 2, ...
    NES  x[1,n] first, column n southward, then column n-1, ...
    SWE  x[m,1] first, row m eastward, then row m-1, ...
    SWN  x[m,1] first, column 1 northward, then column 2, ...
    NWE  x[1,1] first, row 1 eastward, ...
    NWS  x[1,1] first, column 1 southward, ...
    SEW  x[m,n] first, row m westward, ...
    SEN  x[m,n] first, column n northward, ...
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .polynomial import Cell, Term

ANTI_DIAGONAL = "anti_diagonal"
DIAGONAL = "diagonal"
KINDS = (ANTI_DIAGONAL, DIAGONAL)

VARIANTS = {
    "NEW": ANTI_DIAGONAL, "NES": ANTI_DIAGONAL, "SWE": ANTI_DIAGONAL, "SWN": ANTI_DIAGONAL,
    "NWE": DIAGONAL, "NWS": DIAGONAL, "SEW": DIAGONAL, "SEN": DIAGONAL,
}


def scan(variant: str, m: int, n: int) -> list[Cell]:
    """Cells of an ``m x n`` matrix from greatest to smallest."""
    rows_down, rows_up = range(1, m + 1), range(m, 0, -1)
    cols_right, cols_left = range(1, n + 1), range(n, 0, -1)
    by_rows = {
        "NEW": (rows_down, cols_left), "SWE": (rows_up, cols_right),
        "NWE": (rows_down, cols_right), "SEW": (rows_up, cols_left),
    }
    by_cols = {
        "NES": (cols_left, rows_down), "SWN": (cols_right, rows_up),
        "NWS": (cols_right, rows_down), "SEN": (cols_left, rows_up),
    }
    if variant in by_rows:
        rows, cols = by_rows[variant]
        return [(i, j) for i in rows for j in cols]
    if variant in by_cols:
        cols, rows = by_cols[variant]
        return [(i, j) for j in cols for i in rows]
    raise ValueError(f"unknown scanning variant {variant!r}")


class TermOrder:
    """Lexicographic term order induced by a total order on the cells.

    ``key(t)`` is the tuple of variable ranks of ``t`` sorted descending;
    Python tuple comparison on these keys is exactly the lexicographic
    comparison of exponent vectors.
    """

    def __init__(self, ranking: Sequence[Cell], kind: str | None = None,
                 variant: str = "custom", dims: tuple[int, int] | None = None):
        cells = [tuple(c) for c in ranking]
        if len(set(cells)) != len(cells):
            raise ValueError("variable ranking repeats a cell")
        total = len(cells)
        self.rank = {c: total - k for k, c in enumerate(cells)}
        self.ranking = tuple(cells)
        self.kind = kind
        self.variant = variant
        if dims is None:
            dims = (max((c[0] for c in cells), default=0), max((c[1] for c in cells), default=0))
        self.dims = dims
        self._keys: dict[Term, tuple[int, ...]] = {}

    @classmethod
    def scanning(cls, variant: str, m: int, n: int | None = None) -> TermOrder:
        variant = variant.upper()
        if variant not in VARIANTS:
            raise ValueError(f"unknown scanning variant {variant!r}; choose from {sorted(VARIANTS)}")
        n = m if n is None else n
        return cls(scan(variant, m, n), VARIANTS[variant], variant, (m, n))

    def __repr__(self):
        return f"TermOrder({self.variant}, {self.dims[0]}x{self.dims[1]})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.ranking == other.ranking

    def __hash__(self):
        return hash(self.ranking)

    @property
    def is_anti_diagonal(self) -> bool:
        return self.kind == ANTI_DIAGONAL

    @property
    def is_diagonal(self) -> bool:
        return self.kind == DIAGONAL

    def key(self, t: Term) -> tuple[int, ...]:
        k = self._keys.get(t)
        if k is None:
            try:
                k = tuple(sorted((self.rank[c] for c in t), reverse=True))
            except KeyError as exc:
                raise ValueError(f"cell {exc.args[0]} outside {self!r}") from None
            if len(self._keys) < 1_000_000:
                self._keys[t] = k
        return k

    def var_compare(self, a: Cell, b: Cell) -> int:
        """-1, 0 or 1 as ``x_a`` is smaller than, equal to or greater than ``x_b``."""
        try:
            ra, rb = self.rank[tuple(a)], self.rank[tuple(b)]
        except KeyError as exc:
            raise ValueError(f"cell {exc.args[0]} outside {self!r}") from None
        return (ra > rb) - (ra < rb)

    def term_compare(self, t: Term, u: Term) -> int:
        kt, ku = self.key(t), self.key(u)
        return (kt > ku) - (kt < ku)

    def greatest_variable(self, cells: Iterable[Cell]) -> Cell:
        return max(cells, key=self.rank.__getitem__)

    def leading_variable(self, t: Term) -> Cell:
        return self.greatest_variable(t)


def check_corner_property(order: TermOrder, m: int | None = None, n: int | None = None,
                          kind: str | None = None) -> bool:
    """Does every square submatrix have its greatest variable at a corner of the right kind?

    NE/SW corners for anti-diagonal, NW/SE for diagonal; ``kind`` defaults to
    the order's own.  Exhaustive over all square submatrices, so keep
    ``m, n <= 10``.
    """
    m = order.dims[0] if m is None else m
    n = order.dims[1] if n is None else n
    kind = kind or order.kind
    if kind not in KINDS:
        raise ValueError("corner property needs kind 'anti_diagonal' or 'diagonal'")
    rank = order.rank
    for size in range(2, min(m, n) + 1):
        for rows in itertools.combinations(range(1, m + 1), size):
            for cols in itertools.combinations(range(1, n + 1), size):
                best = max(((i, j) for i in rows for j in cols), key=rank.__getitem__)
                if kind == ANTI_DIAGONAL:
                    corners = ((rows[0], cols[-1]), (rows[-1], cols[0]))
                else:
                    corners = ((rows[0], cols[0]), (rows[-1], cols[-1]))
                if best not in corners:
                    return False
    return True


def parse_order(name: str, m: int, n: int | None = None) -> TermOrder:
    return TermOrder.scanning(name, m, n)
