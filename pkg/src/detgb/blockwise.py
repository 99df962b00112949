"""Blockwise determinantal ideals, ladders and sufficient Groebner-basis criteria.

A blockwise ideal is given by blocks ``B_1..B_k`` (cell sets) and sizes
``r_1..r_k``; it is generated by every ``r_i``-minor whose cells all lie in
``B_i``.  Ladders are diagonal blocks bounded by a staircase of lower corners
and a staircase of upper corners.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .block import Block, check_diagonality
from .minor_term import BlockKindError, Minor, expand_minor, leading_term
from .oracle import ScaleError
from .permutation import Permutation, all_permutations, essential_set, is_vexillary
from .polynomial import Cell, Polynomial
from .term_order import TermOrder

__all__ = [
    "Block", "check_diagonality", "Ladder", "LadderError", "CornerOrderError",
    "RankGapError", "BlockwiseIdealSpec", "CriterionResult", "block_minors",
    "one_sided_ideal", "ladder_to_vexillary", "vexillary_to_ladder",
    "two_sided_generators", "two_sided_spec", "criterion_disjoint_blocks",
    "criterion_disjoint_leading_vars", "criterion_attend_or_lcm",
    "criterion_rowcolumn", "criterion_fewer_rows", "block_attends",
]

ROWCOLUMN_MAX_SPAN = 12


class LadderError(ValueError):
    """Malformed ladder or ladder-ideal data."""


class CornerOrderError(LadderError):
    """Corner sequences are not monotone as required."""


class RankGapError(LadderError):
    """``a_i - r_i`` must increase and ``b_i - r_i`` decrease, staying nonnegative."""


# ---------------------------------------------------------------- blocks

def block_minors(block: Block, r: int) -> list[Minor]:
    """Every ``r``-minor whose cells all lie in ``block``, sorted by rows then cols."""
    if r < 1:
        return []
    cols_of: dict[int, frozenset[int]] = {}
    for i, j in block.cells:
        cols_of.setdefault(i, set()).add(j)
    cols_of = {i: frozenset(c) for i, c in cols_of.items()}
    rows = sorted(cols_of)
    out: list[Minor] = []

    def grow(start: int, chosen: list[int], common: frozenset[int]):
        if len(chosen) == r:
            for cols in itertools.combinations(sorted(common), r):
                out.append(Minor(tuple(chosen), cols))
            return
        for k in range(start, len(rows) - (r - len(chosen)) + 1):
            nxt = common & cols_of[rows[k]] if chosen else cols_of[rows[k]]
            if len(nxt) >= r:
                chosen.append(rows[k])
                grow(k + 1, chosen, nxt)
                chosen.pop()

    grow(0, [], frozenset())
    return out


# ---------------------------------------------------------------- ladders

def _check_staircase(pairs: Sequence[tuple[int, int]], what: str, m: int, n: int):
    for p, q in pairs:
        if not (1 <= p <= m and 1 <= q <= n):
            raise CornerOrderError(f"{what} corner ({p}, {q}) outside the {m}x{n} matrix")
    for (p1, q1), (p2, q2) in zip(pairs, pairs[1:]):
        if not p1 < p2:
            raise CornerOrderError(f"{what} corner rows must increase strictly: {list(pairs)}")
        if not q1 >= q2:
            raise CornerOrderError(f"{what} corner columns must not increase: {list(pairs)}")


@dataclass(frozen=True)
class Ladder:
    """Cells northwest of some lower corner and southeast of some upper corner."""

    lower: tuple[tuple[int, int], ...]
    upper: tuple[tuple[int, int], ...] = ((1, 1),)
    m: int | None = None
    n: int | None = None

    def __post_init__(self):
        lower = tuple((int(a), int(b)) for a, b in self.lower)
        upper = tuple((int(c), int(d)) for c, d in self.upper) or ((1, 1),)
        if not lower:
            raise LadderError("a ladder needs at least one lower corner")
        m = self.m or max(a for a, _ in lower)
        n = self.n or max(b for _, b in lower)
        _check_staircase(lower, "lower", m, n)
        _check_staircase(upper, "upper", m, n)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        if not self.cells:
            raise LadderError("ladder has no cells")

    @property
    def cells(self) -> frozenset[Cell]:
        return _ladder_cells(self.lower, self.upper)

    @property
    def block(self) -> Block:
        return Block(self.cells)

    def parts(self) -> list[Block]:
        """``L_i``: the cells of the ladder southeast of the ``i``-th upper corner."""
        return [Block((p, q) for p, q in self.cells if p >= c and q >= d) for c, d in self.upper]

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], m: int | None = None, n: int | None = None) -> Ladder:
        """Recover the corner sequences of a ladder given as a cell set."""
        cells = frozenset(cells)
        if not cells:
            raise LadderError("empty cell set")
        if not Block(cells).is_diagonal:
            raise LadderError("cell set is not closed under northwest/southeast rectangles")
        lower = sorted((p, q) for p, q in cells if (p + 1, q) not in cells and (p, q + 1) not in cells)
        upper = sorted((p, q) for p, q in cells if (p - 1, q) not in cells and (p, q - 1) not in cells)
        lad = cls(tuple(lower), tuple(upper), m, n)
        if lad.cells != cells:
            raise LadderError("cell set is not a ladder")
        return lad

    def render(self) -> str:
        return Block(self.cells).render(self.m, self.n)

    def to_json(self) -> dict:
        return {"lower": [list(c) for c in self.lower], "upper": [list(c) for c in self.upper],
                "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> Ladder:
        return cls(tuple(map(tuple, data["lower"])), tuple(map(tuple, data.get("upper") or [[1, 1]])),
                   data.get("m"), data.get("n"))


@lru_cache(maxsize=256)
def _ladder_cells(lower, upper) -> frozenset[Cell]:
    m = max(a for a, _ in lower)
    n = max(b for _, b in lower)
    return frozenset(
        (p, q) for p in range(1, m + 1) for q in range(1, n + 1)
        if any(p <= a and q <= b for a, b in lower) and any(p >= c and q >= d for c, d in upper)
    )


# ---------------------------------------------------------------- ideal specs

@dataclass(frozen=True)
class BlockwiseIdealSpec:
    blocks: tuple[Block, ...]
    sizes: tuple[int, ...]
    corners: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "sizes", tuple(int(r) for r in self.sizes))
        if len(self.blocks) != len(self.sizes):
            raise ValueError("need one size per block")
        if any(r < 1 for r in self.sizes):
            raise ValueError("minor sizes must be positive")

    def __len__(self):
        return len(self.blocks)

    def generators(self) -> list[list[Minor]]:
        return [block_minors(B, r) for B, r in zip(self.blocks, self.sizes)]

    def polynomials(self) -> list[Polynomial]:
        seen, out = set(), []
        for group in self.generators():
            for mi in group:
                if mi not in seen:
                    seen.add(mi)
                    out.append(expand_minor(mi))
        return out

    def kind(self) -> str:
        """``'both'``, ``'diagonal'``, ``'anti_diagonal'`` or ``'neither'`` for the whole spec."""
        d = all(B.is_diagonal for B in self.blocks)
        a = all(B.is_anti_diagonal for B in self.blocks)
        return "both" if d and a else "diagonal" if d else "anti_diagonal" if a else "neither"


def one_sided_ideal(a: Sequence[int], b: Sequence[int], r: Sequence[int],
                    m: int | None = None, n: int | None = None) -> BlockwiseIdealSpec:
    """Blocks ``X[a_i, b_i]`` with sizes ``r_i``, after validating the corner and rank conditions."""
    a, b, r = list(a), list(b), list(r)
    if not (len(a) == len(b) == len(r)) or not a:
        raise LadderError("a, b and r must be nonempty and of equal length")
    m = m or max(a)
    n = n or max(b)
    if not (1 <= a[0] and all(x <= y for x, y in zip(a, a[1:])) and a[-1] <= m):
        raise CornerOrderError(f"need 1 <= a_1 <= ... <= a_k <= {m}, got {a}")
    if not (n >= b[0] and all(x >= y for x, y in zip(b, b[1:])) and b[-1] >= 1):
        raise CornerOrderError(f"need {n} >= b_1 >= ... >= b_k >= 1, got {b}")
    ar = [x - y for x, y in zip(a, r)]
    br = [x - y for x, y in zip(b, r)]
    # the outer bounds are non-strict: r_i = a_i is a legitimate essential rank
    if not (ar[0] >= 0 and all(x < y for x, y in zip(ar, ar[1:]))):
        raise RankGapError(f"need 0 <= a_1-r_1 < a_2-r_2 < ..., got {ar}")
    if not (br[-1] >= 0 and all(x > y for x, y in zip(br, br[1:]))):
        raise RankGapError(f"need b_1-r_1 > b_2-r_2 > ... > b_k-r_k >= 0, got {br}")
    return BlockwiseIdealSpec(tuple(Block.rectangle(p, q) for p, q in zip(a, b)), tuple(r),
                              corners=tuple(zip(a, b)))


@lru_cache(maxsize=16)
def _vexillary_index(n: int) -> dict[tuple, list[Permutation]]:
    index: dict[tuple, list[Permutation]] = {}
    for w in all_permutations(n):
        if is_vexillary(w):
            index.setdefault(tuple(essential_set(w)), []).append(w)
    return index


def vexillary_to_ladder(w: Permutation) -> tuple[list[int], list[int], list[int]]:
    """Corner data ``(a, b, r)`` of the one-sided ideal matching a vexillary ``w``."""
    if not is_vexillary(w):
        raise ValueError(f"{w} is not vexillary")
    ess = sorted(essential_set(w), key=lambda e: (e.p, -e.q))
    return [e.p for e in ess], [e.q for e in ess], [e.rank + 1 for e in ess]


def ladder_to_vexillary(spec: BlockwiseIdealSpec, n: int | None = None,
                        max_n: int = 8, check_bound: bool = True) -> Permutation:
    """The vexillary permutation whose Schubert ideal is the given one-sided ideal.

    Found by exhaustive search over ``S_n``, so ``n`` is capped at ``max_n``.
    Existence is only guaranteed for ``n >= a_k + b_1``; with
    ``check_bound=False`` smaller ``n`` are searched too.
    """
    if spec.corners is None:
        raise LadderError("spec was not built as a one-sided ladder ideal")
    a = [p for p, _ in spec.corners]
    b = [q for _, q in spec.corners]
    need = a[-1] + b[0]
    n = need if n is None else n
    if check_bound and n < need:
        raise ValueError(f"n = {n} is below a_k + b_1 = {need}")
    if n > max_n:
        raise ScaleError(f"exhaustive search over S_{n} exceeds the limit n <= {max_n}")
    target = tuple(sorted((p, q, r - 1) for (p, q), r in zip(spec.corners, spec.sizes)))
    hits = [w for ess, ws in _vexillary_index(n).items()
            if tuple(tuple(e) for e in ess) == target for w in ws]
    if len(hits) != 1:
        raise AssertionError(f"expected exactly one vexillary permutation, found {len(hits)}")
    return hits[0]


def two_sided_generators(ladder: Ladder, r: Sequence[int], *, literal: bool = False) -> list[list[Minor]]:
    """Minors of ``L_i`` of size ``r_i`` with fewer than ``r_j`` columns in ``L_j``
    for ``j < i`` and fewer than ``r_j`` rows in ``L_j`` for ``j > i``.

    When ``r_j == r_i`` for some ``j > i`` the two caps together discard the
    ``r_i``-minors of ``L_i & L_j`` from both groups, and the result no longer
    generates the ideal.  By default the row cap is therefore only applied
    for ``r_j < r_i``, which keeps such minors in the earlier group; pass
    ``literal=True`` for the unmodified rule.
    """
    r = list(r)
    if len(r) != len(ladder.upper):
        raise LadderError(f"need one size per upper corner ({len(ladder.upper)}), got {len(r)}")
    parts = ladder.parts()
    groups = []
    for i, (part, ri) in enumerate(zip(parts, r)):
        keep = []
        later = [j for j in range(i + 1, len(r)) if literal or r[j] < ri]
        for mi in block_minors(part, ri):
            ok = all(sum(1 for q in mi.cols if q >= ladder.upper[j][1]) <= r[j] - 1 for j in range(i))
            ok = ok and all(sum(1 for p in mi.rows if p >= ladder.upper[j][0]) <= r[j] - 1
                            for j in later)
            if ok:
                keep.append(mi)
        groups.append(keep)
    return groups


def two_sided_spec(ladder: Ladder, r: Sequence[int]) -> BlockwiseIdealSpec:
    return BlockwiseIdealSpec(tuple(ladder.parts()), tuple(r))


# ---------------------------------------------------------------- criteria

@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    pair: tuple | None = None
    checked: int = 0

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        pair = None
        if self.pair is not None:
            pair = [x.to_json() if isinstance(x, Minor) else x for x in self.pair]
        return {"holds": self.holds, "first_violation": pair, "checked": self.checked}


def criterion_disjoint_blocks(spec: BlockwiseIdealSpec) -> CriterionResult:
    k = 0
    for i, j in itertools.combinations(range(len(spec)), 2):
        k += 1
        if spec.blocks[i].cells & spec.blocks[j].cells:
            return CriterionResult(False, (i, j), k)
    return CriterionResult(True, None, k)


def _require_spec_kind(spec: BlockwiseIdealSpec, order: TermOrder):
    if order.kind is None:
        raise BlockKindError("order must be anti-diagonal or diagonal")
    for B in spec.blocks:
        if not B.has_kind(order.kind):
            raise BlockKindError(f"a block is not {order.kind.replace('_', '-')}, "
                                 "so the order does not match the spec")


def criterion_disjoint_leading_vars(spec: BlockwiseIdealSpec, order: TermOrder) -> CriterionResult:
    """Leading terms of generators from different blocks share no variable."""
    _require_spec_kind(spec, order)
    gens = spec.generators()
    supports = [[(mi, frozenset(leading_term(mi, order))) for mi in g] for g in gens]
    k = 0
    for i, j in itertools.combinations(range(len(spec)), 2):
        for mi, si in supports[i]:
            for mj, sj in supports[j]:
                k += 1
                if si & sj:
                    return CriterionResult(False, (i, j, mi, mj), k)
    return CriterionResult(True, None, k)


def block_attends(mi: Minor, block: Block, r: int) -> bool:
    """Does ``block`` hold at least ``r`` full rows or ``r`` full columns of ``mi``?"""
    cells = block.cells
    full_rows = sum(1 for p in mi.rows if all((p, q) in cells for q in mi.cols))
    if full_rows >= r:
        return True
    full_cols = sum(1 for q in mi.cols if all((p, q) in cells for p in mi.rows))
    return full_cols >= r


def criterion_attend_or_lcm(spec: BlockwiseIdealSpec, order: TermOrder, *,
                            literal: bool = False) -> CriterionResult:
    """For ``r_j <= r_i``: each ``r_i``-generator attends ``B_j`` or has leading
    term coprime to each ``r_j``-generator's.

    Blocks of equal size are compared too: leaving them out (``literal=True``)
    lets two overlapping blocks of the same size pass without being a
    Groebner basis.
    """
    if order.kind is None:
        raise BlockKindError("order must be anti-diagonal or diagonal")
    gens = spec.generators()
    lts = [[frozenset(leading_term(mi, order)) for mi in g] for g in gens]
    k = 0
    for i in range(len(spec)):
        for j in range(len(spec)):
            if i == j or spec.sizes[j] > spec.sizes[i]:
                continue
            if literal and spec.sizes[j] == spec.sizes[i]:
                continue
            for mi, si in zip(gens[i], lts[i]):
                if block_attends(mi, spec.blocks[j], spec.sizes[j]):
                    k += len(gens[j])
                    continue
                for mj, sj in zip(gens[j], lts[j]):
                    k += 1
                    if si & sj:
                        return CriterionResult(False, (i, j, mi, mj), k)
    return CriterionResult(True, None, k)


def _span(block: Block) -> tuple[int, int]:
    if not block.cells:
        return 0, 0
    return (block.rows[-1] - block.rows[0] + 1, block.cols[-1] - block.cols[0] + 1)


def criterion_rowcolumn(spec: BlockwiseIdealSpec) -> CriterionResult:
    """Witness search: for every cross-block generator pair find an upper corner
    shared by both blocks and comparable lower corners in each.

    Witnesses are chosen separately for every generator pair.
    """
    if not all(B.is_diagonal for B in spec.blocks):
        raise BlockKindError("the row/column criterion needs diagonal blocks")
    for B in spec.blocks:
        h, w = _span(B)
        if h > ROWCOLUMN_MAX_SPAN or w > ROWCOLUMN_MAX_SPAN:
            raise ScaleError(f"block spans {h}x{w}; the witness search is limited to "
                             f"{ROWCOLUMN_MAX_SPAN}x{ROWCOLUMN_MAX_SPAN}")
    gens = spec.generators()
    cells = [sorted(B.cells) for B in spec.blocks]

    @lru_cache(maxsize=None)
    def ok(i, j, lo_r, lo_c, hi_i, hi_j):
        shared = spec.blocks[i].cells & spec.blocks[j].cells
        if not any(c <= lo_r and d <= lo_c for c, d in shared):
            return False
        A = [(a, b) for a, b in cells[i] if a >= hi_i[0] and b >= hi_i[1]]
        At = [(a, b) for a, b in cells[j] if a >= hi_j[0] and b >= hi_j[1]]
        return any((a >= at and b <= bt) or (a <= at and b >= bt)
                   for a, b in A for at, bt in At)

    k = 0
    for i, j in itertools.combinations(range(len(spec)), 2):
        for mi in gens[i]:
            for mj in gens[j]:
                k += 1
                lo_r = min(mi.rows[0], mj.rows[0])
                lo_c = min(mi.cols[0], mj.cols[0])
                if not ok(i, j, lo_r, lo_c, (mi.rows[-1], mi.cols[-1]), (mj.rows[-1], mj.cols[-1])):
                    return CriterionResult(False, (i, j, mi, mj), k)
    return CriterionResult(True, None, k)


def criterion_fewer_rows(spec: BlockwiseIdealSpec,
                         generators: Sequence[Sequence[Minor]] | None = None) -> CriterionResult:
    """Each generator meets every block of a different size in fewer than ``r``
    rows or fewer than ``r`` columns.  Given a Groebner basis of generators,
    this certifies it is reduced."""
    gens = spec.generators() if generators is None else generators
    k = 0
    for i, group in enumerate(gens):
        for mi in group:
            for j, (B, r) in enumerate(zip(spec.blocks, spec.sizes)):
                if r == mi.size:
                    continue
                k += 1
                hit = [(p, q) for p in mi.rows for q in mi.cols if (p, q) in B.cells]
                if len({p for p, _ in hit}) >= r and len({q for _, q in hit}) >= r:
                    return CriterionResult(False, (i, j, mi), k)
    return CriterionResult(True, None, k)
