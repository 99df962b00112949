"""Schubert determinantal ideals: Fulton generators, elusive minors and the
closed-form reduced Groebner basis.

Under an anti-diagonal order the reduced basis element attached to an elusive
minor ``m`` is the expansion of ``m`` with every removed term of ``m`` with
respect to a smaller elusive minor inside ``m`` deleted.  A term ``t`` of ``m``
is removed by ``e`` exactly when ``t`` sends the rows of ``e`` onto the columns
of ``e``, so no polynomial division is ever performed.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .minor_term import Minor, complement, contains, expand_minor, leading_term
from .permutation import (EssentialBox, Permutation, essential_set, is_vexillary,
                          rank_nw, rothe_diagram)
from .polynomial import Polynomial, Term, term_mul
from .term_order import TermOrder

__all__ = [
    "FultonGenerator", "ReducedBasisElement", "UnsupportedOrderError",
    "fulton_generators", "attends", "elusive_minors", "corner_minor",
    "order_r_key", "order_r_compare", "rterm", "rterm_set", "is_removed",
    "reduce_elusive", "contained_elusive", "reduced_gb_schubert", "schubert_stats",
]


class UnsupportedOrderError(ValueError):
    """Diagonal orders are only handled for vexillary permutations."""


class FultonGenerator(NamedTuple):
    minor: Minor
    box: EssentialBox


@dataclass(frozen=True)
class ReducedBasisElement:
    source: Minor
    poly: Polynomial
    removed: int = 0

    def to_json(self, order: TermOrder | None = None) -> dict:
        return {"source": self.source.to_json(), "poly": self.poly.format(order),
                "removed": self.removed}


def _box_minors(box: EssentialBox) -> Iterable[Minor]:
    r = box.rank + 1
    for rows in itertools.combinations(range(1, box.p + 1), r):
        for cols in itertools.combinations(range(1, box.q + 1), r):
            yield Minor(rows, cols)


def fulton_generators(w: Permutation) -> list[FultonGenerator]:
    """All ``(rank+1)``-minors of each essential rectangle.

    A minor lying in two rectangles of equal rank is listed once per rectangle.
    """
    return [FultonGenerator(m, box) for box in essential_set(w) for m in _box_minors(box)]


def attends(m: Minor, box: EssentialBox, r_m: int | None = None) -> bool:
    """Does ``m`` meet ``X[box]`` in enough full rows or full columns?"""
    r_m = m.size if r_m is None else r_m
    need = box.rank + 1
    rows_in = sum(1 for i in m.rows if i <= box.p)
    cols_in = sum(1 for j in m.cols if j <= box.q)
    return (rows_in >= need and cols_in == r_m) or (rows_in == r_m and cols_in >= need)


def elusive_minors(w: Permutation) -> list[FultonGenerator]:
    """Fulton generators attending no essential rectangle of strictly smaller rank.

    Each minor appears once, tagged with the first rectangle producing it.
    """
    ess = essential_set(w)
    out: list[FultonGenerator] = []
    seen: set[Minor] = set()
    for box in ess:
        smaller = [b for b in ess if b.rank < box.rank]
        for m in _box_minors(box):
            if m in seen:
                continue
            if not any(attends(m, b, box.rank + 1) for b in smaller):
                seen.add(m)
                out.append(FultonGenerator(m, box))
    return out


def corner_minor(w: Permutation, p: int, q: int) -> Minor:
    """The ``(r+1)``-minor ending at ``(p, q)``, where ``r`` is the northwest rank there."""
    if (p, q) not in rothe_diagram(w):
        raise ValueError(f"({p}, {q}) is not in the Rothe diagram of {w}")
    r = rank_nw(w, p, q)
    return Minor(tuple(range(p - r, p + 1)), tuple(range(q - r, q + 1)))


def order_r_key(m: Minor | FultonGenerator) -> tuple:
    """Sort key for the order used to sequence reductions: degree, then
    larger early row entries first, then the same for columns."""
    if isinstance(m, FultonGenerator):
        m = m.minor
    return (m.size, tuple(-i for i in m.rows), tuple(-j for j in m.cols))


def order_r_compare(a, b) -> int:
    ka, kb = order_r_key(a), order_r_key(b)
    return (ka > kb) - (ka < kb)


def rterm(m1: Minor, m2: Minor) -> set[Term]:
    """Terms of the product of ``m2`` and its complement in ``m1``."""
    if m1 == m2 or not contains(m1, m2):
        raise ValueError(f"{m2} is not strictly contained in {m1}")
    rest = complement(m1, m2)
    return {term_mul(t, u) for t in expand_minor(m2).terms for u in expand_minor(rest).terms}


def rterm_set(m: Minor, family: Iterable[Minor]) -> set[Term]:
    out: set[Term] = set()
    for e in family:
        out |= rterm(m, e)
    return out


def is_removed(t: Term, e: Minor) -> bool:
    """Does the term ``t`` of a minor containing ``e`` send rows(e) onto cols(e)?"""
    rows = set(e.rows)
    return sorted(j for i, j in t if i in rows) == list(e.cols)


def reduce_elusive(m: Minor, family: Iterable[Minor]) -> Polynomial:
    """Expansion of ``m`` minus the terms removed by the minors in ``family``.

    Every member of ``family`` must be strictly contained in ``m``.
    """
    by_rows: dict[tuple[int, ...], set[tuple[int, ...]]] = defaultdict(set)
    for e in family:
        if e == m or not contains(m, e):
            raise ValueError(f"{e} is not strictly contained in {m}")
        by_rows[e.rows].add(e.cols)
    full = expand_minor(m)
    if not by_rows:
        return full
    # column position of each row inside a term is fixed by the row's rank in m
    pos = {i: k for k, i in enumerate(m.rows)}
    checks = [([pos[i] for i in rows], cols) for rows, cols in by_rows.items()]
    kept = {}
    for t, c in full.terms.items():
        for idx, colsets in checks:
            image = tuple(sorted(t[k][1] for k in idx))
            if image in colsets:
                break
        else:
            kept[t] = c
    return Polynomial._raw(kept)


def contained_elusive(elusive: list[Minor]) -> dict[Minor, list[Minor]]:
    """For each elusive minor, the elusive minors strictly inside it."""
    out: dict[Minor, list[Minor]] = {}
    for m in elusive:
        rs, cs = set(m.rows), set(m.cols)
        out[m] = [e for e in elusive
                  if e.size < m.size and rs.issuperset(e.rows) and cs.issuperset(e.cols)]
    return out


def reduced_gb_schubert(w: Permutation, order: TermOrder) -> list[ReducedBasisElement]:
    """Reduced Groebner basis of the Schubert determinantal ideal of ``w``.

    Sorted by leading term, greatest first.
    """
    if order.is_diagonal and not is_vexillary(w):
        raise UnsupportedOrderError(
            f"{w} is not vexillary; reduced bases under diagonal orders are only "
            "available for vexillary permutations")
    if order.kind is None:
        raise UnsupportedOrderError("order must be anti-diagonal or diagonal")
    if order.dims[0] < w.n or order.dims[1] < w.n:
        raise ValueError(f"order {order!r} too small for a permutation of size {w.n}")
    minors = [g.minor for g in elusive_minors(w)]
    inside = contained_elusive(minors)
    out = []
    for m in minors:
        family = inside[m]
        poly = reduce_elusive(m, family)
        out.append(ReducedBasisElement(m, poly, len(expand_minor(m)) - len(poly)))
    key = order.key
    out.sort(key=lambda e: key(leading_term(e.source, order)), reverse=True)
    return out


def schubert_stats(w: Permutation, basis: list[ReducedBasisElement] | None = None) -> dict:
    gens = fulton_generators(w)
    el = elusive_minors(w)
    stats = {
        "n": w.n,
        "essential": len(essential_set(w)),
        "fulton": len(gens),
        "fulton_distinct": len({g.minor for g in gens}),
        "elusive": len(el),
        "vexillary": is_vexillary(w),
    }
    if basis is not None:
        stats["removed_terms"] = sum(e.removed for e in basis)
        stats["basis_terms"] = sum(len(e.poly) for e in basis)
    return stats
