"""Triangular sets drawn from a lexicographic reduced Groebner basis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .oracle import is_reduced_gb, normal_form
from .polynomial import Cell, Polynomial
from .term_order import TermOrder

__all__ = [
    "TriangularSet", "leading_variable", "initial_of", "w_characteristic_set",
    "is_normal", "normality_violations", "strong_pair_partial_check",
]


def leading_variable(P: Polynomial, order: TermOrder) -> Cell:
    """Greatest variable occurring in ``P``."""
    if not P.variables():
        raise ValueError("constant polynomial has no leading variable")
    return order.greatest_variable(P.variables())


def _degree_in(t, v) -> int:
    return sum(1 for c in t if c == v)


def initial_of(P: Polynomial, order: TermOrder) -> Polynomial:
    """Coefficient of the top power of the leading variable."""
    if not P:
        raise ValueError("zero polynomial has no initial")
    if not P.variables():
        return P
    v = leading_variable(P, order)
    top = max(_degree_in(t, v) for t in P.terms)
    return Polynomial((tuple(c for c in t if c != v), k)
                      for t, k in P.terms.items() if _degree_in(t, v) == top)


@dataclass(frozen=True)
class TriangularSet:
    polys: tuple[Polynomial, ...]
    order: TermOrder

    def __post_init__(self):
        lvs = [self.order.rank[leading_variable(p, self.order)] for p in self.polys]
        if any(a >= b for a, b in zip(lvs, lvs[1:])):
            raise ValueError("leading variables must increase strictly")

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    @property
    def leading_variables(self) -> list[Cell]:
        return [leading_variable(p, self.order) for p in self.polys]

    @property
    def initials(self) -> list[Polynomial]:
        return [initial_of(p, self.order) for p in self.polys]


def _lex_key(P: Polynomial, order: TermOrder):
    return [order.key(t) for t, _ in P.sorted_terms(order)]


def w_characteristic_set(G: Sequence[Polynomial], order: TermOrder, *,
                         check: bool = True) -> TriangularSet:
    """The lexicographically smallest element for each leading variable, in increasing order."""
    G = [g for g in G if g]
    if check and not is_reduced_gb(G, order):
        raise ValueError("input is not reduced")
    best: dict[Cell, Polynomial] = {}
    for g in G:
        if not g.variables():
            continue
        v = leading_variable(g, order)
        if v not in best or _lex_key(g, order) < _lex_key(best[v], order):
            best[v] = g
    ordered = sorted(best, key=order.rank.__getitem__)
    return TriangularSet(tuple(best[v] for v in ordered), order)


def normality_violations(C: TriangularSet) -> list[tuple[int, Cell]]:
    """``(index, variable)`` for every initial that involves a leading variable of ``C``."""
    lvs = set(C.leading_variables)
    out = []
    for k, ini in enumerate(C.initials):
        for v in sorted(ini.variables() & lvs, key=C.order.rank.__getitem__, reverse=True):
            out.append((k, v))
    return out


def is_normal(C: TriangularSet) -> bool:
    return not normality_violations(C)


def strong_pair_partial_check(G: Sequence[Polynomial], C: TriangularSet) -> bool:
    """No initial of ``C`` lies in the ideal of the Groebner basis ``G``.

    This is only a necessary condition for the pair to be strong.
    """
    return all(normal_form(ini, G, C.order) for ini in C.initials)
