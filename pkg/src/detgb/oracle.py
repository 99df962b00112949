"""Classical reduction and Buchberger checks, for verifying the combinatorial
constructions on small inputs.

Everything stays over the integers: divisors must have leading coefficient
``+1`` or ``-1``, which holds for minors and for everything derived from them
here.
"""

from __future__ import annotations

import itertools
import os
import random
from typing import Iterable, Sequence

from .minor_term import Minor, expand_minor
from .polynomial import Polynomial, Term, term_div, term_divides, term_lcm, terms_coprime
from .term_order import TermOrder

__all__ = [
    "ScaleError", "NonUnitLeadingCoefficient", "reduce_once", "normal_form",
    "s_polynomial", "is_groebner", "groebner_failures", "is_minimal_gb",
    "is_reduced_gb", "inter_reduce", "laplace_expand", "normalize_sign",
    "DEFAULT_MAX_POLYS", "DEFAULT_MAX_VARS",
]

DEFAULT_MAX_POLYS = 60
DEFAULT_MAX_VARS = 40


class ScaleError(RuntimeError):
    """Input too large for the exhaustive checks."""


class NonUnitLeadingCoefficient(ValueError):
    pass


def _limits(max_polys, max_vars):
    env = os.environ.get("DETGB_MAX_SCALE")
    if env:
        # "P" or "P,V"
        parts = [int(x) for x in env.split(",")]
        max_polys = max_polys or parts[0]
        max_vars = max_vars or (parts[1] if len(parts) > 1 else parts[0])
    return max_polys or DEFAULT_MAX_POLYS, max_vars or DEFAULT_MAX_VARS


def _guard(G: Sequence[Polynomial], max_polys=None, max_vars=None):
    max_polys, max_vars = _limits(max_polys, max_vars)
    nvars = len(set().union(*(g.variables() for g in G))) if G else 0
    if len(G) > max_polys or nvars > max_vars:
        raise ScaleError(
            f"{len(G)} polynomials in {nvars} variables exceeds the limit "
            f"({max_polys} polynomials, {max_vars} variables); set DETGB_MAX_SCALE to override")


def reduce_once(P: Polynomial, Q: Polynomial, t: Term, order: TermOrder) -> Polynomial:
    """Eliminate the term ``t`` of ``P`` using ``Q``."""
    c = P.coefficient(t)
    if not c:
        raise ValueError("t is not a term of P")
    lt = Q.leading_term(order)
    lc = Q.terms[lt]
    if abs(lc) != 1:
        raise NonUnitLeadingCoefficient(f"leading coefficient {lc} is not a unit")
    if not term_divides(lt, t):
        raise ValueError("leading term of Q does not divide t")
    return P - Q.mul_term(term_div(t, lt), c * lc)


def _leading(G: Iterable[Polynomial], order: TermOrder):
    out = []
    for g in G:
        if not g:
            continue
        lt = g.leading_term(order)
        if abs(g.terms[lt]) != 1:
            raise NonUnitLeadingCoefficient(f"leading coefficient {g.terms[lt]} is not a unit")
        out.append((lt, g))
    return out


def normal_form(P: Polynomial, G: Iterable[Polynomial], order: TermOrder,
                rng: random.Random | None = None) -> Polynomial:
    """Fully reduce ``P`` modulo ``G``.

    By default the greatest reducible term is eliminated with the first usable
    divisor; with ``rng`` both choices are random.
    """
    lead = _leading(G, order)
    key = order.key
    while True:
        reducible = []
        for t in P.terms:
            divs = [(lt, g) for lt, g in lead if term_divides(lt, t)]
            if divs:
                reducible.append((t, divs))
        if not reducible:
            return P
        if rng is None:
            t, divs = max(reducible, key=lambda td: key(td[0]))
            _, g = divs[0]
        else:
            t, divs = rng.choice(reducible)
            _, g = rng.choice(divs)
        P = reduce_once(P, g, t, order)


def s_polynomial(F: Polynomial, G: Polynomial, order: TermOrder) -> Polynomial:
    ltf, ltg = F.leading_term(order), G.leading_term(order)
    L = term_lcm(ltf, ltg)
    return F.mul_term(term_div(L, ltf), G.terms[ltg]) - G.mul_term(term_div(L, ltg), F.terms[ltf])


def groebner_failures(G: Sequence[Polynomial], order: TermOrder, *, first_only: bool = False,
                      max_polys: int | None = None, max_vars: int | None = None):
    """Index pairs whose S-polynomial does not reduce to zero."""
    G = [g for g in G if g]
    _guard(G, max_polys, max_vars)
    bad = []
    for i, j in itertools.combinations(range(len(G)), 2):
        if terms_coprime(G[i].leading_term(order), G[j].leading_term(order)):
            continue
        if normal_form(s_polynomial(G[i], G[j], order), G, order):
            bad.append((i, j))
            if first_only:
                break
    return bad


def is_groebner(G: Sequence[Polynomial], order: TermOrder, **limits) -> bool:
    return not groebner_failures(G, order, first_only=True, **limits)


def is_minimal_gb(G: Sequence[Polynomial], order: TermOrder, *, verify: bool = False,
                  **limits) -> bool:
    """No leading term divides another's (signs of leading coefficients are free)."""
    G = [g for g in G if g]
    if verify and not is_groebner(G, order, **limits):
        raise ValueError("not a Groebner basis")
    lead = [g.leading_term(order) for g in G]
    if any(abs(g.terms[lt]) != 1 for g, lt in zip(G, lead)):
        return False
    return not any(i != j and term_divides(lead[i], lead[j])
                   for i in range(len(G)) for j in range(len(G)))


def is_reduced_gb(G: Sequence[Polynomial], order: TermOrder, *, verify: bool = False,
                  **limits) -> bool:
    """No term of any element is divisible by another element's leading term."""
    G = [g for g in G if g]
    if verify and not is_groebner(G, order, **limits):
        raise ValueError("not a Groebner basis")
    lead = [g.leading_term(order) for g in G]
    if any(abs(g.terms[lt]) != 1 for g, lt in zip(G, lead)):
        return False
    for i, g in enumerate(G):
        for j, lt in enumerate(lead):
            if i != j and any(term_divides(lt, t) for t in g.terms):
                return False
    return True


def normalize_sign(P: Polynomial, order: TermOrder) -> Polynomial:
    """``P`` scaled by ``-1`` if needed so its leading coefficient is positive."""
    return -P if P and P.leading_coefficient(order) < 0 else P


def inter_reduce(G: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Replace each element by its normal form modulo the others.

    For a minimal Groebner basis this yields the reduced one; leading
    coefficients keep their original sign.  Output is sorted by leading term,
    greatest first.
    """
    G = [g for g in G if g]
    out = []
    for i, g in enumerate(G):
        rest = G[:i] + G[i + 1:]
        lt = g.leading_term(order)
        head = Polynomial._raw({lt: g.terms[lt]})
        tail = normal_form(g - head, rest, order)
        out.append(head + tail)
    out.sort(key=lambda p: order.key(p.leading_term(order)), reverse=True)
    return out


def laplace_expand(m: Minor, rows: Iterable[int]) -> list[tuple[int, Minor, Minor | None]]:
    """Generalised Laplace expansion of ``m`` along a set of its rows.

    Returns ``(sign, sub, rest)`` for every choice of columns.  The sign
    exponent adds the positions (within ``m``) of the chosen rows and
    columns; ``rest`` is None when all rows are chosen.
    """
    rows = tuple(sorted(set(rows)))
    if not rows or not set(rows) <= set(m.rows):
        raise ValueError(f"{rows} is not a nonempty subset of the rows of {m}")
    rpos = sum(m.rows.index(i) + 1 for i in rows)
    out = []
    for cols in itertools.combinations(m.cols, len(rows)):
        cpos = sum(m.cols.index(j) + 1 for j in cols)
        sign = -1 if (rpos + cpos) % 2 else 1
        sub = Minor(rows, cols)
        if len(rows) == m.size:
            out.append((sign, sub, None))
        else:
            rest = Minor(tuple(i for i in m.rows if i not in rows),
                         tuple(j for j in m.cols if j not in cols))
            out.append((sign, sub, rest))
    if __debug__:
        total = Polynomial()
        for sign, sub, rest in out:
            piece = expand_minor(sub) if rest is None else expand_minor(sub) * expand_minor(rest)
            total = total + piece * sign
        assert total == expand_minor(m), "Laplace expansion does not reproduce the minor"
    return out
