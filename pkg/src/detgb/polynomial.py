"""Sparse polynomials over the integers in the entries ``x[i,j]`` of a generic matrix.

A term is a tuple of ``(row, col)`` cells sorted ascending; repeated cells
encode powers.  Terms of minors never repeat a row or a column, so they are
exactly the two-row arrays of the combinatorial theory, but the oracle code
multiplies arbitrary terms and needs the general case.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

if TYPE_CHECKING:
    from .term_order import TermOrder

Cell = tuple[int, int]
Term = tuple[Cell, ...]

ONE: Term = ()


def make_term(cells: Iterable[Cell]) -> Term:
    return tuple(sorted((int(i), int(j)) for i, j in cells))


def term_mul(t: Term, u: Term) -> Term:
    if not t:
        return u
    if not u:
        return t
    return tuple(sorted(t + u))


def term_divides(u: Term, t: Term) -> bool:
    """True iff ``u | t`` (multiset inclusion of sorted cell tuples)."""
    if len(u) > len(t):
        return False
    k = 0
    lt = len(t)
    for c in u:
        while k < lt and t[k] < c:
            k += 1
        if k == lt or t[k] != c:
            return False
        k += 1
    return True


def term_div(t: Term, u: Term) -> Term:
    """``t / u``; raises if ``u`` does not divide ``t``."""
    rest = Counter(t)
    rest.subtract(u)
    if any(v < 0 for v in rest.values()):
        raise ValueError(f"{format_term(u)} does not divide {format_term(t)}")
    return tuple(sorted(rest.elements()))


def term_lcm(t: Term, u: Term) -> Term:
    a, b = Counter(t), Counter(u)
    return tuple(sorted((a | b).elements()))


def terms_coprime(t: Term, u: Term) -> bool:
    return not set(t) & set(u)


def format_term(t: Term) -> str:
    if not t:
        return "1"
    parts = []
    for cell, e in sorted(Counter(t).items()):
        s = f"x[{cell[0]},{cell[1]}]"
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable mapping ``term -> nonzero int``; the empty mapping is zero."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Term, int] | Iterable[tuple[Term, int]] | None = None):
        acc: dict[Term, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for t, c in items:
                t = tuple(sorted(t))
                acc[t] = acc.get(t, 0) + int(c)
        self._terms = {t: c for t, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Term, int]) -> Polynomial:
        # terms must already be canonical and zero-free
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, t: Iterable[Cell], c: int = 1) -> Polynomial:
        return cls({make_term(t): c})

    @classmethod
    def variable(cls, i: int, j: int) -> Polynomial:
        return cls({((i, j),): 1})

    @property
    def terms(self) -> Mapping[Term, int]:
        return self._terms

    def coefficient(self, t: Term) -> int:
        return self._terms.get(t, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Term, int]]:
        return iter(self._terms.items())

    def __contains__(self, t):
        return t in self._terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return Polynomial._raw({t: -c for t, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._terms)
        for t, c in other._terms.items():
            v = acc.get(t, 0) + c
            if v:
                acc[t] = v
            else:
                acc.pop(t, None)
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({t: c * other for t, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Term, int] = {}
        for t, c in self._terms.items():
            for u, d in other._terms.items():
                tu = term_mul(t, u)
                acc[tu] = acc.get(tu, 0) + c * d
        return Polynomial._raw({t: c for t, c in acc.items() if c})

    __rmul__ = __mul__

    def mul_term(self, u: Term, c: int = 1) -> Polynomial:
        """``c * u * self`` for a term ``u``."""
        if not c:
            return Polynomial()
        return Polynomial._raw({term_mul(t, u): c * d for t, d in self._terms.items()})

    def without(self, terms: Iterable[Term]) -> Polynomial:
        drop = set(terms)
        return Polynomial._raw({t: c for t, c in self._terms.items() if t not in drop})

    def variables(self) -> set[Cell]:
        return {cell for t in self._terms for cell in t}

    def degree(self) -> int:
        return max((len(t) for t in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({len(t) for t in self._terms}) <= 1

    # order-dependent views

    def sorted_terms(self, order: TermOrder) -> list[tuple[Term, int]]:
        """Terms in descending order under ``order``."""
        key = order.key
        return sorted(self._terms.items(), key=lambda tc: key(tc[0]), reverse=True)

    def leading_term(self, order: TermOrder) -> Term:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> int:
        return self._terms[self.leading_term(order)]

    def format(self, order: TermOrder | None = None) -> str:
        """Canonical text, e.g. ``-x[1,2]*x[2,1]*x[3,3] + x[1,3]*x[2,1]*x[3,2]``."""
        if not self._terms:
            return "0"
        if order is None:
            items = sorted(self._terms.items(), reverse=True)
        else:
            items = self.sorted_terms(order)
        out = []
        for k, (t, c) in enumerate(items):
            mag = abs(c)
            body = format_term(t) if mag == 1 else (f"{mag}" if not t else f"{mag}*{format_term(t)}")
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"

    def to_json(self) -> list:
        return [[[list(cell) for cell in t], c] for t, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> Polynomial:
        return cls((tuple((int(a), int(b)) for a, b in t), int(c)) for t, c in data)


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR_RE = re.compile(r"x\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\^(\d+))?$")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :meth:`Polynomial.format`."""
    s = text.strip()
    if s == "0":
        return Polynomial()
    acc: dict[Term, int] = {}
    for sign, body in _TERM_RE.findall(s):
        body = body.strip()
        if not body:
            continue
        coeff = -1 if sign == "-" else 1
        cells: list[Cell] = []
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            e = int(m.group(3) or 1)
            cells.extend([(int(m.group(1)), int(m.group(2)))] * e)
        t = make_term(cells)
        acc[t] = acc.get(t, 0) + coeff
    return Polynomial(acc)
