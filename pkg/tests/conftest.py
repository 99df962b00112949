"""Shared reference implementations and fixtures.

The helpers here deliberately avoid the library's own shortcuts so that they
can serve as independent oracles: determinants by cofactor expansion, Rothe
diagrams by hook removal, monotone subsequences by brute force.
"""

from __future__ import annotations

import itertools
import random

import pytest

from detgb.block import Block
from detgb.polynomial import Polynomial


def cofactor_det(rows, cols) -> Polynomial:
    """Determinant of X[rows, cols] by expansion along the first row."""
    rows, cols = list(rows), list(cols)
    if len(rows) == 1:
        return Polynomial.variable(rows[0], cols[0])
    total = Polynomial()
    for k, c in enumerate(cols):
        sub = cofactor_det(rows[1:], cols[:k] + cols[k + 1:])
        term = Polynomial.variable(rows[0], c) * sub
        total = total + (term if k % 2 == 0 else -term)
    return total


def hook_rothe(word) -> set:
    """Rothe diagram by deleting each (i, w_i) with its east arm and south leg."""
    n = len(word)
    alive = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    for i, wi in enumerate(word, 1):
        alive -= {(i, j) for j in range(wi, n + 1)}
        alive -= {(k, wi) for k in range(i, n + 1)}
    return alive


def brute_monotone(seq, decreasing: bool) -> int:
    best = 0
    for k in range(len(seq), 0, -1):
        for sub in itertools.combinations(seq, k):
            pairs = zip(sub, sub[1:])
            if all((a > b) if decreasing else (a < b) for a, b in pairs):
                return k
    return best


def random_diagonal_block(rng: random.Random, m: int, n: int) -> Block:
    """Random ladder-shaped cell set, diagonal by construction."""
    k = rng.randint(1, 3)
    u = rng.randint(1, 3)
    lower = sorted(zip(sorted(rng.sample(range(1, m + 1), k)),
                       sorted(rng.sample(range(1, n + 1), k), reverse=True)))
    upper = sorted(zip(sorted(rng.sample(range(1, m + 1), u)),
                       sorted(rng.sample(range(1, n + 1), u), reverse=True)))
    cells = {(p, q) for p in range(1, m + 1) for q in range(1, n + 1)
             if any(p <= a and q <= b for a, b in lower)
             and any(p >= c and q >= d for c, d in upper)}
    return Block(cells)


# Diagonal length figure: a 14 x 17 matrix, a term of degree 5 and two blocks.
FIG_TERM = ((5, 2), (7, 4), (8, 8), (10, 10), (12, 6))


def _rows_block(spec):
    return Block((i, j) for (r1, r2, c1, c2) in spec
                 for i in range(r1, r2 + 1) for j in range(c1, c2 + 1))


FIG_B1 = _rows_block([(1, 2, 8, 17), (3, 3, 4, 17), (4, 7, 4, 15), (8, 14, 1, 15)])
FIG_B2 = _rows_block([(1, 2, 8, 17), (3, 3, 4, 17), (4, 7, 4, 13), (8, 9, 1, 15), (10, 14, 6, 15)])


@pytest.fixture
def rng():
    return random.Random(20240611)


# ---------------------------------------------------------------- acceptance summary

_ACCEPTANCE: list[tuple[str, str, float]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, dur in _ACCEPTANCE:
        terminalreporter.write_line(f"{name}: {'PASS' if outcome == 'passed' else 'FAIL'} ({dur:.2f}s)")


def random_two_sided(rng: random.Random, size: int, u: int, rmax: int):
    """A canonical ``size x size`` ladder with exactly ``u`` upper corners and a size vector.

    Returns ``None`` when the draw is degenerate; callers redraw.
    """
    from detgb.blockwise import Ladder, LadderError, two_sided_generators

    k = rng.randint(1, 3)
    lower = sorted(zip(sorted(rng.sample(range(1, size + 1), k)),
                       sorted(rng.sample(range(1, size + 1), k), reverse=True)))
    lower[-1] = (size, lower[-1][1])
    lower[0] = (lower[0][0], size)
    upper = sorted(zip(sorted(rng.sample(range(1, size + 1), u)),
                       sorted(rng.sample(range(1, size + 1), u), reverse=True)))
    try:
        lad = Ladder.from_cells(Ladder(tuple(lower), tuple(upper)).cells, size, size)
    except LadderError:
        return None
    if len(lad.upper) != u:
        return None
    r = [rng.randint(1, rmax) for _ in range(u)]
    if not all(two_sided_generators(lad, r)):
        return None
    return lad, r
