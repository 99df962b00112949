import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from detgb.minor_term import Minor, expand_minor
from detgb.oracle import (
    NonUnitLeadingCoefficient, ScaleError, groebner_failures, inter_reduce, is_groebner,
    is_minimal_gb, is_reduced_gb, laplace_expand, normal_form, normalize_sign, reduce_once,
    s_polynomial,
)
from detgb.permutation import Permutation, all_permutations
from detgb.polynomial import Polynomial, make_term, parse_polynomial, term_divides
from detgb.schubert import elusive_minors, fulton_generators, reduced_gb_schubert
from detgb.term_order import TermOrder

NEW4 = TermOrder.scanning("NEW", 4)
NEW5 = TermOrder.scanning("NEW", 5)
W2143 = Permutation((2, 1, 4, 3))
M4 = Minor((1, 2, 3, 4), (1, 2, 3, 4))
M2 = Minor((2, 3), (1, 2))

minor_st = st.integers(1, 3).flatmap(lambda r: st.tuples(
    st.lists(st.integers(1, 5), min_size=r, max_size=r, unique=True).map(sorted),
    st.lists(st.integers(1, 5), min_size=r, max_size=r, unique=True).map(sorted),
)).map(lambda rc: Minor(tuple(rc[0]), tuple(rc[1])))


class TestReduceOnce:
    def test_trivial(self):
        P = parse_polynomial("x[1,1]*x[2,2]")
        assert reduce_once(P, parse_polynomial("x[1,1]"), ((1, 1), (2, 2)), NEW4) == Polynomial()

    def test_one_step_removes_two_terms(self):
        P = expand_minor(M4)
        t = make_term([(1, 3), (2, 2), (3, 1), (4, 4)])
        out = reduce_once(P, expand_minor(M2), t, NEW4)
        gone = set(P.terms) - set(out.terms)
        assert gone == {t, make_term([(1, 3), (2, 1), (3, 2), (4, 4)])}
        assert set(out.terms) < set(P.terms)

    def test_errors(self):
        P = parse_polynomial("x[1,1]*x[2,2]")
        with pytest.raises(ValueError):
            reduce_once(P, parse_polynomial("x[3,3]"), ((1, 1), (2, 2)), NEW4)
        with pytest.raises(ValueError):
            reduce_once(P, parse_polynomial("x[1,1]"), ((1, 1),), NEW4)
        with pytest.raises(NonUnitLeadingCoefficient):
            reduce_once(P, parse_polynomial("2*x[1,1]"), ((1, 1), (2, 2)), NEW4)

    @given(minor_st, minor_st)
    def test_lowers_the_term(self, a, b):
        P, Q = expand_minor(a), expand_minor(b)
        lt = Q.leading_term(NEW5)
        for t in P.terms:
            if term_divides(lt, t):
                out = reduce_once(P, Q, t, NEW5)
                assert t not in out
                new = set(out.terms) - set(P.terms)
                assert all(NEW5.key(u) < NEW5.key(t) for u in new)


class TestNormalForm:
    def test_2143_cubic(self):
        nf = normal_form(expand_minor(Minor((1, 2, 3), (1, 2, 3))), [parse_polynomial("x[1,1]")], NEW4)
        assert nf == parse_polynomial(
            "-x[1,2]*x[2,1]*x[3,3] + x[1,2]*x[2,3]*x[3,1] + x[1,3]*x[2,1]*x[3,2] - x[1,3]*x[2,2]*x[3,1]")

    def test_reduced_is_fixed(self):
        P = parse_polynomial("x[1,2] + x[2,1]")
        assert normal_form(P, [parse_polynomial("x[3,3]")], NEW4) == P

    def test_members_reduce_to_zero(self):
        G = [e.poly for e in reduced_gb_schubert(W2143, NEW4)]
        P = G[0] * parse_polynomial("x[4,4] - x[2,2]") + G[1] * parse_polynomial("x[1,4]")
        assert normal_form(P, G, NEW4) == Polynomial()

    def test_confluence_under_random_strategies(self):
        rng = random.Random(11)
        for w in random.Random(1).sample(list(all_permutations(5)), 25):
            G = [e.poly for e in reduced_gb_schubert(w, NEW5)]
            for _ in range(3):
                P = Polynomial()
                for g in G:
                    P = P + g * Polynomial.monomial([(rng.randint(1, 5), rng.randint(1, 5))])
                P = P + expand_minor(Minor((1, 2), (rng.randint(1, 2), rng.randint(3, 5))))
                assert normal_form(P, G, NEW5) == normal_form(P, G, NEW5, rng=rng)


class TestSPolynomial:
    def test_self(self):
        F = expand_minor(M2)
        assert s_polynomial(F, F, NEW4) == Polynomial()

    def test_coprime_reduces_to_zero(self):
        F = expand_minor(Minor((1, 2), (1, 2)))
        G = expand_minor(Minor((3, 4), (3, 4)))
        assert normal_form(s_polynomial(F, G, NEW4), [F, G], NEW4) == Polynomial()

    @given(minor_st, minor_st)
    def test_matches_definition(self, a, b):
        F, G = expand_minor(a), expand_minor(b)
        lf, lg = F.leading_term(NEW5), G.leading_term(NEW5)
        L = make_term(set(lf) | set(lg))  # multilinear leading terms: lcm is the union
        u, v = tuple(c for c in L if c not in lf), tuple(c for c in L if c not in lg)
        expected = (F * Polynomial.monomial(u)) * G.leading_coefficient(NEW5) \
            - (G * Polynomial.monomial(v)) * F.leading_coefficient(NEW5)
        assert s_polynomial(F, G, NEW5) == expected


class TestGroebnerChecks:
    def test_fulton_2143(self):
        fulton = [expand_minor(g.minor) for g in fulton_generators(W2143)]
        assert is_groebner(fulton, NEW4)
        assert not is_groebner(fulton, TermOrder.scanning("NWE", 4))
        assert groebner_failures(fulton, TermOrder.scanning("NWE", 4)) == [(0, 1)]

    def test_singleton(self):
        assert is_groebner([expand_minor(M4)], NEW4)

    def test_scale_guard(self, monkeypatch):
        G = [Polynomial.variable(i, j) for i in range(1, 9) for j in range(1, 9)]
        with pytest.raises(ScaleError):
            is_groebner(G, TermOrder.scanning("NEW", 8))
        assert is_groebner(G, TermOrder.scanning("NEW", 8), max_polys=64, max_vars=64)
        monkeypatch.setenv("DETGB_MAX_SCALE", "64")
        assert is_groebner(G, TermOrder.scanning("NEW", 8))

    def test_minimal_and_reduced(self):
        G = [expand_minor(g.minor) for g in elusive_minors(W2143)]
        assert is_minimal_gb(G, NEW4, verify=True)
        assert not is_reduced_gb(G, NEW4)
        for w in all_permutations(4):
            H = [e.poly for e in reduced_gb_schubert(w, NEW4)]
            assert is_reduced_gb(H, NEW4, verify=True)

    def test_verify_rejects_non_basis(self):
        fulton = [expand_minor(g.minor) for g in fulton_generators(W2143)]
        with pytest.raises(ValueError):
            is_minimal_gb(fulton, TermOrder.scanning("NWE", 4), verify=True)

    def test_not_minimal(self):
        G = [parse_polynomial("x[1,1]"), parse_polynomial("x[1,1]*x[2,2]")]
        assert not is_minimal_gb(G, NEW4)


class TestInterReduce:
    def test_2143(self):
        G = [expand_minor(g.minor) for g in elusive_minors(W2143)]
        assert set(inter_reduce(G, NEW4)) == {e.poly for e in reduced_gb_schubert(W2143, NEW4)}

    def test_idempotent_and_order_independent(self):
        rng = random.Random(2)
        for w in rng.sample(list(all_permutations(5)), 30):
            G = [expand_minor(g.minor) for g in elusive_minors(w)]
            once = inter_reduce(G, NEW5)
            assert inter_reduce(once, NEW5) == once
            shuffled = G[:]
            rng.shuffle(shuffled)
            assert inter_reduce(shuffled, NEW5) == once

    def test_normalize_sign(self):
        P = expand_minor(Minor((1, 2), (1, 2)))  # anti-diagonal lead has coefficient -1
        assert P.leading_coefficient(NEW4) == -1
        assert normalize_sign(P, NEW4) == -P


class TestLaplace:
    def test_all_rows(self):
        out = laplace_expand(M2, M2.rows)
        assert len(out) == 1 and out[0][1] == M2 and out[0][2] is None

    def test_two_by_two(self):
        out = laplace_expand(Minor((1, 2), (1, 2)), [1])
        assert [(s, a, b) for s, a, b in out] == [
            (1, Minor.single(1, 1), Minor.single(2, 2)), (-1, Minor.single(1, 2), Minor.single(2, 1))]

    def test_four_by_four(self):
        out = laplace_expand(M4, [2, 3])
        assert len(out) == 6
        total = sum((expand_minor(a) * expand_minor(b) * s for s, a, b in out), Polynomial())
        assert total == expand_minor(M4)

    def test_invalid(self):
        with pytest.raises(ValueError):
            laplace_expand(M2, [1])
        with pytest.raises(ValueError):
            laplace_expand(M2, [])

    def test_exhaustive_5x5(self):
        idx = range(1, 6)
        for r in range(2, 5):
            for rows, cols in itertools.product(itertools.combinations(idx, r), repeat=2):
                m = Minor(rows, cols)
                for k in range(1, r + 1):
                    for sub in itertools.combinations(rows, k):
                        laplace_expand(m, sub)  # the identity is asserted internally

    @settings(max_examples=30)
    @given(minor_st, st.data())
    def test_identity_explicit(self, m, data):
        sub = data.draw(st.lists(st.sampled_from(m.rows), min_size=1, unique=True))
        total = Polynomial()
        for s, a, b in laplace_expand(m, sub):
            total = total + (expand_minor(a) if b is None else expand_minor(a) * expand_minor(b)) * s
        assert total == expand_minor(m)
