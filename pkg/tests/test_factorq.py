"""Tests for factorization over Q and F_p, rational roots, square testing."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tschirn.fields import QQ, PrimeField
from tschirn.poly import UniPoly, poly_eval
from tschirn.factorq import (
    Factorization,
    factor_over_Fp,
    factor_over_Q,
    is_square_rat,
    rational_roots,
)


def qpoly(*coeffs) -> UniPoly:
    return UniPoly(QQ, coeffs)


small_rats = st.fractions(min_value=-9, max_value=9, max_denominator=4)


# ------------------------------------------------------------------- F_p


class TestFactorOverFp:
    def test_split_quadratic_f5(self):
        F = PrimeField(5)
        fac = factor_over_Fp(UniPoly(F, [1, 0, 1]))
        assert fac.unit == F.one
        assert [g.coeffs for g, m in fac.factors] == [(F(2), F(1)), (F(3), F(1))]
        assert all(m == 1 for _, m in fac.factors)

    def test_irreducible_cubic_f2(self):
        F = PrimeField(2)
        f = UniPoly(F, [1, 1, 0, 1])
        fac = factor_over_Fp(f)
        assert fac.factors == ((f, 1),)

    def test_f2_full_split(self):
        F = PrimeField(2)
        # X^6 + X^5 + X^3 + X^2 = X^2 (X+1)^2 (X^2+X+1)
        f = (
            UniPoly(F, [0, 1]) ** 2
            * UniPoly(F, [1, 1]) ** 2
            * UniPoly(F, [1, 1, 1])
        )
        fac = factor_over_Fp(f)
        assert fac.degree_pattern() == (1, 1, 1, 1, 2)
        assert fac.expand() == f

    def test_pth_power_branch(self):
        F = PrimeField(3)
        # X^6 + 1 = (X^2 + 1)^3 over F_3 (derivative vanishes identically).
        f = UniPoly(F, [1, 0, 0, 0, 0, 0, 1])
        fac = factor_over_Fp(f)
        assert fac.factors == ((UniPoly(F, [1, 0, 1]), 3),)

    def test_unit_tracked(self):
        F = PrimeField(7)
        f = UniPoly(F, [3, 0, 3])  # 3(X^2 + 1); X^2+1 splits mod 7? -1 is not QR
        fac = factor_over_Fp(f)
        assert fac.unit == F(3)
        assert fac.expand() == f

    def test_deterministic(self):
        F = PrimeField(11)
        f = UniPoly(F, [5, 3, 0, 2, 0, 0, 1])
        assert factor_over_Fp(f) == factor_over_Fp(f)

    @given(st.lists(st.integers(0, 6), min_size=6, max_size=6))
    @settings(max_examples=60)
    def test_reexpansion_random_sextic_f7(self, coeffs):
        F = PrimeField(7)
        f = UniPoly(F, coeffs + [1])
        fac = factor_over_Fp(f)
        assert fac.expand() == f
        for g, _ in fac.factors:
            assert g.lc == F.one

    def test_rejects_zero_and_wrong_field(self):
        F = PrimeField(5)
        with pytest.raises(ValueError):
            factor_over_Fp(UniPoly.zero(F))
        with pytest.raises(TypeError):
            factor_over_Fp(qpoly(1, 1))


# --------------------------------------------------------------------- Q


class TestFactorOverQ:
    def test_difference_of_squares(self):
        fac = factor_over_Q(qpoly(-1, 0, 1))
        assert fac.unit == 1
        assert fac.factors == ((qpoly(-1, 1), 1), (qpoly(1, 1), 1))

    def test_displayed_sextic_with_double_root(self):
        # (X + 1/2)^2 (X - 1) (X^3 - (3/4)X - 3/4)
        half = Fraction(1, 2)
        cubic = qpoly(Fraction(-3, 4), Fraction(-3, 4), 0, 1)
        f = qpoly(half, 1) ** 2 * qpoly(-1, 1) * cubic
        fac = factor_over_Q(f)
        assert dict(fac.factors) == {
            qpoly(half, 1): 2,
            qpoly(-1, 1): 1,
            cubic: 1,
        }

    def test_displayed_sextic_with_cubic_over_7(self):
        # (X - 1)^2 (X + 2) (X^3 - 3X - 13/7)
        cubic = qpoly(Fraction(-13, 7), -3, 0, 1)
        f = qpoly(-1, 1) ** 2 * qpoly(2, 1) * cubic
        fac = factor_over_Q(f)
        assert dict(fac.factors) == {qpoly(-1, 1): 2, qpoly(2, 1): 1, cubic: 1}

    def test_cyclotomic_sextics(self):
        # X^6 - 1 = (X-1)(X+1)(X^2+X+1)(X^2-X+1)
        fac = factor_over_Q(qpoly(-1, 0, 0, 0, 0, 0, 1))
        assert fac.degree_pattern() == (1, 1, 2, 2)
        # Phi_7 is irreducible of degree 6.
        phi7 = qpoly(1, 1, 1, 1, 1, 1, 1)
        assert factor_over_Q(phi7).factors == ((phi7, 1),)

    def test_recombination_needed(self):
        # X^4 + 1 is irreducible over Q but splits modulo every prime, so
        # the subset-recombination step must reassemble it.
        f = qpoly(1, 0, 0, 0, 1)
        assert factor_over_Q(f).factors == ((f, 1),)

    def test_recombination_two_quadratics(self):
        f = qpoly(-2, 0, 1) * qpoly(-3, 0, 1) * qpoly(-6, 0, 1)
        fac = factor_over_Q(f)
        assert dict(fac.factors) == {
            qpoly(-2, 0, 1): 1,
            qpoly(-3, 0, 1): 1,
            qpoly(-6, 0, 1): 1,
        }

    def test_unit_and_denominators(self):
        f = qpoly(Fraction(3, 2), Fraction(3, 2)) * qpoly(-2, 1)
        fac = factor_over_Q(f)
        assert fac.unit == Fraction(3, 2)
        assert fac.expand() == f

    def test_high_multiplicity(self):
        f = qpoly(-1, 1) ** 3 * qpoly(2, 1) ** 2
        fac = factor_over_Q(f)
        assert dict(fac.factors) == {qpoly(-1, 1): 3, qpoly(2, 1): 2}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_over_Q(UniPoly.zero(QQ))

    @given(st.lists(small_rats, min_size=1, max_size=6), small_rats)
    @settings(max_examples=50, deadline=None)
    def test_reexpansion_random(self, coeffs, lead):
        if not lead:
            lead = Fraction(1)
        f = UniPoly(QQ, coeffs + [lead])
        fac = factor_over_Q(f)
        assert fac.expand() == f
        for g, _ in fac.factors:
            assert g.lc == 1

    def test_sympy_cross_check(self):
        # Independent oracle: sympy's factor_list on seeded random sextics.
        rng = random.Random(20260814)
        x = sympy.symbols("x")
        for _ in range(20):
            coeffs = [rng.randint(-8, 8) for _ in range(6)] + [rng.choice([1, 2, 3])]
            f = UniPoly(QQ, coeffs)
            ours = factor_over_Q(f)
            expr = sum(c * x**i for i, c in enumerate(coeffs))
            _, sym_factors = sympy.factor_list(expr)
            sym_set = {}
            for g, m in sym_factors:
                gp = sympy.Poly(g, x)
                cs = [Fraction(int(c)) for c in reversed(gp.all_coeffs())]
                mono = UniPoly(QQ, cs).monic()
                sym_set[mono] = sym_set.get(mono, 0) + m
            assert dict(ours.factors) == sym_set, f"mismatch for {coeffs}"

    def test_degree_pattern_refines_mod_p(self):
        # At a good prime, factoring each rational irreducible factor mod p
        # reproduces exactly the degree pattern of f mod p: the rational
        # pattern is a coarsening of every good-prime pattern.
        from tschirn.poly import poly_gcd

        rng = random.Random(99)
        checked = 0
        while checked < 8:
            coeffs = [rng.randint(-9, 9) for _ in range(6)] + [1]
            f = UniPoly(QQ, coeffs)
            fac = factor_over_Q(f)
            if any(m > 1 for _, m in fac.factors):
                continue  # want squarefree f so good primes exist
            checked += 1
            good_primes = []
            p = 5
            while len(good_primes) < 3:
                if p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
                    F = PrimeField(p)
                    fp = UniPoly(F, coeffs)
                    if poly_gcd(fp, fp.derivative()).degree == 0:
                        good_primes.append((F, fp))
                p += 2
            for F, fp in good_primes:
                direct = factor_over_Fp(fp).degree_pattern()
                refined = []
                for g, _ in fac.factors:
                    gp = UniPoly(F, [int(c) for c in g.coeffs])
                    refined.extend(factor_over_Fp(gp).degree_pattern())
                assert tuple(sorted(refined)) == direct


# ----------------------------------------------------- roots and squares


class TestRationalRoots:
    def test_half_roots(self):
        assert rational_roots(qpoly(Fraction(-1, 4), 0, 1)) == [
            Fraction(-1, 2),
            Fraction(1, 2),
        ]

    def test_multiplicity(self):
        f = qpoly(-1, 1) ** 2 * qpoly(1, 0, 1)
        assert rational_roots(f) == [1, 1]

    def test_no_roots(self):
        assert rational_roots(qpoly(1, 0, 1)) == []

    def test_roots_actually_vanish(self):
        f = qpoly(-6, 11, -6, 1) * qpoly(5, 0, 1)
        for r in rational_roots(f):
            assert poly_eval(f, r) == 0

    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_completeness_against_divisor_candidates(self, coeffs):
        f = UniPoly(QQ, coeffs + [1])
        found = set(rational_roots(f))
        # Monic integer polynomial: any rational root is an integer dividing
        # the constant term.
        c0 = f.coeffs[0]
        assert all(r.denominator == 1 for r in found)
        candidates = set()
        c0n = abs(int(c0))
        if c0n == 0:
            candidates.add(Fraction(0))
            nonzero = [c for c in f.coeffs if c]
            c0n = abs(int(nonzero[0])) if nonzero[0].denominator == 1 else 0
        for d in range(1, c0n + 1):
            if c0n % d == 0:
                candidates.add(Fraction(d))
                candidates.add(Fraction(-d))
        brute = {r for r in candidates if poly_eval(f, r) == 0}
        # every brute-force root is reported, and nothing false is reported
        assert brute <= set(found)
        assert all(poly_eval(f, r) == 0 for r in found)


class TestIsSquareRat:
    def test_perfect_square(self):
        assert is_square_rat(Fraction(49)) == 7

    def test_negative(self):
        assert is_square_rat(Fraction(-216)) is None

    def test_fraction(self):
        assert is_square_rat(Fraction(4, 9)) == Fraction(2, 3)

    def test_zero(self):
        assert is_square_rat(Fraction(0)) == 0

    def test_non_square(self):
        assert is_square_rat(Fraction(8)) is None
        assert is_square_rat(Fraction(49, 2)) is None

    @given(small_rats)
    def test_square_round_trip(self, r):
        s = is_square_rat(r * r)
        assert s == abs(r)


def test_factorization_expand_empty():
    fac = Factorization(Fraction(5), ())
    assert fac.expand() == UniPoly(QQ, [5])
