"""Tests for univariate polynomial arithmetic, resultants, and the
Vandermonde solve."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tschirn.fields import QQ, MathDomainError, PrimeField, gf_build
from tschirn.poly import (
    RootTuple,
    UniPoly,
    elementary_symmetric,
    lagrange_interpolate,
    linear_solve,
    poly_compose_scale,
    poly_discriminant,
    poly_eval,
    poly_format,
    poly_gcd,
    poly_parse,
    poly_resultant,
    poly_squarefree_part,
    vandermonde_solve,
)

rats = st.fractions(
    min_value=-20, max_value=20, max_denominator=6
)


def qpoly(*coeffs) -> UniPoly:
    return UniPoly(QQ, coeffs)


# ------------------------------------------------------------------ basics


class TestUniPolyBasics:
    def test_trailing_zeros_stripped(self):
        assert qpoly(1, 2, 0, 0).degree == 1

    def test_zero_poly(self):
        z = UniPoly.zero(QQ)
        assert not z
        assert z.degree == -1

    def test_ring_ops(self):
        f = qpoly(1, 1)  # X + 1
        g = qpoly(-1, 1)  # X - 1
        assert f * g == qpoly(-1, 0, 1)
        assert f + g == qpoly(0, 2)
        assert f - f == UniPoly.zero(QQ)
        assert (f * g)[2] == 1

    def test_scalar_mixing(self):
        f = qpoly(1, 2)
        assert 2 * f == qpoly(2, 4)
        assert f * Fraction(1, 2) == qpoly(Fraction(1, 2), 1)
        assert f + 1 == qpoly(2, 2)
        assert 1 - f == qpoly(0, -2)
        assert f / 2 == qpoly(Fraction(1, 2), 1)

    def test_divmod_exact(self):
        f = qpoly(-1, 0, 0, 1)  # X^3 - 1
        g = qpoly(-1, 1)  # X - 1
        q, r = divmod(f, g)
        assert r == UniPoly.zero(QQ)
        assert q == qpoly(1, 1, 1)
        assert q * g + r == f

    def test_divmod_remainder(self):
        f = qpoly(2, 3, 0, 1)  # X^3 + 3X + 2
        g = qpoly(3, -1, 1)  # X^2 - X + 3
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_eval_and_compose(self):
        f = qpoly(2, 3, 0, 1)
        assert f.eval(Fraction(1)) == 6
        assert poly_eval(f, Fraction(-2)) == -12
        g = qpoly(1, 1)  # X + 1
        assert f.compose(g).eval(QQ(0)) == f.eval(QQ(1))

    def test_from_roots(self):
        f = UniPoly.from_roots(QQ, [1, 2, 3])
        assert f == qpoly(-6, 11, -6, 1)

    def test_pow(self):
        assert qpoly(1, 1) ** 3 == qpoly(1, 3, 3, 1)

    def test_monic_derivative(self):
        f = qpoly(2, 0, 4)
        assert f.monic() == qpoly(Fraction(1, 2), 0, 1)
        assert f.derivative() == qpoly(0, 8)

    def test_over_fp(self):
        F = PrimeField(5)
        f = UniPoly(F, [1, 0, 1])
        g = UniPoly(F, [2, 1])  # X + 2
        assert f % g == UniPoly.zero(F)  # X^2+1 = (X+2)(X+3) over F_5


class TestTextFormat:
    def test_parse_example(self):
        f = poly_parse("2,3,0,1")
        assert f == qpoly(2, 3, 0, 1)  # X^3 + 3X + 2

    def test_rational_coeffs(self):
        f = poly_parse("-1/2,0,1")
        assert f[0] == Fraction(-1, 2)

    def test_round_trip(self):
        f = qpoly(Fraction(3, 4), -2, 0, 1)
        assert poly_parse(poly_format(f)) == f

    def test_zero(self):
        assert poly_format(UniPoly.zero(QQ)) == "0"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            poly_parse(" ")


# -------------------------------------------------------------- resultants


class TestResultant:
    def test_shared_roots(self):
        f = qpoly(-1, 0, 1)
        assert poly_resultant(f, f) == 0

    def test_evaluation(self):
        # Res(X^2 - 1, X - 2) = 2^2 - 1 = 3
        assert poly_resultant(qpoly(-1, 0, 1), qpoly(-2, 1)) == 3

    def test_resultant_in_second_variable(self):
        # Res_X(X^3 + 3X + 2, y - (3 - X + X^2)), interpolated as a monic
        # cubic in y, is y^3 - 3y^2 - 3y - 3.
        f = qpoly(2, 3, 0, 1)
        pts = []
        for y in range(4):
            g = qpoly(QQ(y) - 3, 1, -1)  # (y - 3) + X - X^2
            pts.append((QQ(y), poly_resultant(f, g)))
        res_poly = lagrange_interpolate(QQ, pts)
        assert res_poly == qpoly(-3, -3, -3, 1)

    def test_mixed_fields_rejected(self):
        with pytest.raises(TypeError):
            poly_resultant(qpoly(1, 1), UniPoly(PrimeField(5), [1, 1]))

    def test_zero_first_argument_rejected(self):
        with pytest.raises(ValueError):
            poly_resultant(UniPoly.zero(QQ), qpoly(1, 1))

    @given(
        st.lists(rats, min_size=2, max_size=4),
        st.lists(rats, min_size=2, max_size=4),
    )
    @settings(max_examples=50)
    def test_root_product_formula(self, roots_f, roots_g):
        # With split polynomials, Res(f,g) = Π_i Π_j (α_i − β_j).
        f = UniPoly.from_roots(QQ, roots_f)
        g = UniPoly.from_roots(QQ, roots_g)
        expect = QQ.one
        for a in roots_f:
            for b in roots_g:
                expect *= a - b
        assert poly_resultant(f, g) == expect

    @given(
        st.lists(rats, min_size=1, max_size=4),
        st.lists(rats, min_size=1, max_size=4),
    )
    @settings(max_examples=50)
    def test_antisymmetry(self, roots_f, roots_g):
        f = UniPoly.from_roots(QQ, roots_f)
        g = UniPoly.from_roots(QQ, roots_g)
        sign = (-1) ** (f.degree * g.degree)
        assert poly_resultant(f, g) == sign * poly_resultant(g, f)


class TestDiscriminant:
    def test_depressed_cubic_family(self):
        # Disc(X^3 + aX + a) = -a^2 (4a + 27); at a = -7 this is 49.
        a = QQ(-7)
        f = qpoly(a, a, 0, 1)
        assert poly_discriminant(f) == -(a**2) * (4 * a + 27) == 49

    def test_shanks_m_minus_one(self):
        # X^3 + X^2 - 2X - 1 has discriminant (m^2+3m+9)^2 = 49 at m = -1.
        f = qpoly(-1, -2, 1, 1)
        assert poly_discriminant(f) == 49

    def test_split_cubic(self):
        f = UniPoly.from_roots(QQ, [1, 2, 3])
        assert poly_discriminant(f) == 4

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            poly_discriminant(qpoly(1, 1))

    def test_char3_root_product(self):
        # Disc via the resultant route still matches Π (α_i − α_j)^2 in
        # characteristic 3.
        K = gf_build(3, 3, 0)
        roots = [K(0), K(1), K.gen()]
        f = UniPoly.from_roots(K, roots)
        expect = K.one
        for i in range(3):
            for j in range(i + 1, 3):
                expect *= (roots[i] - roots[j]) ** 2
        assert poly_discriminant(f) == expect

    @given(
        st.lists(rats, min_size=2, max_size=3, unique=True),
        st.lists(rats, min_size=2, max_size=3, unique=True),
    )
    @settings(max_examples=40)
    def test_product_rule(self, roots_f, roots_g):
        # Disc(fg) = Disc(f) Disc(g) Res(f,g)^2 for coprime f, g.
        if set(roots_f) & set(roots_g):
            return
        f = UniPoly.from_roots(QQ, roots_f)
        g = UniPoly.from_roots(QQ, roots_g)
        lhs = poly_discriminant(f * g)
        rhs = (
            poly_discriminant(f)
            * poly_discriminant(g)
            * poly_resultant(f, g) ** 2
        )
        assert lhs == rhs


# -------------------------------------------------------- gcd / squarefree


def test_gcd():
    f = qpoly(-1, 0, 1)  # (X-1)(X+1)
    g = qpoly(-1, 1)
    assert poly_gcd(f, g) == g
    assert poly_gcd(f, qpoly(7)) == UniPoly.one(QQ)


def test_squarefree_part():
    f = UniPoly.from_roots(QQ, [1, 1, -2])
    assert poly_squarefree_part(f) == UniPoly.from_roots(QQ, [1, -2])


def test_compose_scale():
    f = qpoly(2, 3, 0, 1)  # X^3 + 3X + 2
    g = poly_compose_scale(f, QQ(2))
    assert g == qpoly(2, 6, 0, 8)  # 8X^3 + 6X + 2
    h = poly_compose_scale(f, QQ(2), normalize=True)
    assert h.lc == 1 and h == g / 8
    with pytest.raises(MathDomainError):
        poly_compose_scale(f, QQ(0), normalize=True)


# ------------------------------------------------------------- vandermonde


class TestVandermondeSolve:
    def test_identity_transformation(self):
        rt = RootTuple(
            xs=(QQ(1), QQ(2), QQ(5)), ys=(QQ(1), QQ(2), QQ(5))
        )
        assert vandermonde_solve(rt, (0, 1, 2)) == (QQ(0), QQ(1), QQ(0))

    def test_square_plus_one(self):
        rt = RootTuple(xs=(QQ(0), QQ(1), QQ(2)), ys=(QQ(1), QQ(2), QQ(5)))
        assert vandermonde_solve(rt, (0, 1, 2)) == (QQ(1), QQ(0), QQ(1))

    def test_repeated_xs_rejected(self):
        with pytest.raises(MathDomainError):
            RootTuple(xs=(QQ(1), QQ(1), QQ(2)), ys=(QQ(1), QQ(2), QQ(3)))

    def test_bad_permutation(self):
        rt = RootTuple(xs=(QQ(0), QQ(1), QQ(2)), ys=(QQ(1), QQ(2), QQ(5)))
        with pytest.raises(ValueError):
            vandermonde_solve(rt, (0, 0, 2))

    def test_length_bounds(self):
        with pytest.raises(ValueError):
            RootTuple(xs=(QQ(1),), ys=(QQ(2),))

    @given(
        st.lists(rats, min_size=3, max_size=3, unique=True),
        st.lists(rats, min_size=3, max_size=3, unique=True),
    )
    @settings(max_examples=30)
    def test_reconstruction_all_permutations(self, xs, ys):
        rt = RootTuple(xs=tuple(xs), ys=tuple(ys))
        for tau in permutations(range(3)):
            u = vandermonde_solve(rt, tau)
            for i in range(3):
                assert sum(u[j] * xs[i] ** j for j in range(3)) == ys[tau[i]]

    def test_stabilizer_relabeling(self):
        # Relabeling xs by σ while composing τ with σ leaves u unchanged.
        xs = (QQ(1), QQ(3), QQ(-2))
        ys = (QQ(2), QQ(5), QQ(7))
        tau = (2, 0, 1)
        u = vandermonde_solve(RootTuple(xs=xs, ys=ys), tau)
        for sigma in permutations(range(3)):
            xs_s = tuple(xs[sigma[i]] for i in range(3))
            tau_s = tuple(tau[sigma[i]] for i in range(3))
            assert vandermonde_solve(RootTuple(xs=xs_s, ys=ys), tau_s) == u

    def test_over_gf27(self):
        K = gf_build(3, 3, 0)
        x = K.gen()
        xs = (K(1), x, x**2)
        ys = (x + 1, x**2 + 2, K(2))
        rt = RootTuple(xs=xs, ys=ys)
        u = vandermonde_solve(rt, (1, 2, 0))
        for i in range(3):
            assert u[0] + u[1] * xs[i] + u[2] * xs[i] ** 2 == ys[(1, 2, 0)[i]]


def test_linear_solve_singular():
    with pytest.raises(MathDomainError):
        linear_solve(QQ, [[1, 2], [2, 4]], [1, 2])


def test_lagrange_interpolate():
    pts = [(QQ(0), QQ(1)), (QQ(1), QQ(2)), (QQ(2), QQ(5))]
    assert lagrange_interpolate(QQ, pts) == qpoly(1, 0, 1)
    with pytest.raises(MathDomainError):
        lagrange_interpolate(QQ, [(QQ(1), QQ(1)), (QQ(1), QQ(2))])


def test_elementary_symmetric():
    assert elementary_symmetric((QQ(1), QQ(2), QQ(3))) == (6, 11, 6)
