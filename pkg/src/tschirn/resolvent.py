"""Resolvent constructors for cubic Tschirnhausen theory, plus the
brute-force coset oracle that recomputes every resolvent from explicit
root tuples.

Sign convention used throughout: the parameter triple s = (s1, s2, s3)
encodes the monic cubic

    f3(s; X) = X^3 - s1 X^2 + s2 X - s3,

so the si are the elementary symmetric functions of the roots.  The
associated invariants are

    A = s1^2 - 3 s2,                 B = 2 s1^3 - 9 s1 s2 + 27 s3,
    C = s1^4 - 4 s1^2 s2 + s2^2 + 6 s1 s3,
    D = Disc f3 = s1^2 s2^2 - 4 s2^3 - 4 s1^3 s3 + 18 s1 s2 s3 - 27 s3^2,
    E = s1 s2 - 9 s3,

linked by the identity 4 A^3 - B^2 = 27 D in every characteristic.

For two cubics with root tuples (x_i), (y_i) and a Tschirnhausen
transformation u(X) = u0 + u1 X + u2 X^2 sending x_i to y_{tau(i)}, the
resolvent F_i(s, t; X) is the product of (X - u_i) over all 3! cosets.
F2 and F1 have closed forms; F0 is obtained by transporting the roots of
F2 through the rational recovery map u0(u2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .factorq import factor_over_Q, is_square_rat
from .fields import QQ, MathDomainError, field_of
from .poly import (
    RootTuple,
    UniPoly,
    lagrange_interpolate,
    poly_discriminant,
    poly_gcd,
    poly_resultant,
    vandermonde_solve,
)

# --------------------------------------------------------------------------
# Parameter triples and invariants.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CubicTriple:
    """(a1, a2, a3) encoding f3(a; X) = X^3 - a1 X^2 + a2 X - a3."""

    a1: object
    a2: object
    a3: object

    @property
    def field(self):
        for v in (self.a1, self.a2, self.a3):
            f = field_of(v)
            if f is not QQ:
                return f
        return QQ

    def values(self, field=None):
        field = field or self.field
        return field(self.a1), field(self.a2), field(self.a3)

    def poly(self, field=None) -> UniPoly:
        field = field or self.field
        a1, a2, a3 = self.values(field)
        return UniPoly(field, (-a3, a2, -a1, field.one))

    @classmethod
    def from_poly(cls, f: UniPoly) -> "CubicTriple":
        if f.degree != 3:
            raise ValueError("expected a cubic")
        g = f.monic()
        return cls(-g.coeffs[2], g.coeffs[1], -g.coeffs[0])

    @classmethod
    def from_roots(cls, roots) -> "CubicTriple":
        from .poly import elementary_symmetric

        e1, e2, e3 = elementary_symmetric(roots)
        return cls(e1, e2, e3)

    def as_tuple(self):
        return (self.a1, self.a2, self.a3)


@dataclass(frozen=True)
class CubicInvariants:
    A: object
    B: object
    C: object
    D: object
    E: object


def cubic_invariants(s: CubicTriple, field=None) -> CubicInvariants:
    """A, B, C, D, E of the triple; D is cross-checked against the resultant
    route and the identity 4A^3 - B^2 = 27D is asserted."""
    field = field or s.field
    s1, s2, s3 = s.values(field)
    A = s1**2 - 3 * s2
    B = 2 * s1**3 - 9 * s1 * s2 + 27 * s3
    C = s1**4 - 4 * s1**2 * s2 + s2**2 + 6 * s1 * s3
    D = (
        s1**2 * s2**2
        - 4 * s2**3
        - 4 * s1**3 * s3
        + 18 * s1 * s2 * s3
        - 27 * s3**2
    )
    E = s1 * s2 - 9 * s3
    assert D == poly_discriminant(s.poly(field)), "discriminant routes disagree"
    assert 4 * A**3 - B**2 == 27 * D, "4A^3 - B^2 = 27D violated"
    return CubicInvariants(A, B, C, D, E)


def _common_field(*triples):
    for t in triples:
        f = t.field
        if f is not QQ:
            return f
    return QQ


# --------------------------------------------------------------------------
# Images of cubics under Tschirnhausen transformations.
# --------------------------------------------------------------------------


def tschirn_image(s: CubicTriple, coeffs, field=None) -> CubicTriple:
    """The triple of g(X) = Prod (X - u(alpha_i)) for u = c0 + c1 X + c2 X^2,
    alpha_i the roots of f3(s), computed from the characteristic polynomial
    of the multiplication-by-u(alpha) matrix on the basis 1, alpha, alpha^2."""
    field = field or s.field
    f = s.poly(field)
    u = UniPoly(field, [field(c) for c in coeffs]) % f
    cols = []
    for j in range(3):
        col = (UniPoly(field, [0] * j + [1]) * u) % f
        cols.append([col[i] for i in range(3)])
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[0][0] * m[1][1]
        - m[0][1] * m[1][0]
        + m[0][0] * m[2][2]
        - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return CubicTriple(tr, minors, det)


# --------------------------------------------------------------------------
# The brute-force coset oracle.
# --------------------------------------------------------------------------


def oracle_resolvent(rt: RootTuple, index: int) -> UniPoly:
    """Prod over all n! cosets of (X - u_index), u from the Vandermonde solve.

    This is the defining construction of the resolvents; the closed-form
    F_i are validated against it.
    """
    n = rt.n
    if not 0 <= index < n:
        raise ValueError(f"coefficient index {index} outside 0..{n-1}")
    field = rt.field
    out = UniPoly.one(field)
    for tau in permutations(range(n)):
        u = vandermonde_solve(rt, tau)
        out = out * UniPoly(field, (-u[index], field.one))
    return out


# --------------------------------------------------------------------------
# Closed-form sextic resolvents F2, F1 and the recovery data for F0.
# --------------------------------------------------------------------------


def _require_nonzero(value, name: str):
    if not value:
        raise MathDomainError(f"{name} must be nonzero")
    return value


def resolvent_F2(s: CubicTriple, t: CubicTriple, field=None) -> UniPoly:
    """The sextic whose roots are the quadratic coefficients u2 of the six
    Tschirnhausen transformations from f3(s) to f3(t)."""
    field = field or _common_field(s, t)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    As, Bs, Ds = js.A, js.B, js.D
    At, Bt, Dt = jt.A, jt.B, jt.D
    _require_nonzero(Ds, "D_s = Disc f3(s)")
    return UniPoly(
        field,
        (
            (At**3 * Ds - As**3 * Dt) / Ds**3,
            -(As * At * Bt) / Ds**2,
            (As**2 * At**2) / Ds**2,
            Bt / Ds,
            -(2 * As * At) / Ds,
            field.zero,
            field.one,
        ),
    )


def resolvent_F1(s: CubicTriple, t: CubicTriple, field=None) -> UniPoly:
    """The sextic whose roots are the linear coefficients u1."""
    field = field or _common_field(s, t)
    s1, s2, s3 = s.values(field)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    As, Bs, Cs, Ds = js.A, js.B, js.C, js.D
    At, Bt, Dt = jt.A, jt.B, jt.D
    _require_nonzero(Ds, "D_s = Disc f3(s)")
    w = s1 * s2 - s3
    return UniPoly(
        field,
        (
            (w**2 * At**3 * Ds - Cs**3 * Dt) / Ds**3,
            (w * At * Bt * Cs) / Ds**2,
            (At**2 * Cs**2) / Ds**2,
            -(w * Bt) / Ds,
            -(2 * At * Cs) / Ds,
            field.zero,
            field.one,
        ),
    )


def recovery_polys(s: CubicTriple, t: CubicTriple, field=None):
    """(Q12, D12) as polynomials in u2: the recovery map u1 = Q12/D12."""
    field = field or _common_field(s, t)
    s1, _, _ = s.values(field)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    As, Bs, Ds = js.A, js.B, js.D
    At, Bt = jt.A, jt.B
    q12 = UniPoly(
        field,
        (
            3 * As**2 * Bt,
            -(At * (6 * As**3 - Bs**2 + 2 * As * Bs * s1)),
            field.zero,
            6 * Ds * (As**2 + Bs * s1),
        ),
    )
    d12 = UniPoly(field, (3 * Bs * As * At, field.zero, -9 * Bs * Ds))
    return q12, d12


def recovery_D12_0(s: CubicTriple, t: CubicTriple, field=None):
    """The u2-free denominator D12^0 = 3 B_s (A_s^3 B_t^2 - 27 A_t^3 D_s)^2."""
    field = field or _common_field(s, t)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    return 3 * js.B * (js.A**3 * jt.B**2 - 27 * jt.A**3 * js.D) ** 2


def recovery_h_list(s: CubicTriple, t: CubicTriple, field=None) -> list:
    """Coefficients h_0..h_5 with 1/D12 = (1/D12^0) * sum h_i u2^i mod F2."""
    field = field or _common_field(s, t)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    As, Ds = js.A, js.D
    At, Bt, Dt = jt.A, jt.B, jt.D
    return [
        4 * As**2 * At**2 * (As**3 * Bt**2 + 27 * At**3 * Ds - 27 * Bt**2 * Ds),
        27 * Bt * Ds * (4 * As**3 * At**3 + 9 * At**3 * Ds - 9 * As**3 * Dt),
        -3 * As * At * Ds * (5 * As**3 * Bt**2 + 135 * At**3 * Ds - 54 * Bt**2 * Ds),
        -270 * As**2 * At**2 * Bt * Ds**2,
        9 * Ds**2 * (As**3 * Bt**2 + 27 * At**3 * Ds),
        162 * As * At * Bt * Ds**3,
    ]


def degeneracy_indicator(s: CubicTriple, t: CubicTriple, field=None):
    """A_s^3 B_t^2 - 27 A_t^3 D_s; zero exactly when F2 has multiple roots
    (given B_s D_t != 0), which is also when the recovery map degenerates."""
    field = field or _common_field(s, t)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    return js.A**3 * jt.B**2 - 27 * jt.A**3 * js.D


def _recovery_numerator(s: CubicTriple, t: CubicTriple, field):
    """N(Y) with u0 = N(Y) / (3 D12(Y)) on the roots Y = u2 of F2."""
    s1, s2, _ = s.values(field)
    t1, _, _ = t.values(field)
    q12, d12 = recovery_polys(s, t, field)
    lin = UniPoly(field, (t1, -(s1**2 - 2 * s2)))
    return lin * d12 - s1 * q12, d12


def _sample_points(field, k: int):
    if field.char == 0:
        return [field(i) for i in range(k)]
    pts = []
    for e in field.elements():
        pts.append(e)
        if len(pts) == k:
            return pts
    raise MathDomainError(f"field too small: need {k} interpolation points")


def _transport_block(h: UniPoly, n_poly: UniPoly, d12: UniPoly, field) -> UniPoly:
    """Monic image of the u2-block h under u0 = N/(3 D12), by resultant
    elimination: Res_Y(h, 3 X D12(Y) - N(Y)) / Res_Y(h, 3 D12(Y))."""
    den = poly_resultant(h, 3 * d12)
    if not den:
        raise MathDomainError(
            "transport denominator Res(h, 3*D12) = 0: degenerate pair"
        )
    deg = h.degree
    pts = []
    for x in _sample_points(field, deg + 1):
        num = poly_resultant(h, 3 * x * d12 - n_poly)
        pts.append((x, num / den))
    out = lagrange_interpolate(field, pts)
    assert out.degree == deg and out.lc == field.one
    return out


def resolvent_F0(s: CubicTriple, t: CubicTriple, field=None) -> UniPoly:
    """The sextic whose roots are the constant coefficients u0, computed by
    transporting the roots of F2 through the recovery map.  Raises when the
    pair is degenerate (use resolvent_F0_degenerate)."""
    field = field or _common_field(s, t)
    f2 = resolvent_F2(s, t, field)
    n_poly, d12 = _recovery_numerator(s, t, field)
    return _transport_block(f2, n_poly, d12, field)


def resolvent_F0_degenerate(s: CubicTriple, t: CubicTriple) -> UniPoly:
    """F0 for degenerate pairs over Q: transport each F2-block that avoids
    the vanishing locus of D12; the double root contributes a quadratic
    block parametrized by u1 instead."""
    field = QQ
    s1, s2, _ = s.values(field)
    t1, t2, _ = t.values(field)
    f2 = resolvent_F2(s, t, field)
    n_poly, d12 = _recovery_numerator(s, t, field)
    a_s = cubic_invariants(s, field).A
    out = UniPoly.one(field)
    for h, mult in factor_over_Q(f2).factors:
        if poly_gcd(h, d12).degree == 0:
            out = out * _transport_block(h, n_poly, d12, field) ** mult
            continue
        # h's roots annihilate D12: the double root c of F2.  The fiber over
        # u2 = c is cut out by the trace condition 3 u0 + s1 u1 = t1 - (s1^2
        # - 2 s2) c together with a quadratic in u1 from the middle
        # coefficient of the image cubic.
        if h.degree != 1 or mult != 2:
            raise MathDomainError(
                "unexpected block sharing roots with D12 "
                f"(degree {h.degree}, multiplicity {mult})"
            )
        c = -h.coeffs[0]
        ell = (t1 - (s1**2 - 2 * s2) * c) / 3
        if not s1:
            block = UniPoly(field, (-ell, field.one)) ** 2
        else:
            pts = []
            for u1_val in (QQ(0), QQ(1), QQ(2)):
                u0_val = ell - s1 * u1_val / 3
                img = tschirn_image(s, (u0_val, u1_val, c), field)
                pts.append((u1_val, field(img.a2) - t2))
            q = lagrange_interpolate(field, pts)
            assert q.degree == 2 and q[2] == -a_s / 3
            # substitute u1 = 3(ell - X)/s1 to express the block in u0 = X
            block = q.compose(UniPoly(field, (3 * ell / s1, -3 / s1))).monic()
        out = out * block
    assert out.degree == 6
    return out


def degenerate_f2_blocks(s: CubicTriple, t: CubicTriple, field=None):
    """The closed-form split of F2 on the degenerate locus
    A_s^3 B_t^2 = 27 A_t^3 D_s (requires A_s A_t != 0, whence B_t != 0):

        F2 = (X - r)^2 (X + 2r) (X^3 + pX + q),  r = 3 A_t^2 / (A_s B_t).

    Returns (double_root_factor, simple_factor, cubic_factor).
    """
    field = field or _common_field(s, t)
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    As, At, Bt = js.A, jt.A, jt.B
    _require_nonzero(As * At, "A_s * A_t")
    _require_nonzero(Bt, "B_t")
    if degeneracy_indicator(s, t, field):
        raise MathDomainError(
            "closed-form split needs the degenerate locus "
            "A_s^3 B_t^2 - 27 A_t^3 D_s = 0"
        )
    r = 3 * At**2 / (As * Bt)
    double = UniPoly(field, (-r, field.one))
    simple = UniPoly(field, (2 * r, field.one))
    cubic = UniPoly(
        field,
        (
            -27 * At**3 * (2 * At**3 - Bt**2) / (As**3 * Bt**3),
            -27 * At**4 / (As**2 * Bt**2),
            field.zero,
            field.one,
        ),
    )
    return double, simple, cubic


def resolvent_F2_split(s: CubicTriple, t: CubicTriple):
    """Over Q with D_s D_t a nonzero square: the two cubic factors
    F2(+-) = X^3 - (A_s A_t / D_s) X + (B_t -+ B_s e) / (2 D_s), where
    e = sqrt(D_t / D_s).  Their product is F2."""
    field = QQ
    js = cubic_invariants(s, field)
    jt = cubic_invariants(t, field)
    _require_nonzero(js.D, "D_s")
    _require_nonzero(jt.D, "D_t")
    e = is_square_rat(jt.D / js.D)
    if e is None:
        raise MathDomainError(
            "split form needs D_s * D_t to be a nonzero rational square"
        )
    lin = -(js.A * jt.A) / js.D
    plus = UniPoly(field, ((jt.B - js.B * e) / (2 * js.D), lin, field.zero, field.one))
    minus = UniPoly(field, ((jt.B + js.B * e) / (2 * js.D), lin, field.zero, field.one))
    return plus, minus


# --------------------------------------------------------------------------
# Characteristic-3 displays.
# --------------------------------------------------------------------------


def resolvent_F2_char3(s: CubicTriple, t: CubicTriple, field=None) -> UniPoly:
    """F2 in characteristic 3 (display form; equals the generic F2 mod 3)."""
    field = field or _common_field(s, t)
    if field.char != 3:
        raise MathDomainError("characteristic-3 display needs a char-3 field")
    s1, _, _ = s.values(field)
    t1, _, _ = t.values(field)
    _require_nonzero(s1 * t1, "s1 * t1")
    Ds = cubic_invariants(s, field).D
    Dt = cubic_invariants(t, field).D
    _require_nonzero(Ds, "D_s")
    return UniPoly(
        field,
        (
            (t1**6 * Ds - s1**6 * Dt) / Ds**3,
            s1**2 * t1**5 / Ds**2,
            s1**4 * t1**4 / Ds**2,
            -(t1**3) / Ds,
            s1**2 * t1**2 / Ds,
            field.zero,
            field.one,
        ),
    )


def resolvent_F0_char3_depressed(
    s: CubicTriple, t: CubicTriple, field=None
) -> UniPoly:
    """F0 in characteristic 3 for depressed triples (s1 = t1 = 0)."""
    field = field or _common_field(s, t)
    if field.char != 3:
        raise MathDomainError("characteristic-3 display needs a char-3 field")
    s1, s2, s3 = s.values(field)
    t1, t2, t3 = t.values(field)
    if s1 or t1:
        raise MathDomainError("depressed display needs s1 = t1 = 0")
    _require_nonzero(s2, "s2")
    return UniPoly(
        field,
        (
            (s2**3 * t3**2 - s3**2 * t2**3) / s2**3,
            t2 * t3,
            t2**2,
            t3,
            -t2,
            field.zero,
            field.one,
        ),
    )


def resolvent_G0_char3(s, t, field=None) -> UniPoly:
    """G0(s,t;X) = F0(0,s,-s,0,t,-t;X) in characteristic 3 (one-parameter
    S3 x S3 family); discriminant t^15 / s^3."""
    field = field or field_of(s)
    if field.char != 3:
        raise MathDomainError("characteristic-3 display needs a char-3 field")
    s = field(s)
    t = field(t)
    _require_nonzero(s, "s")
    return resolvent_F0_char3_depressed(
        CubicTriple(field.zero, s, -s), CubicTriple(field.zero, t, -t), field
    )


# --------------------------------------------------------------------------
# One-parameter families (char != 3): H, G2, Shanks cubics, the +- split.
# --------------------------------------------------------------------------


def resolvent_H(a, b) -> UniPoly:
    """H(a,b;X) = a(X^2+9X-3a)^3 - b(X^3-2aX^2-9aX-2a^2-27a)^2, the
    resolvent of the one-parameter family X^3 + aX + a; leading
    coefficient a - b."""
    field = QQ
    a = field(a)
    b = field(b)
    u = UniPoly(field, (-3 * a, 9, 1))
    v = UniPoly(field, (-2 * a**2 - 27 * a, -9 * a, -2 * a, 1))
    return a * u**3 - b * v**2


def resolvent_G2(s, t) -> UniPoly:
    """G2(s,t;X) = F2(0,s,-s,0,t,-t;X) for the family X^3 + sX + s."""
    field = QQ
    s = field(s)
    t = field(t)
    d = -(s**2) * (4 * s + 27)
    _require_nonzero(d, "s^2 (4s + 27)")
    return UniPoly(
        field,
        (
            -729 * s**2 * t**2 * (s - t) / d**3,
            243 * s * t**2 / d**2,
            81 * s**2 * t**2 / d**2,
            -27 * t / d,
            -18 * s * t / d,
            field.zero,
            field.one,
        ),
    )


def shanks_triple(m) -> CubicTriple:
    """The simplest-cubic-field triple: f3 = X^3 - mX^2 - (m+3)X - 1."""
    m = QQ(m)
    return CubicTriple(m, -(m + 3), QQ(1))


def shanks_delta(m):
    """Delta = m^2 + 3m + 9; the discriminant of the Shanks cubic is Delta^2."""
    m = QQ(m)
    return m**2 + 3 * m + 9


def cyclic_F2_pm(m, n):
    """The two cubic factors of F2 for a pair of Shanks cubics:
    F2(+-) = X^3 - (Db/Da) X -+ ((m-n) resp. -(m+n+3)) Db/Da^2."""
    m, n = QQ(m), QQ(n)
    da, db = shanks_delta(m), shanks_delta(n)
    lin = -db / da
    plus = UniPoly(QQ, (-(m - n) * db / da**2, lin, QQ(0), QQ(1)))
    minus = UniPoly(QQ, ((m + n + 3) * db / da**2, lin, QQ(0), QQ(1)))
    return plus, minus


def cyclic_h_pm(m, n):
    """Integral models h(+-)(m,n;Z) of the cyclic-pair resolvents, with
    Disc h(+-) = Da^2 Db^2 / (m-n)^4 resp. (m+n+3)^4."""
    m, n = QQ(m), QQ(n)
    if m == n:
        raise MathDomainError("h+ needs m != n")
    if m + n + 3 == 0:
        raise MathDomainError("h- needs m + n + 3 != 0")
    hp = UniPoly(
        QQ,
        (
            QQ(-1),
            -(m * n + 3 * m + 9) / (m - n),
            -(m * n + 3 * n + 9) / (m - n),
            QQ(1),
        ),
    )
    hm = UniPoly(
        QQ,
        (
            QQ(-1),
            (m * n - 9) / (m + n + 3),
            (m * n + 3 * m + 3 * n) / (m + n + 3),
            QQ(1),
        ),
    )
    return hp, hm


# --------------------------------------------------------------------------
# The five two-parameter generic sextics.
# --------------------------------------------------------------------------

_PAIRS = ("S3,S3", "S3,C3", "S3,C2", "S3,Id", "C3,C2")


def _normalize_pair(pair) -> str:
    if isinstance(pair, (tuple, list)):
        pair = ",".join(str(p) for p in pair)
    pair = pair.replace(" ", "").replace("{1}", "Id").replace("1", "Id")
    if pair not in _PAIRS:
        raise ValueError(f"unknown group pair {pair!r}; expected one of {_PAIRS}")
    return pair


def sextic_generic(pair, s, t=None, char3: bool = False) -> UniPoly:
    """Two-parameter generic sextics for pairs of cubic Galois groups.

    Each pair names the groups of the two underlying cubic families:
    S3 -> X^3 + sX + s, C3 -> the cyclic family X^3 - sX^2 - (s+3)X - 1,
    C2 -> X^3 - tX, Id -> X^3 - X.

    char != 3 mode (over Q): built on F2 of the pair, with the (S3,*)
    rows rescaled by X -> 3X and 3^-6 when the second family is depressed;
    pair (S3,Id) ignores t.

    char-3 mode (parameters in a char-3 field): built on F0 of the pair;
    the first argument is the slot sigma = 1/s of the S3/C3 family
    parameter, so sextic_generic(pair, sigma, t) equals F0 of the pair at
    s = 1/sigma.  Every char-3 row is polynomial in (sigma, t); each row
    is validated against the brute-force coset oracle over GF(27).
    """
    pair = _normalize_pair(pair)
    if char3:
        return _sextic_generic_char3(pair, s, t)
    field = QQ
    s = field(s)
    t = field(t) if t is not None else field.one
    k = s * (4 * s + 27)
    if pair == "S3,S3":
        _require_nonzero(k, "s (4s + 27)")
        return UniPoly(
            field,
            (
                (s - t) * t**2 / (s**4 * (4 * s + 27) ** 3),
                t**2 / (s**3 * (4 * s + 27) ** 2),
                t**2 / (s**2 * (4 * s + 27) ** 2),
                t / (s**2 * (4 * s + 27)),
                2 * t / k,
                field.zero,
                field.one,
            ),
        )
    if pair == "S3,C3":
        _require_nonzero(k, "s (4s + 27)")
        w = t**2 + 3 * t + 9
        return UniPoly(
            field,
            (
                w**2
                * (4 * s * t**2 + 27 * t**2 + 12 * s * t + 9 * s + 81 * t + 243)
                / (s**4 * (4 * s + 27) ** 3),
                3 * (2 * t + 3) * w**2 / (s**3 * (4 * s + 27) ** 2),
                9 * w**2 / (s**2 * (4 * s + 27) ** 2),
                -(2 * t + 3) * w / (s**2 * (4 * s + 27)),
                -6 * w / k,
                field.zero,
                field.one,
            ),
        )
    if pair == "S3,C2":
        _require_nonzero(k, "s (4s + 27)")
        return UniPoly(
            field,
            (
                t**3 / (s**4 * (4 * s + 27) ** 3),
                field.zero,
                t**2 / (s**2 * (4 * s + 27) ** 2),
                field.zero,
                -2 * t / k,
                field.zero,
                field.one,
            ),
        )
    if pair == "S3,Id":
        _require_nonzero(k, "s (4s + 27)")
        return UniPoly(
            field,
            (
                1 / (s**4 * (4 * s + 27) ** 3),
                field.zero,
                1 / (s**2 * (4 * s + 27) ** 2),
                field.zero,
                -2 / k,
                field.zero,
                field.one,
            ),
        )
    # C3,C2
    w = s**2 + 3 * s + 9
    _require_nonzero(w, "s^2 + 3s + 9")
    return UniPoly(
        field,
        (
            -((2 * s + 3) ** 2) * t**3 / w**4,
            field.zero,
            9 * t**2 / w**2,
            field.zero,
            -6 * t / w,
            field.zero,
            field.one,
        ),
    )


def _sextic_generic_char3(pair: str, s, t) -> UniPoly:
    field = field_of(s)
    if field is QQ or field.char != 3:
        raise MathDomainError("char-3 sextics need parameters in a char-3 field")
    s = field(s)
    t = field(t) if t is not None else field.one
    if pair == "S3,S3":
        return UniPoly(
            field,
            (
                -(t**2) * (s * t - 1),
                -(t**2),
                t**2,
                -t,
                -t,
                field.zero,
                field.one,
            ),
        )
    if pair == "S3,C3":
        return UniPoly(
            field,
            (
                s**2 * t**6 + s * t**4 - s * t**3 + field.one,
                -t * (s * t**3 + 1),
                -t * (s * t**3 - t + 1),
                s * t**3 - t**2 + 1,
                t * (t + 1),
                t,
                field.one,
            ),
        )
    if pair == "S3,C2":
        return UniPoly(
            field,
            (
                s * t**3,
                field.zero,
                t**2,
                field.zero,
                t,
                field.zero,
                field.one,
            ),
        )
    if pair == "S3,Id":
        return UniPoly(
            field,
            (s, field.zero, field.one, field.zero, field.one, field.zero, field.one),
        )
    # C3,C2: F0((1/s, -1/s-3, 1), (0,-t,0)) = X^6 + tX^4 + t^2X^2
    # - s^2 t^3 (s^2+1)^2, derived by resultant transport and checked
    # against the coset oracle at every split specialization over GF(27)
    return UniPoly(
        field,
        (
            -(s**2) * t**3 * (s**2 + field.one) ** 2,
            field.zero,
            t**2,
            field.zero,
            t,
            field.zero,
            field.one,
        ),
    )
