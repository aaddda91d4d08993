"""Decision procedures for cubic splitting fields over Q.

Provides the Galois type of a separable cubic, an exact test for whether two
cubics generate the same splitting field (with an explicit Tschirnhausen
transformation as witness), coefficient recovery at rational resolvent roots,
the closed-form branch for resolvents with a multiple root, and the full
subfield classification by factorization pattern of the degree-six resolvent.

Everything here works over Q; the rational arithmetic is exact throughout.
A transformation witness is a triple (c0, c1, c2) meaning u(X) = c0 + c1 X +
c2 X^2, and it certifies g3(a, c; X) = f3(b; X), i.e. u maps the roots of
f3(a) onto the roots of f3(b).
"""

from dataclasses import dataclass
from fractions import Fraction

from .factorq import factor_over_Q, is_square_rat, rational_roots
from .fields import QQ, MathDomainError
from .poly import UniPoly, lagrange_interpolate, linear_solve
from .resolvent import (
    CubicTriple,
    cubic_invariants,
    degeneracy_indicator,
    degenerate_f2_blocks,
    recovery_D12_0,
    recovery_polys,
    resolvent_F2,
    tschirn_image,
)

_ORDERS = {"S3": 6, "C3": 3, "C2": 2, "Id": 1}

#: Table of irreducible-factor degree patterns of the u2-resolvent, keyed by
#: (Galois type of a, Galois type of b, field relation), valid off the
#: multiple-root locus with the types ordered so #G_a >= #G_b.
FACTOR_PATTERNS = {
    ("S3", "S3", "TrivialMeet"): (6,),
    ("S3", "S3", "QuadraticMeet"): (3, 3),
    ("S3", "S3", "Equal"): (1, 2, 3),
    ("S3", "C3", "TrivialMeet"): (6,),
    ("S3", "C2", "NotContains"): (6,),
    ("S3", "C2", "ContainsQuadratic"): (3, 3),
    ("S3", "Id", "ProperContains"): (6,),
    ("C3", "C3", "TrivialMeet"): (3, 3),
    ("C3", "C3", "Equal"): (1, 1, 1, 3),
    ("C3", "C2", "TrivialMeet"): (6,),
    ("C3", "Id", "ProperContains"): (3, 3),
}

RELATIONS = (
    "Equal",
    "ProperContains",
    "QuadraticMeet",
    "TrivialMeet",
    "ContainsQuadratic",
    "NotContains",
)


@dataclass(frozen=True)
class GaloisType:
    """Isomorphism type of the Galois group of a separable cubic over Q."""

    tag: str

    def __post_init__(self):
        if self.tag not in _ORDERS:
            raise ValueError(f"unknown Galois type {self.tag!r}")

    @property
    def order(self) -> int:
        return _ORDERS[self.tag]

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class TschirnCoeffs:
    """Coefficients of u(X) = c0 + c1 X + c2 X^2 defining a transformation."""

    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, QQ(getattr(self, name)))

    def as_tuple(self) -> tuple:
        return (self.c0, self.c1, self.c2)

    def poly(self) -> UniPoly:
        return UniPoly(QQ, self.as_tuple())


@dataclass(frozen=True)
class RecoveryFormulas:
    """The coefficient-recovery data for a pair: u1 = q12(u2)/d12(u2) on
    resolvent roots, with d12_0 the content multiplier that clears the
    denominator (it vanishes exactly on the multiple-root locus)."""

    q12: UniPoly
    d12: UniPoly
    d12_0: Fraction

    @classmethod
    def for_pair(cls, a: CubicTriple, b: CubicTriple) -> "RecoveryFormulas":
        q12, d12 = recovery_polys(a, b)
        return cls(q12=q12, d12=d12, d12_0=recovery_D12_0(a, b))


@dataclass(frozen=True)
class DegenerateSplit:
    """Closed-form block factorization of the u2-resolvent on the
    multiple-root locus; the blocks need not be irreducible over Q."""

    factors: tuple  # ((double, 2), (simple, 1), (cubic, 1))
    simple_root: Fraction

    def expand(self) -> UniPoly:
        out = UniPoly.one(QQ)
        for g, m in self.factors:
            out = out * g**m
        return out


@dataclass(frozen=True)
class SubfieldReport:
    """Outcome of the subfield classification for an ordered cubic pair."""

    g_a: GaloisType
    g_b: GaloisType
    relation: str
    predicted_pattern: tuple | None
    observed_pattern: tuple
    degenerate: bool
    witness: TschirnCoeffs | None
    swapped: bool
    normalized_a: bool
    normalized_b: bool

    def to_dict(self) -> dict:
        return {
            "g_a": self.g_a.tag,
            "g_b": self.g_b.tag,
            "relation": self.relation,
            "predicted_pattern": list(self.predicted_pattern)
            if self.predicted_pattern is not None
            else None,
            "observed_pattern": list(self.observed_pattern),
            "degenerate": self.degenerate,
            "witness": [str(c) for c in self.witness.as_tuple()]
            if self.witness is not None
            else None,
            "swapped": self.swapped,
            "normalized_a": self.normalized_a,
            "normalized_b": self.normalized_b,
        }


# --------------------------------------------------------------------------
# Galois type.
# --------------------------------------------------------------------------


def galois_type(a: CubicTriple) -> GaloisType:
    """Galois group type of f3(a; X) over Q from its rational roots and the
    square class of the discriminant."""
    inv = cubic_invariants(a)
    if not inv.D:
        raise MathDomainError("discriminant is 0: the cubic is inseparable")
    n_rational = len(rational_roots(a.poly()))
    if n_rational == 3:
        return GaloisType("Id")
    if n_rational == 1:
        return GaloisType("C2")
    return GaloisType("C3" if is_square_rat(inv.D) is not None else "S3")


# --------------------------------------------------------------------------
# Witness algebra: verify, compose, invert.
# --------------------------------------------------------------------------


def _coeff_tuple(c) -> tuple:
    if isinstance(c, TschirnCoeffs):
        return c.as_tuple()
    return tuple(c)


def verify_transformation(a: CubicTriple, b: CubicTriple, c) -> bool:
    """True iff Resultant_Y(f3(a;Y), X - (c0 + c1 Y + c2 Y^2)) = f3(b;X)."""
    image = tschirn_image(a, _coeff_tuple(c))
    field = image.field if image.field is not QQ else b.field
    return image.values(field) == b.values(field)


def compose_transformations(a: CubicTriple, first, then) -> TschirnCoeffs:
    """The transformation sending a root x of f3(a) to then(first(x)),
    reduced modulo f3(a)."""
    f = a.poly()
    u = UniPoly(QQ, _coeff_tuple(first))
    v = UniPoly(QQ, _coeff_tuple(then))
    comp = v.compose(u) % f
    return TschirnCoeffs(comp[0], comp[1], comp[2])


def invert_transformation(a: CubicTriple, c) -> TschirnCoeffs:
    """Given a transformation u from a onto some image triple, the
    transformation v with v(u(X)) = X mod f3(a), i.e. the inverse map from
    the image back to a.  Requires u to generate Q[X]/f3(a)."""
    f = a.poly()
    u = UniPoly(QQ, _coeff_tuple(c)) % f
    powers = [UniPoly.one(QQ), u, (u * u) % f]
    rows = [[powers[j][i] for j in range(3)] for i in range(3)]
    sol = linear_solve(QQ, rows, (QQ(0), QQ(1), QQ(0)))
    return TschirnCoeffs(*sol)


# --------------------------------------------------------------------------
# Coefficient recovery at a resolvent root.
# --------------------------------------------------------------------------


def recover_coeffs(a: CubicTriple, b: CubicTriple, c2) -> TschirnCoeffs:
    """Lift a rational root c2 of the u2-resolvent to the full coefficient
    triple (c0, c1, c2) of the corresponding transformation."""
    c2 = QQ(c2)
    if resolvent_F2(a, b).eval(c2):
        raise ValueError(f"{c2} is not a root of the u2-resolvent of the pair")
    q12, d12 = recovery_polys(a, b)
    den = d12.eval(c2)
    if not den:
        raise MathDomainError(
            "D_{1,2}(c2) = 0: c2 is a multiple resolvent root; "
            "use the multiple-root branch"
        )
    c1 = q12.eval(c2) / den
    s1, s2, _ = a.values()
    t1 = b.values()[0]
    c0 = (t1 - s1 * c1 - (s1**2 - 2 * s2) * c2) / 3
    w = TschirnCoeffs(c0, c1, c2)
    if not verify_transformation(a, b, w):
        raise MathDomainError(
            "recovered coefficients do not transform a into b "
            "(inconsistent inputs)"
        )
    return w


# --------------------------------------------------------------------------
# Multiple-root branch.
# --------------------------------------------------------------------------


def degenerate_factorization(a: CubicTriple, b: CubicTriple):
    """Closed-form factorization of the u2-resolvent on the multiple-root
    locus, together with its guaranteed-simple rational root."""
    if rational_roots(a.poly()):
        raise MathDomainError(
            "the multiple-root factorization requires f3(a;X) irreducible"
        )
    double, simple, cubic = degenerate_f2_blocks(a, b)
    return DegenerateSplit(
        factors=((double, 2), (simple, 1), (cubic, 1)),
        simple_root=-simple.coeffs[0],
    )


# --------------------------------------------------------------------------
# Same-splitting-field decision.
# --------------------------------------------------------------------------


def _height_key(r: Fraction):
    return (max(abs(r.numerator), r.denominator), r)


def _witness_key(w: TschirnCoeffs):
    height = max(
        max(abs(c.numerator), c.denominator) for c in w.as_tuple()
    )
    return (height, w.as_tuple())


def _avoid_zero_A(a: CubicTriple):
    """Replace a cubic with A = 0 by a transformation-equivalent triple with
    A = 9, returning (triple, hop witness); identity when A is already
    nonzero.  Valid only when B is not 0 or +-1, which holds for every
    separable irreducible input."""
    inv = cubic_invariants(a)
    if inv.A:
        return a, None
    B = inv.B
    if B in (0, 1, -1):
        raise MathDomainError(
            f"A = 0 normalization undefined for B = {B} (reducible or "
            "inseparable cubic)"
        )
    a1 = QQ(a.values()[0])
    hop = TschirnCoeffs(a1 * a1 / B - a1, 3 - 6 * a1 / B, QQ(9) / B)
    target = CubicTriple(0, -3, B + 1 / B)
    if not verify_transformation(a, target, hop):
        raise MathDomainError("A = 0 normalization failed to verify")
    return target, hop


def _stitch(a: CubicTriple, hop_a, core: TschirnCoeffs, b: CubicTriple, hop_b):
    """Compose hop_a (a -> a'), core (a' -> b') and the inverse of hop_b
    (b -> b') into a single witness from a to b."""
    coeffs = core
    if hop_a is not None:
        coeffs = compose_transformations(a, hop_a, coeffs)
    if hop_b is not None:
        back = invert_transformation(b, hop_b)
        coeffs = compose_transformations(a, coeffs, back)
    w = coeffs if isinstance(coeffs, TschirnCoeffs) else TschirnCoeffs(*coeffs)
    if not verify_transformation(a, b, w):
        raise MathDomainError("composed witness failed verification")
    return w


def _decide_reducible(a: CubicTriple, b: CubicTriple):
    """Same-splitting-field test when both cubics are reducible: splitting
    fields are Q or a quadratic field, compared directly."""
    ga, gb = galois_type(a), galois_type(b)
    if ga.tag != gb.tag:
        return False, None
    if ga.tag == "Id":
        xs = rational_roots(a.poly())
        ys = rational_roots(b.poly())
        u = lagrange_interpolate(QQ, tuple(zip(xs, ys)))
        w = TschirnCoeffs(u[0], u[1], u[2])
        if not verify_transformation(a, b, w):
            raise MathDomainError("split-cubic witness failed verification")
        return True, w
    da = cubic_invariants(a).D
    db = cubic_invariants(b).D
    if is_square_rat(da * db) is None:
        return False, None
    return True, _quadratic_pair_witness(a, b)


def _quadratic_pair_witness(a: CubicTriple, b: CubicTriple) -> TschirnCoeffs:
    """Witness between two cubics that each factor as linear x irreducible
    quadratic over the same quadratic field: match the rational roots and
    map the quadratic roots through the square-root identification."""
    r_a = rational_roots(a.poly())[0]
    r_b = rational_roots(b.poly())[0]
    q_a = a.poly() // UniPoly(QQ, (-r_a, QQ(1)))
    q_b = b.poly() // UniPoly(QQ, (-r_b, QQ(1)))
    p, q = q_a[1], q_a[0]
    pp, qp = q_b[1], q_b[0]
    e = is_square_rat((pp * pp - 4 * qp) / (p * p - 4 * q))
    if e is None:
        raise MathDomainError(
            "quadratic factors generate different fields: discriminant "
            "ratio is not a square"
        )
    lin = UniPoly(QQ, ((e * p - pp) / 2, e))
    lam = (r_b - lin.eval(r_a)) / q_a.eval(r_a)
    u = lin + q_a * lam
    w = TschirnCoeffs(u[0], u[1], u[2])
    if not verify_transformation(a, b, w):
        raise MathDomainError("quadratic-pair witness failed verification")
    return w


def decide_same_splitting(a: CubicTriple, b: CubicTriple):
    """Whether f3(a) and f3(b) generate the same splitting field over Q.

    Returns (equal, witness); witness is a TschirnCoeffs transforming a into
    b whenever equal is True (and None otherwise)."""
    ja, jb = cubic_invariants(a), cubic_invariants(b)
    if not ja.D:
        raise MathDomainError("D_a = 0: first cubic is inseparable")
    if not jb.D:
        raise MathDomainError("D_b = 0: second cubic is inseparable")
    a_irreducible = not rational_roots(a.poly())
    b_irreducible = not rational_roots(b.poly())
    if a_irreducible != b_irreducible:
        # splitting field degrees 3 or 6 versus 1 or 2: never equal
        return False, None
    if not a_irreducible:
        return _decide_reducible(a, b)
    an, hop_a = _avoid_zero_A(a)
    bn, hop_b = _avoid_zero_A(b)
    if not degeneracy_indicator(an, bn):
        jan, jbn = cubic_invariants(an), cubic_invariants(bn)
        c2 = -6 * jbn.A**2 / (jan.A * jbn.B)
        core = recover_coeffs(an, bn, c2)
        return True, _stitch(a, hop_a, core, b, hop_b)
    roots = rational_roots(resolvent_F2(an, bn))
    if not roots:
        return False, None
    c2 = min(roots, key=_height_key)
    core = recover_coeffs(an, bn, c2)
    return True, _stitch(a, hop_a, core, b, hop_b)


def all_rational_transformations(a: CubicTriple, b: CubicTriple) -> tuple:
    """Every transformation over Q from a onto b, sorted by coefficient
    height.  Both cubics must be irreducible (and separable)."""
    ja, jb = cubic_invariants(a), cubic_invariants(b)
    if not ja.D or not jb.D:
        raise MathDomainError("inseparable cubic: discriminant is 0")
    if rational_roots(a.poly()) or rational_roots(b.poly()):
        raise MathDomainError(
            "transformation enumeration requires both cubics irreducible"
        )
    an, hop_a = _avoid_zero_A(a)
    bn, hop_b = _avoid_zero_A(b)
    jan, jbn = cubic_invariants(an), cubic_invariants(bn)
    found = []
    if not degeneracy_indicator(an, bn):
        # the double root and its fiber
        double_root = 3 * jbn.A**2 / (jan.A * jbn.B)
        simple_root = -2 * double_root
        found.append(recover_coeffs(an, bn, simple_root))
        s1, s2, _ = an.values()
        t1 = bn.values()[0]
        ell = (t1 - (s1**2 - 2 * s2) * double_root) / 3

        def a2_gap(u1):
            u1 = QQ(u1)
            img = tschirn_image(an, (ell - s1 * u1 / 3, u1, double_root))
            return QQ(img.a2) - QQ(bn.a2)

        fiber = lagrange_interpolate(
            QQ, tuple((QQ(x), a2_gap(x)) for x in (0, 1, 2))
        )
        for u1 in rational_roots(fiber):
            cand = (ell - s1 * u1 / 3, u1, double_root)
            if verify_transformation(an, bn, cand):
                found.append(TschirnCoeffs(*cand))
    else:
        for c2 in rational_roots(resolvent_F2(an, bn)):
            found.append(recover_coeffs(an, bn, c2))
    out = [_stitch(a, hop_a, w, b, hop_b) for w in found]
    return tuple(sorted(out, key=_witness_key))


# --------------------------------------------------------------------------
# Subfield classification.
# --------------------------------------------------------------------------


def classify_subfield(a: CubicTriple, b: CubicTriple) -> SubfieldReport:
    """Full classification of the relation between the splitting fields,
    with the resolvent factorization pattern checked against the predicted
    table row (predictions are not claimed on the multiple-root locus)."""
    ja, jb = cubic_invariants(a), cubic_invariants(b)
    if not ja.D:
        raise MathDomainError("D_a = 0: first cubic is inseparable")
    if not jb.D:
        raise MathDomainError("D_b = 0: second cubic is inseparable")
    ga, gb = galois_type(a), galois_type(b)
    swapped = ga.order < gb.order
    if swapped:
        a, b, ja, jb, ga, gb = b, a, jb, ja, gb, ga
    if ga.tag not in ("S3", "C3"):
        raise MathDomainError(
            "classification requires at least one irreducible cubic; got "
            f"Galois types ({ga}, {gb})"
        )
    an, hop_a = _avoid_zero_A(a)
    if gb.tag in ("S3", "C3"):
        bn, hop_b = _avoid_zero_A(b)
    else:
        bn, hop_b = b, None
    degenerate = not degeneracy_indicator(an, bn)

    witness = None
    if gb.tag == "Id":
        relation = "ProperContains"
    elif gb.tag == "C2":
        if is_square_rat(ja.D * jb.D) is not None:
            relation = "ContainsQuadratic"
        elif ga.tag == "C3":
            relation = "TrivialMeet"
        else:
            relation = "NotContains"
    else:
        equal, witness = decide_same_splitting(a, b)
        if equal:
            relation = "Equal"
        elif (
            ga.tag == "S3"
            and gb.tag == "S3"
            and is_square_rat(ja.D * jb.D) is not None
        ):
            relation = "QuadraticMeet"
        else:
            relation = "TrivialMeet"

    observed = factor_over_Q(resolvent_F2(an, bn)).degree_pattern()
    predicted = (
        None if degenerate else FACTOR_PATTERNS[(ga.tag, gb.tag, relation)]
    )
    return SubfieldReport(
        g_a=ga,
        g_b=gb,
        relation=relation,
        predicted_pattern=predicted,
        observed_pattern=observed,
        degenerate=degenerate,
        witness=witness,
        swapped=swapped,
        normalized_a=hop_a is not None,
        normalized_b=hop_b is not None,
    )
