"""Complete univariate factorization over Q and over F_p, rational-root
extraction, and exact square testing.

Over F_p: squarefree decomposition (with the p-th-root step), distinct-degree
splitting, then Cantor–Zassenhaus equal-degree splitting driven by a PRNG
seeded deterministically from the input, so output is reproducible.  p = 2
falls back to exhaustive trial division (degrees here are <= 6).

Over Q: clear denominators to a primitive integer polynomial, monicize,
squarefree-split by Yun's algorithm, factor the image modulo a good prime,
Hensel-lift (quadratic steps, binary factor tree) above the Landau–Mignotte
coefficient bound, and recombine factor subsets exhaustively.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .fields import QQ, PrimeField, is_prime
from .poly import UniPoly, poly_discriminant, poly_gcd

# --------------------------------------------------------------------------
# Factorization container.
# --------------------------------------------------------------------------


def _coeff_sort_val(c):
    if isinstance(c, Fraction):
        return c
    return getattr(c, "val", None) if hasattr(c, "val") else tuple(c.coeffs)


def _poly_sort_key(g: UniPoly):
    return (g.degree, tuple(_coeff_sort_val(c) for c in g.coeffs))


@dataclass(frozen=True)
class Factorization:
    """unit · Π factor^multiplicity = the input, factors monic irreducible,
    sorted by (degree, ascending-coefficient lexicographic order)."""

    unit: object
    factors: tuple  # of (UniPoly, int)

    def expand(self) -> UniPoly:
        field = (
            self.factors[0][0].field if self.factors else _field_of_unit(self.unit)
        )
        out = UniPoly.constant(field, self.unit)
        for g, m in self.factors:
            out = out * g**m
        return out

    def degree_pattern(self) -> tuple:
        """Factor degrees with multiplicity, sorted ascending: e.g. (1,1,1,3)."""
        degs = []
        for g, m in self.factors:
            degs.extend([g.degree] * m)
        return tuple(sorted(degs))

    def __iter__(self):
        return iter(self.factors)


def _field_of_unit(u):
    if isinstance(u, (int, Fraction)):
        return QQ
    return u.field


def _sorted_factors(d: dict) -> tuple:
    return tuple(sorted(d.items(), key=lambda kv: _poly_sort_key(kv[0])))


# --------------------------------------------------------------------------
# Factorization over F_p.
# --------------------------------------------------------------------------


def _powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    result = UniPoly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def _pth_root_fp(f: UniPoly) -> UniPoly:
    """For f with f' = 0 over F_p: the unique h with h(X)^p = f(X).
    (Coefficients of F_p are their own p-th roots.)"""
    p = f.field.p
    return UniPoly(f.field, [f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def _squarefree_decompose_fp(f: UniPoly) -> dict:
    """Monic f over F_p -> {squarefree monic part: multiplicity}."""
    p = f.field.p
    out: dict = {}
    if f.degree == 0:
        return out
    df = f.derivative()
    if not df:
        for g, m in _squarefree_decompose_fp(_pth_root_fp(f)).items():
            out[g] = out.get(g, 0) + m * p
        return out
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out[z.monic()] = out.get(z.monic(), 0) + i
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        for g, m in _squarefree_decompose_fp(_pth_root_fp(c)).items():
            out[g] = out.get(g, 0) + m * p
    return out


def _trial_division_fp(f: UniPoly) -> list:
    """Exhaustive factorization of monic squarefree f (used for p = 2)."""
    p = f.field.p
    F = f.field
    out = []
    d = 1
    while 2 * d <= f.degree:
        for j in range(p**d):
            coeffs, v = [], j
            for _ in range(d):
                coeffs.append(v % p)
                v //= p
            cand = UniPoly(F, coeffs + [1])
            if not f % cand:
                out.append(cand)
                f = f // cand
                if 2 * d > f.degree:
                    break
        d += 1
    if f.degree > 0:
        out.append(f)
    return out


def _distinct_degree_fp(f: UniPoly) -> list:
    """Monic squarefree f -> [(product of irreducibles of degree d, d)]."""
    p = f.field.p
    x = UniPoly.X(f.field)
    out = []
    h = x
    v = f
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, v)
        g = poly_gcd(v, h - x)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _equal_degree_split_fp(f: UniPoly, d: int, rng: random.Random) -> list:
    """Cantor–Zassenhaus split of a product of degree-d irreducibles, p odd."""
    if f.degree == d:
        return [f]
    p = f.field.p
    F = f.field
    exponent = (p**d - 1) // 2
    while True:
        r = UniPoly(F, [rng.randrange(p) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(f, r)
        if g.degree == 0:
            g = poly_gcd(f, _powmod(r, exponent, f) - 1)
        if 0 < g.degree < f.degree:
            return _equal_degree_split_fp(g.monic(), d, rng) + _equal_degree_split_fp(
                (f // g).monic(), d, rng
            )


def factor_over_Fp(f: UniPoly) -> Factorization:
    """Complete factorization over a prime field (deterministic output)."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    F = f.field
    if not isinstance(F, PrimeField):
        raise TypeError("factor_over_Fp expects a polynomial over a prime field")
    unit = f.lc
    g = f.monic()
    if g.degree == 0:
        return Factorization(unit, ())
    seed = f"fp:{F.p}:" + ",".join(str(c.val) for c in g.coeffs)
    rng = random.Random(seed)
    found: dict = {}
    for piece, mult in _squarefree_decompose_fp(g).items():
        if F.p == 2:
            irreducibles = _trial_division_fp(piece)
        else:
            irreducibles = []
            for prod, d in _distinct_degree_fp(piece):
                irreducibles.extend(_equal_degree_split_fp(prod, d, rng))
        for h in irreducibles:
            h = h.monic()
            found[h] = found.get(h, 0) + mult
    return Factorization(unit, _sorted_factors(found))


# --------------------------------------------------------------------------
# Integer polynomial helpers (ascending int lists) for Hensel lifting.
# --------------------------------------------------------------------------


def _zt(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmod(a, m: int) -> list:
    return _zt([c % m for c in a])


def _zadd(a, b) -> list:
    n = max(len(a), len(b))
    return _zt(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def _zsub(a, b) -> list:
    n = max(len(a), len(b))
    return _zt(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    )


def _zmul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _zt(out)


def _zdivmod_monic(a, b, m=None):
    """Divide by monic b; arithmetic mod m when given, else over Z."""
    a = list(a)
    if m is not None:
        a = [c % m for c in a]
    q = [0] * max(0, len(a) - len(b) + 1)
    while True:
        _zt(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        coef = a[-1]
        q[k] = coef if m is None else coef % m
        for i, bi in enumerate(b):
            a[k + i] -= coef * bi
            if m is not None:
                a[k + i] %= m
    return _zt(q), a


def _fp_bezout(g: UniPoly, h: UniPoly):
    """s, t over F_p with s·g + t·h = 1, deg s < deg h, deg t < deg g."""
    F = g.field
    r0, r1 = g, h
    s0, s1 = UniPoly.one(F), UniPoly.zero(F)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    assert r0.degree == 0, "factors not coprime mod p (image not squarefree)"
    s = s0 / r0.lc
    s = s % h
    t = (UniPoly.one(F) - s * g) // h
    return s, t


def _to_int_list(f: UniPoly) -> list:
    return [c.val for c in f.coeffs]


def _hensel_step(f, g, h, s, t, m: int):
    """One quadratic lift: valid data mod m -> valid data mod m^2.

    Preconditions: f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m), g and h monic,
    deg s < deg h, deg t < deg g.  All polynomials are int lists.
    """
    M = m * m
    e = _zmod(_zsub(f, _zmul(g, h)), M)
    q, r = _zdivmod_monic(_zmod(_zmul(s, e), M), h, M)
    g1 = _zmod(_zadd(_zadd(g, _zmul(t, e)), _zmul(q, g)), M)
    h1 = _zmod(_zadd(h, r), M)
    b = _zmod(_zsub(_zadd(_zmul(s, g1), _zmul(t, h1)), [1]), M)
    c, d = _zdivmod_monic(_zmod(_zmul(s, b), M), h1, M)
    s1 = _zmod(_zsub(s, d), M)
    t1 = _zmod(_zsub(_zsub(t, _zmul(t, b)), _zmul(c, g1)), M)
    assert g1 and g1[-1] == 1 and h1 and h1[-1] == 1, "Hensel step broke monicity"
    return g1, h1, s1, t1


def _lift_pair(f, g0, h0, s0, t0, p: int, m_final: int):
    g, h, s, t = g0, h0, s0, t0
    m = p
    while m < m_final:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return g, h


def _hensel_tree(slice_, mod_factors, Fp, p: int, m_final: int) -> list:
    """Lift every factor in the binary product tree to modulus m_final."""
    if len(mod_factors) == 1:
        return [_zmod(slice_, m_final)]
    half = len(mod_factors) // 2
    g0 = UniPoly.one(Fp)
    for fac in mod_factors[:half]:
        g0 = g0 * fac
    h0 = UniPoly.one(Fp)
    for fac in mod_factors[half:]:
        h0 = h0 * fac
    s, t = _fp_bezout(g0, h0)
    g, h = _lift_pair(
        _zmod(slice_, m_final),
        _to_int_list(g0),
        _to_int_list(h0),
        _to_int_list(s),
        _to_int_list(t),
        p,
        m_final,
    )
    return _hensel_tree(g, mod_factors[:half], Fp, p, m_final) + _hensel_tree(
        h, mod_factors[half:], Fp, p, m_final
    )


def _center(c: int, m: int) -> int:
    return c - m if c > m // 2 else c


def _good_prime(disc_num: int) -> int:
    p = 5
    while not (is_prime(p) and disc_num % p != 0):
        p += 2
    return p


def _factor_monic_int_squarefree(H: list) -> list:
    """Monic squarefree integer polynomial -> monic integer irreducibles."""
    d = len(H) - 1
    if d <= 1:
        return [H]
    HQ = UniPoly(QQ, H)
    disc = poly_discriminant(HQ)
    assert disc.denominator == 1 and disc != 0
    p = _good_prime(disc.numerator)
    Fp = PrimeField(p)
    Hp = UniPoly(Fp, H)
    modular = [g for g, _ in factor_over_Fp(Hp).factors]
    if len(modular) == 1:
        return [H]
    # Landau–Mignotte: coefficients of any monic factor are bounded by
    # 2^deg · ||H||_2; lift until the modulus exceeds twice that.
    bound = (1 << d) * (math.isqrt(sum(c * c for c in H)) + 1)
    m_final = p
    while m_final < 2 * bound + 1:
        m_final *= m_final
    lifted = _hensel_tree(H, modular, Fp, p, m_final)

    result = []
    remaining = list(range(len(lifted)))
    current = list(H)
    k = 1
    while 2 * k <= len(remaining):
        found = False
        for subset in combinations(remaining, k):
            cand = [1]
            for i in subset:
                cand = _zmod(_zmul(cand, lifted[i]), m_final)
            cand = [_center(c, m_final) for c in cand]
            q, r = _zdivmod_monic(current, cand)
            if not r:
                result.append(cand)
                current = q
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            k += 1
    if len(current) - 1 > 0:
        result.append(current)
    return result


def _yun_squarefree_q(f: UniPoly) -> list:
    """Monic f over Q -> [(monic squarefree, multiplicity)] (Yun)."""
    df = f.derivative()
    g = poly_gcd(f, df)
    if g.degree == 0:
        return [(f, 1)]
    b = f // g
    d = (df // g) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b // a
        d = (d // a) - b.derivative()
        i += 1
    return out


def _factor_squarefree_q(q: UniPoly) -> list:
    """Monic squarefree rational polynomial -> monic rational irreducibles."""
    if q.degree == 1:
        return [q]
    lcm_den = 1
    for c in q.coeffs:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in q.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    ints = [c // content for c in ints]
    ell = ints[-1]  # leading coefficient of the primitive integer model
    d = len(ints) - 1
    # Monicize: H(X) = ell^{d-1} · g(X/ell) is monic with integer coefficients.
    H = [ints[j] * ell ** (d - 1 - j) for j in range(d)] + [1]
    out = []
    for hj in _factor_monic_int_squarefree(H):
        hq = UniPoly(QQ, hj)
        dj = hq.degree
        back = UniPoly(QQ, (hq.coeffs[i] * Fraction(ell) ** i for i in range(dj + 1)))
        out.append(back.monic())
    return out


def factor_over_Q(f: UniPoly) -> Factorization:
    """Complete factorization into monic rational irreducibles, with unit."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.field != QQ:
        raise TypeError("factor_over_Q expects a polynomial over Q")
    unit = f.lc
    g = f.monic()
    if g.degree == 0:
        return Factorization(unit, ())
    found: dict = {}
    for piece, mult in _yun_squarefree_q(g):
        for h in _factor_squarefree_q(piece):
            found[h] = found.get(h, 0) + mult
    return Factorization(unit, _sorted_factors(found))


# --------------------------------------------------------------------------
# Rational roots and exact squares.
# --------------------------------------------------------------------------


def rational_roots(f: UniPoly) -> list:
    """All rational roots with multiplicity, ascending."""
    if not f:
        raise ValueError("every rational is a root of the zero polynomial")
    roots = []
    for g, m in factor_over_Q(f).factors:
        if g.degree == 1:
            roots.extend([-g.coeffs[0]] * m)
    return sorted(roots)


def is_square_rat(r: Fraction):
    """The nonnegative rational square root of r, or None."""
    if r < 0:
        return None
    pn = math.isqrt(r.numerator)
    pd = math.isqrt(r.denominator)
    if pn * pn == r.numerator and pd * pd == r.denominator:
        return Fraction(pn, pd)
    return None
