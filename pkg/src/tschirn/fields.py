"""Exact scalar arithmetic: rationals, prime fields F_p, extensions GF(p^k).

Every computation in this package is exact.  Three kinds of scalars occur:

* ``Rat`` — arbitrary-precision rationals (``fractions.Fraction``), the base
  field for everything over Q.  Canonical form (reduced, positive
  denominator) is guaranteed by the class itself.
* ``FpElement`` — elements of a prime field F_p, p a machine-word prime.
* ``GFElement`` — elements of a small extension GF(p^k), k <= 6, represented
  as polynomials over F_p modulo a fixed irreducible modulus.

Fields are lightweight descriptor objects (``QQ``, ``PrimeField(p)``,
``ExtField(p, k, modulus)``) that coerce integers via ``field(n)`` and expose
``zero``, ``one`` and ``char``.  All values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class MathDomainError(ValueError):
    """A mathematical precondition failed (names the violated expression)."""


def rat_parse(text: str) -> Rat:
    """Parse ``p`` or ``p/q`` into a canonical rational.

    >>> rat_parse("3/6")
    Fraction(1, 2)
    >>> rat_parse("-27")
    Fraction(-27, 1)
    >>> rat_parse("0/5")
    Fraction(0, 1)
    """
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r}: expected p or p/q")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def rat_format(r: Rat) -> str:
    """Render a rational as ``p`` or ``p/q`` (inverse of rat_parse)."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


# --------------------------------------------------------------------------
# Primality (deterministic Miller-Rabin; moduli stay below 2^62).
# --------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2^62 modulus cap."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# --------------------------------------------------------------------------
# The rational field Q.
# --------------------------------------------------------------------------


class RationalField:
    """Descriptor for Q.  ``QQ(x)`` coerces ints/Fractions to Fraction."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Rat:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


def field_of(x):
    """The field descriptor an element belongs to (Q for int/Fraction)."""
    if isinstance(x, (int, Fraction)):
        return QQ
    return x.field


# --------------------------------------------------------------------------
# Prime fields F_p.
# --------------------------------------------------------------------------


class PrimeField:
    """The field F_p for a machine-word prime p (checked at construction)."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        if p >= 1 << 62:
            raise ValueError(f"modulus {p} exceeds the machine-word cap 2^62")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.zero = FpElement(self, 0)
        self.one = FpElement(self, 1)

    @property
    def char(self) -> int:
        return self.p

    def __call__(self, x) -> "FpElement":
        if isinstance(x, FpElement):
            if x.field.p != self.p:
                raise TypeError(f"element of F_{x.field.p} used in F_{self.p}")
            return x
        if isinstance(x, int):
            return FpElement(self, x % self.p)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def elements(self):
        """Iterate all p elements (small fields only; used by exhaustive tests)."""
        return (FpElement(self, v) for v in range(self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))


class FpElement:
    """An element of F_p.  Arithmetic accepts plain ints on either side."""

    __slots__ = ("field", "val")

    def __init__(self, field: PrimeField, val: int):
        self.field = field
        self.val = val % field.p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise TypeError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val + o.val)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val - o.val)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.field, o.val - self.val)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val * o.val)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(self.field, -self.val)

    def inverse(self) -> "FpElement":
        if self.val == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.field.p}")
        return FpElement(self.field, pow(self.val, -1, self.field.p))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(self.field, pow(self.val, n, self.field.p))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.val == other % self.field.p
        return (
            isinstance(other, FpElement)
            and other.field.p == self.field.p
            and other.val == self.val
        )

    def __hash__(self) -> int:
        return hash(("Fp", self.field.p, self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"{self.val}"


# --------------------------------------------------------------------------
# Small extension fields GF(p^k).
#
# Elements are polynomials over F_p of degree < k modulo a monic irreducible
# modulus, stored as int tuples (ascending powers, length exactly k).
# --------------------------------------------------------------------------


def _fp_poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_poly_trim(out)


def _fp_poly_divmod(a, b, p):
    """Quotient and remainder of int-list polynomials over F_p (b nonzero)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, -1, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and _fp_poly_trim(a):
        da = len(a) - 1
        if da < db:
            break
        coef = a[-1] * inv_lb % p
        q[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
        _fp_poly_trim(a)
    return _fp_poly_trim(q), a


def _fp_poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_poly_powmod(base, e: int, mod, p):
    """base^e modulo the int-list polynomial ``mod`` over F_p."""
    result = [1]
    base = _fp_poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_poly_divmod(_fp_poly_mul(result, base, p), mod, p)[1]
        base = _fp_poly_divmod(_fp_poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _fp_poly_irreducible(f, p) -> bool:
    """Monic f of degree k is irreducible over F_p iff it shares no factor
    with X^{p^d} - X for any d <= k/2 (catches every factor of degree <= k/2)."""
    k = len(f) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        xpd = _fp_poly_powmod([0, 1], p**d, f, p)
        diff = list(xpd) + [0] * (2 - len(xpd))
        diff[1] = (diff[1] - 1) % p
        g = _fp_poly_gcd(f, _fp_poly_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


class ExtField:
    """GF(p^k) as F_p[X] modulo a monic irreducible of degree k (k <= 6)."""

    __slots__ = ("p", "k", "modulus", "zero", "one")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if not 1 <= k <= 6:
            raise ValueError(f"extension degree {k} outside 1..6")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _fp_poly_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.zero = GFElement(self, (0,) * k)
        self.one = GFElement(self, (1,) + (0,) * (k - 1)) if k >= 1 else None

    @property
    def char(self) -> int:
        return self.p

    def __call__(self, x) -> "GFElement":
        if isinstance(x, GFElement):
            if x.field is not self and (x.field.p, x.field.k, x.field.modulus) != (
                self.p,
                self.k,
                self.modulus,
            ):
                raise TypeError("element of a different extension field")
            return x
        if isinstance(x, int):
            coeffs = [x % self.p] + [0] * (self.k - 1)
            return GFElement(self, tuple(coeffs))
        if isinstance(x, (list, tuple)):
            r = _fp_poly_divmod([c % self.p for c in x], list(self.modulus), self.p)[1]
            return GFElement(self, tuple(r) + (0,) * (self.k - len(r)))
        raise TypeError(f"cannot coerce {x!r} into GF({self.p}^{self.k})")

    def gen(self) -> "GFElement":
        """The class of X (a generator of the F_p-algebra)."""
        if self.k == 1:
            # X reduces to the root of the degree-1 modulus X + c, i.e. -c.
            return self(-self.modulus[0])
        return self([0, 1])

    def order(self) -> int:
        return self.p**self.k

    def elements(self):
        """Iterate all p^k elements in base-p counter order."""
        for j in range(self.order()):
            coeffs = []
            v = j
            for _ in range(self.k):
                coeffs.append(v % self.p)
                v //= self.p
            yield GFElement(self, tuple(coeffs))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and (other.p, other.k, other.modulus) == (self.p, self.k, self.modulus)
        )

    def __hash__(self) -> int:
        return hash(("GF", self.p, self.k, self.modulus))


class GFElement:
    """An element of GF(p^k): an int tuple of length k (ascending powers)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple[int, ...]):
        assert len(coeffs) == field.k
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise TypeError("mixed extension fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return GFElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return GFElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        fld = self.field
        prod = _fp_poly_mul(list(self.coeffs), list(o.coeffs), fld.p)
        r = _fp_poly_divmod(prod, list(fld.modulus), fld.p)[1]
        return GFElement(fld, tuple(r) + (0,) * (fld.k - len(r)))

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def inverse(self) -> "GFElement":
        """Extended gcd against the modulus."""
        fld = self.field
        if not self:
            raise ZeroDivisionError(f"inverse of 0 in {fld!r}")
        # Extended Euclid on int-list polynomials over F_p.
        r0, r1 = list(fld.modulus), _fp_poly_trim(list(self.coeffs))
        s0, s1 = [], [1]
        p = fld.p
        while r1:
            q, rem = _fp_poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            qs1 = _fp_poly_mul(q, s1, p)
            new_s = [0] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                new_s[i] = c
            for i, c in enumerate(qs1):
                new_s[i] = (new_s[i] - c) % p
            s0, s1 = s1, _fp_poly_trim(new_s)
        assert len(r0) == 1  # gcd with an irreducible modulus is a unit
        inv_lead = pow(r0[0], -1, p)
        s0 = [c * inv_lead % p for c in s0]
        return fld(s0)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.field(other)
        return (
            isinstance(other, GFElement)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash(("GFel", self.field.p, self.field.modulus, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"[{','.join(str(c) for c in self.coeffs)}]"


def gf_build(p: int, k: int, seed: int) -> ExtField:
    """Build GF(p^k) with a deterministic, seed-reproducible modulus.

    Monic degree-k candidates are enumerated by the base-p counter
    j = sum c_i p^i (so the coefficient of X^{k-1} is the most significant
    digit), starting at offset ``seed mod p^k`` and wrapping; the first
    irreducible candidate becomes the modulus.  Seed 0 therefore yields the
    lexicographically first irreducible by descending-power coefficients.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not 1 <= k <= 6:
        raise ValueError(f"extension degree {k} outside 1..6")
    total = p**k
    start = seed % total
    for off in range(total):
        j = (start + off) % total
        coeffs, v = [], j
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        candidate = coeffs + [1]
        if _fp_poly_irreducible(candidate, p):
            return ExtField(p, k, tuple(candidate))
    raise RuntimeError(f"no irreducible of degree {k} over F_{p} found (bug)")
