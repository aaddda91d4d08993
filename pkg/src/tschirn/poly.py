"""Dense univariate polynomials over an exact field, with resultants,
discriminants, interpolation, and the Vandermonde solve that produces
Tschirnhausen coefficient vectors from paired root tuples.

Representation: ascending coefficient tuple with a nonzero leading
coefficient; the zero polynomial is the empty tuple.  Degrees stay tiny
(<= 6 symbolically, <= 720 inside the brute-force oracle), so the dense
form is always the right one.

Text format: comma-separated coefficients, constant term first, rationals
as ``p/q`` — e.g. ``2,3,0,1`` is X^3 + 3X + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import QQ, MathDomainError, field_of, rat_format, rat_parse


class UniPoly:
    """A univariate polynomial over an exact field (immutable)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # ------------------------------------------------------------ structure

    @classmethod
    def zero(cls, field) -> "UniPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "UniPoly":
        return cls(field, (1,))

    @classmethod
    def X(cls, field) -> "UniPoly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c) -> "UniPoly":
        return cls(field, (c,))

    @classmethod
    def from_roots(cls, field, roots) -> "UniPoly":
        """The monic polynomial Π (X − r)."""
        f = cls.one(field)
        for r in roots:
            f = f * cls(field, (-field(r), field.one))
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    # ----------------------------------------------------------- arithmetic

    def _as_scalar(self, other):
        if isinstance(other, UniPoly):
            return None
        try:
            return self.field(other)
        except TypeError:
            return None

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            s = self._as_scalar(other)
            if s is None:
                return NotImplemented
            other = UniPoly.constant(self.field, s)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.field, (self[i] + other[i] for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, (-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            s = self._as_scalar(other)
            if s is None:
                return NotImplemented
            other = UniPoly.constant(self.field, s)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            s = self._as_scalar(other)
            if s is None:
                return NotImplemented
            return UniPoly(self.field, (c * s for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = self._as_scalar(scalar)
        if s is None:
            return NotImplemented
        return self * (self.field.one / s)

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.field.zero] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        inv_lc = self.field.one / other.lc
        while len(rem) - 1 >= other.degree and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < other.degree:
                break
            k = len(rem) - 1 - other.degree
            coef = rem[-1] * inv_lc
            q[k] = coef
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - coef * b
        return UniPoly(self.field, q), UniPoly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------- calculus

    def monic(self) -> "UniPoly":
        if not self:
            raise ValueError("cannot normalize the zero polynomial")
        return self / self.lc

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.field, (i * self.coeffs[i] for i in range(1, len(self.coeffs)))
        )

    def eval(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "UniPoly") -> "UniPoly":
        """f(g(X)) by Horner's rule in the polynomial ring."""
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    # -------------------------------------------------------------- display

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = f"{c}"
            else:
                xs = "X" if i == 1 else f"X^{i}"
                term = xs if c == self.field.one else f"{c}*{xs}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


# --------------------------------------------------------------------------
# Text format (constant term first).
# --------------------------------------------------------------------------


def poly_parse(text: str) -> UniPoly:
    """Parse ``c0,c1,...,cd`` (rationals allowed) into a polynomial over Q."""
    parts = text.split(",")
    if all(not p.strip() for p in parts):
        raise ValueError("empty polynomial text")
    return UniPoly(QQ, [rat_parse(p) for p in parts])


def poly_format(f: UniPoly) -> str:
    """Inverse of poly_parse; the zero polynomial renders as ``0``."""
    if not f:
        return "0"
    return ",".join(rat_format(c) for c in f.coeffs)


# --------------------------------------------------------------------------
# Root tuples: the raw input of the brute-force resolvent oracle.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RootTuple:
    """Paired root vectors (x_1..x_n), (y_1..y_n) in one exact field.

    Both vectors must consist of pairwise distinct elements (both cubics
    separable) and 2 <= n <= 6 so the coset product has degree n! <= 720.
    """

    xs: tuple
    ys: tuple

    def __post_init__(self):
        n = len(self.xs)
        if not 2 <= n <= 6:
            raise ValueError(f"root tuple length {n} outside 2..6")
        if len(self.ys) != n:
            raise ValueError("xs and ys must have equal length")
        for name, v in (("xs", self.xs), ("ys", self.ys)):
            for a, b in combinations(v, 2):
                if a == b:
                    raise MathDomainError(
                        f"repeated entry in {name}: discriminant of that side is 0"
                    )

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def field(self):
        return field_of(self.xs[0])


def elementary_symmetric(values) -> tuple:
    """(e_1, ..., e_n) for the given values, read off Π(X − v)."""
    values = tuple(values)
    field = field_of(values[0])
    f = UniPoly.from_roots(field, values)
    n = len(values)
    return tuple((-1) ** k * f[n - k] for k in range(1, n + 1))


# --------------------------------------------------------------------------
# Linear algebra (exact Gaussian elimination; tiny systems).
# --------------------------------------------------------------------------


def linear_solve(field, rows, rhs):
    """Solve the square system rows·u = rhs exactly; raises on singularity."""
    n = len(rows)
    aug = [[field(c) for c in row] + [field(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise MathDomainError("singular linear system: matrix determinant is 0")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.one / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def _det3(field, m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def vandermonde_solve(rt: RootTuple, tau) -> tuple:
    """Coefficients (u_0..u_{n−1}) with y_{τ(i)} = Σ_j u_j x_i^j for all i.

    τ is a permutation of 0..n−1 acting on the y-side.  For n = 3 the
    Gaussian-elimination answer is cross-checked against Cramer's rule.
    """
    n = rt.n
    if sorted(tau) != list(range(n)):
        raise ValueError(f"{tau!r} is not a permutation of 0..{n-1}")
    field = rt.field
    rows = [[field(x) ** j for j in range(n)] for x in rt.xs]
    rhs = [rt.ys[tau[i]] for i in range(n)]
    u = linear_solve(field, rows, rhs)
    if n == 3:
        det = _det3(field, rows)
        for j in range(3):
            mj = [row[:j] + [rhs[i]] + row[j + 1 :] for i, row in enumerate(rows)]
            assert u[j] * det == _det3(field, mj), "Cramer cross-check failed"
    return u


def lagrange_interpolate(field, points) -> UniPoly:
    """The unique polynomial of degree < len(points) through the points."""
    xs = [field(x) for x, _ in points]
    for a, b in combinations(xs, 2):
        if a == b:
            raise MathDomainError("repeated interpolation node")
    total = UniPoly.zero(field)
    for i, (xi, yi) in enumerate(points):
        xi = field(xi)
        num = UniPoly.one(field)
        den = field.one
        for j, xj in enumerate(xs):
            if j != i:
                num = num * UniPoly(field, (-xj, field.one))
                den = den * (xi - xj)
        total = total + num * (field(yi) / den)
    return total


# --------------------------------------------------------------------------
# Resultants and discriminants.
# --------------------------------------------------------------------------


def poly_resultant(f: UniPoly, g: UniPoly):
    """Res(f, g) = lc(f)^deg g · Π_{f(α)=0} g(α), by the Euclidean remainder
    sequence with the classical transition
    Res(f, g) = (−1)^{deg f·deg g} · lc(g)^{deg f − deg r} · Res(g, r),
    exact over a field (degrees here never exceed ~720)."""
    if f.field != g.field:
        raise TypeError("resultant of polynomials over different fields")
    if not f:
        raise ValueError("resultant requires nonzero first argument")
    field = f.field
    acc = field.one
    neg = False
    while True:
        if not g:
            return field.zero if f.degree > 0 else (-acc if neg else acc)
        if g.degree == 0:
            val = acc * g.lc ** f.degree
            return -val if neg else val
        if f.degree == 0:
            val = acc * f.lc ** g.degree
            return -val if neg else val
        r = f % g
        if (f.degree * g.degree) % 2 == 1:
            neg = not neg
        acc = acc * g.lc ** (f.degree - (r.degree if r else 0))
        f, g = g, r


def poly_discriminant(f: UniPoly):
    """Disc(f) = (−1)^{d(d−1)/2} Res(f, f′) / lc(f); needs deg f ≥ 2."""
    d = f.degree
    if d < 2:
        raise ValueError("discriminant requires degree >= 2")
    res = poly_resultant(f, f.derivative())
    val = res / f.lc
    return -val if (d * (d - 1) // 2) % 2 else val


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    if f.field != g.field:
        raise TypeError("gcd of polynomials over different fields")
    while g:
        f, g = g, f % g
    return f.monic() if f else f


def poly_squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f′), normalized monic (correct in characteristic 0)."""
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UniPoly.one(f.field)
    g = poly_gcd(f, f.derivative())
    return (f // g).monic()


def poly_eval(f: UniPoly, x):
    return f.eval(x)


def poly_compose_scale(f: UniPoly, c, normalize: bool = False) -> UniPoly:
    """f(cX); with ``normalize`` return c^{−deg f}·f(cX) (monic-preserving)."""
    field = f.field
    c = field(c)
    if normalize and not c:
        raise MathDomainError("normalized scaling needs c != 0 (c^{-deg} undefined)")
    scaled = UniPoly(field, (f.coeffs[i] * c**i for i in range(len(f.coeffs))))
    if normalize:
        return scaled / c**f.degree
    return scaled
