"""Dense univariate polynomials over an arbitrary field node."""

from __future__ import annotations

from .base import FieldError
from .linalg import nullspace


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __add__(self, other):
        other = _as_poly(self.field, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(self.field, other))

    def __rsub__(self, other):
        return _as_poly(self.field, other) - self

    def __mul__(self, other):
        other = _as_poly(self.field, other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly(self.field, [1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.field.zero] * max(0, len(rem) - other.degree)
        inv = other.lc().inverse()
        while len(rem) - 1 >= other.degree and rem:
            shift = len(rem) - 1 - other.degree
            c = rem[-1] * inv
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(self.field, q), Poly(self.field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> Poly:
        inv = self.lc().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.field.zero if not hasattr(x, "field") else x.field.zero
        return acc

    def derivative(self) -> Poly:
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        other = _as_poly(self.field, other)
        return len(self.coeffs) == len(other.coeffs) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return "Poly(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def to_json(self):
        return [self.field.element_to_json(c) for c in self.coeffs]


def _as_poly(field, x) -> Poly:
    return x if isinstance(x, Poly) else Poly(field, [x])


def cubic_discriminant(f: Poly):
    """Discriminant of a monic cubic via its depressed form s^3 + p s + q."""
    if f.degree != 3:
        raise FieldError("cubic_discriminant needs degree 3")
    f = f.monic()
    a2, a1, a0 = f[2], f[1], f[0]
    # s -> s - a2/3
    p = a1 - a2 * a2 / 3
    q = a2 * a2 * a2 * 2 / 27 - a2 * a1 / 3 + a0
    return -4 * p * p * p - 27 * q * q


def discriminant(f: Poly):
    if f.degree == 1:
        return f.field.one
    if f.degree == 2:
        g = f.monic()
        return g[1] * g[1] - 4 * g[0]
    return cubic_discriminant(f)


def field_sqrt(x):
    """A square root of x in its own field, or None.  Supported where the oracle lives."""
    from .finite import FFElement
    from .kummer import KummerElement
    from .ratfunc import RFElement

    if x.is_zero():
        return x
    if isinstance(x, (RFElement, FFElement)):
        return x.sqrt()
    if isinstance(x, KummerElement) and x.field.degree == 2:
        A, B = x.coeffs
        K, D = x.field, x.field.radicand
        if B.is_zero():
            r = field_sqrt(A)
            if r is not None:
                return K(r)
            r = field_sqrt(A / D)
            return None if r is None else K.from_coeffs([0, r])
        n = field_sqrt(A * A - D * B * B)
        if n is None:
            return None
        for sign in (1, -1):
            u = field_sqrt((A + sign * n) / 2)
            if u is not None and not u.is_zero():
                v = B / (2 * u)
                cand = K.from_coeffs([u, v])
                if cand * cand == x:
                    return cand
        return None
    raise FieldError(f"square roots not supported in {x.field}")


def factor_low_degree(f: Poly):
    """Factor a polynomial of degree <= 2 over its field: (lc, [(monic factor, mult)])."""
    if f.degree <= 0:
        return f.lc() if f.coeffs else f.field.zero, []
    lc = f.lc()
    g = f.monic()
    if g.degree == 1:
        return lc, [(g, 1)]
    if g.degree == 2:
        disc = g[1] * g[1] - 4 * g[0]
        r = field_sqrt(disc)
        if r is None:
            return lc, [(g, 1)]
        r1 = (-g[1] + r) / 2
        r2 = (-g[1] - r) / 2
        if r1 == r2:
            return lc, [(Poly(f.field, [-r1, 1]), 2)]
        pair = sorted([Poly(f.field, [-r1, 1]), Poly(f.field, [-r2, 1])], key=lambda p: str(p.coeffs[0]))
        return lc, [(pair[0], 1), (pair[1], 1)]
    raise FieldError("factor_low_degree handles degree <= 2 only")


def coordinates(x, sub):
    """Coordinates of x over the subfield ``sub`` in the flattened Kummer power basis."""
    if x.field == sub:
        return [x]
    out = []
    for c in x.coeffs:
        out.extend(coordinates(c, sub))
    return out


def minimal_polynomial(x, over=None) -> Poly:
    """Monic minimal polynomial of a tower element over ``over`` (default: the parent)."""
    K = x.field
    over = over or K.parent
    if over is None:
        raise FieldError("element of a base field has no parent to descend to")
    powers = [K.one]
    while True:
        powers.append(powers[-1] * x)
        cols = [coordinates(p, over) for p in powers]
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))]
        ns = nullspace(rows, over)
        if ns:
            v = ns[-1]
            # the lowest-degree relation has support ending at the last column
            return Poly(over, v).monic()
        if len(powers) > len(cols[0]) + 1:
            raise FieldError("minimal polynomial search failed")


def min_poly_disc(x, over=None):
    """Minimal polynomial and discriminant (degree-1 convention: 1)."""
    f = minimal_polynomial(x, over)
    return f, discriminant(f)


def inverse_mod(f: Poly, m: Poly) -> Poly:
    """f^{-1} mod m by the extended Euclidean algorithm."""
    r0, r1 = m, f % m
    s0, s1 = Poly(m.field, []), Poly(m.field, [1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise FieldError("polynomial is not invertible modulo m")
    return (s0 * Poly(m.field, [r0[0].inverse()])) % m


def compose_mod(f: Poly, g: Poly, m: Poly) -> Poly:
    """f(g) mod m, Horner style."""
    out = Poly(m.field, [])
    for c in reversed(f.coeffs):
        out = (out * g + Poly(m.field, [c])) % m
    return out
