"""Rational function fields F_p(t), backed by flint's nmod_poly."""

from __future__ import annotations

import flint

from .base import Field, FieldElement, FieldError
from .finite import FFElement, FiniteField


def poly_key(f: flint.nmod_poly) -> tuple[int, ...]:
    return tuple(int(c) for c in f.coeffs())


def poly_str(f: flint.nmod_poly, var: str = "t") -> str:
    coeffs = [int(c) for c in f.coeffs()]
    if not coeffs:
        return "0"
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


class RationalFunctionField(Field):
    """F_p(t).  Elements are reduced fractions with monic denominator."""

    kind = "rational-function"

    def __init__(self, constants: FiniteField | int, var: str = "t"):
        if isinstance(constants, int):
            constants = FiniteField(constants)
        super().__init__(constants)
        self.constants = constants
        self.p = constants.p
        self.var = var
        self._one_poly = flint.nmod_poly([1], self.p)
        self._zero_poly = flint.nmod_poly([], self.p)

    def key(self) -> tuple:
        return ("rational-function", self.p, self.var)

    def describe(self) -> str:
        return f"GF({self.p})({self.var})"

    def poly(self, coeffs) -> flint.nmod_poly:
        return flint.nmod_poly([int(c) for c in coeffs], self.p)

    def gen(self) -> RFElement:
        return RFElement(self, flint.nmod_poly([0, 1], self.p), self._one_poly)

    def from_polys(self, num, den=None) -> RFElement:
        if den is None:
            den = self._one_poly
        return RFElement.make(self, num, den)

    def _from_parent(self, value: FFElement):
        return RFElement(self, flint.nmod_poly([value.value], self.p), self._one_poly)

    def _coerce_foreign(self, value):
        if isinstance(value, flint.nmod_poly):
            return RFElement(self, value, self._one_poly)
        if isinstance(value, str):
            from ..parse import parse_field_element

            return parse_field_element(self, value)
        return RFElement(self, flint.nmod_poly([int(value) % self.p], self.p), self._one_poly)

    def to_record(self) -> dict:
        return {"kind": self.kind, "q": self.p, "var": self.var}

    def element_to_json(self, x):
        return str(x)

    def element_from_json(self, data):
        return self(str(data))


class RFElement(FieldElement):
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num, den):
        # callers guarantee canonical form; use make() otherwise
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def make(field: RationalFunctionField, num, den) -> RFElement:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RFElement(field, field._zero_poly, field._one_poly)
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lc = int(den.leading_coefficient())
        if lc != 1:
            inv = pow(lc, field.p - 2, field.p)
            num = num * inv
            den = den * inv
        return RFElement(field, num, den)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.den, o.den
        if d1 == d2:
            return RFElement.make(self.field, self.num + o.num, d1)
        if d1.degree() == 0 or d2.degree() == 0:
            # one side is a polynomial: nothing cancels
            den = d2 if d1.degree() == 0 else d1
            num = self.num * d2 + o.num * d1
            if num.is_zero():
                return self.field.zero
            return RFElement(self.field, num, den)
        # Henrici: only the gcd of the denominators can cancel
        g = d1.gcd(d2)
        if g.degree() == 0:
            num = self.num * d2 + o.num * d1
            if num.is_zero():
                return self.field.zero
            return RFElement(self.field, num, d1 * d2)
        c1, c2 = d1 // g, d2 // g
        return RFElement.make(self.field, self.num * c2 + o.num * c1, c1 * d2)

    def __neg__(self):
        return RFElement(self.field, -self.num, self.den)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if self.den.degree() == 0 and o.den.degree() == 0:
            prod = self.num * o.num
            if prod.is_zero():
                return self.field.zero
            return RFElement(self.field, prod, self.den)
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if n1.is_zero() or n2.is_zero():
            return self.field.zero
        # Henrici: cross-cancel, the result is then already reduced
        if d2.degree() > 0:
            g = n1.gcd(d2)
            if g.degree() > 0:
                n1, d2 = n1 // g, d2 // g
        if d1.degree() > 0:
            g = n2.gcd(d1)
            if g.degree() > 0:
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        lc = int(den.leading_coefficient())
        if lc != 1:
            inv = pow(lc, self.field.p - 2, self.field.p)
            num, den = num * inv, den * inv
        return RFElement(self.field, num, den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RFElement.make(self.field, self.den, self.num)

    def __eq__(self, other):
        try:
            o = self._try(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((poly_key(self.num), poly_key(self.den)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> FFElement:
        if not self.is_constant():
            raise FieldError(f"{self} is not constant")
        c = int(self.num[0]) if not self.num.is_zero() else 0
        return self.field.constants(c)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def degree(self) -> int:
        """deg num - deg den (minus the valuation at infinity)."""
        if self.num.is_zero():
            raise FieldError("degree of zero")
        return self.num.degree() - self.den.degree()

    def __call__(self, value):
        """Evaluate at a point of the constant field (None on a pole)."""
        p = self.field.p
        v = int(value) % p
        d = int(self.den(v))
        if d == 0:
            return None
        return self.field.constants(int(self.num(v)) * pow(d, p - 2, p))

    def sqrt(self):
        """Square root in F_p(t), or None."""
        try:
            return RFElement.make(self.field, self.num.sqrt(), self.den.sqrt())
        except Exception:
            return None

    def split_square(self):
        """(r, c) with self = r c^2 and r a squarefree polynomial."""
        if self.num.is_zero():
            raise ZeroDivisionError("split_square of zero")
        p = self.field.p
        poly = self.num * self.den
        lc, factors = poly.factor()
        r = flint.nmod_poly([int(lc)], p)
        c = flint.nmod_poly([1], p)
        for f, e in factors:
            if e % 2:
                r = r * f
            c = c * f ** (e // 2)
        # num/den = num den / den^2
        return RFElement(self.field, r, self.field._one_poly), RFElement.make(self.field, c, self.den)

    def __str__(self):
        var = self.field.var
        if self.den.degree() == 0:
            return poly_str(self.num, var)
        return f"({poly_str(self.num, var)})/({poly_str(self.den, var)})"

    __repr__ = __str__
