"""The cyclotomic base Q(zeta_9) = Q[w]/(w^6 + w^3 + 1)."""

from __future__ import annotations

from fractions import Fraction

import flint

from .base import Field, FieldElement, FieldError

PHI9 = flint.fmpq_poly([1, 0, 0, 1, 0, 0, 1])


class CyclotomicField(Field):
    kind = "cyclotomic-rational"
    conductor = 9

    def __init__(self):
        super().__init__(None)

    def key(self) -> tuple:
        return ("cyclotomic-rational", 9)

    def describe(self) -> str:
        return "Q(zeta9)"

    def characteristic(self) -> int:
        return 0

    def gen(self) -> CycElement:
        return CycElement(self, flint.fmpq_poly([0, 1]))

    def _coerce_foreign(self, value):
        if isinstance(value, flint.fmpq_poly):
            return CycElement(self, value % PHI9)
        if isinstance(value, Fraction):
            value = flint.fmpq(value.numerator, value.denominator)
        return CycElement(self, flint.fmpq_poly([value]))

    def root_of_unity(self, n: int):
        if 9 % n:
            raise FieldError(f"Q(zeta9) has no primitive {n}-th root of unity")
        return self.gen() ** (9 // n)

    def to_record(self) -> dict:
        return {"kind": self.kind, "conductor": 9, "minpoly": "w^6+w^3+1"}

    def element_to_json(self, x):
        return [str(c) for c in x.poly.coeffs()]

    def element_from_json(self, data):
        return self(flint.fmpq_poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in data]))


class CycElement(FieldElement):
    __slots__ = ("field", "poly")

    def __init__(self, field: CyclotomicField, poly):
        self.field = field
        self.poly = poly

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return CycElement(self.field, self.poly + o.poly)

    def __neg__(self):
        return CycElement(self.field, -self.poly)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return CycElement(self.field, (self.poly * o.poly) % PHI9)

    def inverse(self):
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta9)")
        g, s, _ = self.poly.xgcd(PHI9)
        return CycElement(self.field, (s / g) % PHI9)

    def __eq__(self, other):
        try:
            o = self._try(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.poly == o.poly

    def __hash__(self):
        return hash(tuple(str(c) for c in self.poly.coeffs()))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self):
        return str(self.poly).replace("x", "w")

    __repr__ = __str__
