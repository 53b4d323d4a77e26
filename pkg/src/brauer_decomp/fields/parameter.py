"""Symbolic parameter fields Q(zeta_9)(x_1, ..., x_k).

An element is num/den with num in Q[w, x] reduced modulo w^6 + w^3 + 1 and
den in Q[x] (free of w), gcd-free and with leading coefficient 1 in graded
lexicographic order.  That form is unique, so equality is syntactic.
"""

from __future__ import annotations

import flint

from .base import Field, FieldElement, FieldError
from .cyclotomic import CycElement, CyclotomicField

_UNITS_MOD_9 = (2, 4, 5, 7, 8)


class ParameterField(Field):
    kind = "parameter"

    def __init__(self, names, base: CyclotomicField | None = None):
        names = tuple(names)
        if "w" in names:
            raise FieldError("'w' is reserved for the cyclotomic generator")
        super().__init__(base or CyclotomicField())
        self.names = names
        self.ctx = flint.fmpq_mpoly_ctx.get(("w",) + names, "deglex")
        gens = self.ctx.gens()
        self._w = gens[0]
        self._vars = gens[1:]
        self._phi = self._w**6 + self._w**3 + 1
        self._one = self.ctx.constant(1)
        self._zero = self.ctx.constant(0)

    def key(self) -> tuple:
        return ("parameter", self.names)

    def describe(self) -> str:
        return f"Q(zeta9)({','.join(self.names)})"

    def characteristic(self) -> int:
        return 0

    def var(self, name: str) -> ParamElement:
        return ParamElement(self, self._vars[self.names.index(name)], self._one)

    def vars(self, *names: str) -> list[ParamElement]:
        return [self.var(n) for n in names]

    def _from_parent(self, value: CycElement):
        num = self._zero
        for i, c in enumerate(value.poly.coeffs()):
            if c != 0:
                num = num + self.ctx.constant(c) * self._w**i
        return ParamElement(self, num, self._one)

    def _coerce_foreign(self, value):
        if isinstance(value, flint.fmpq_mpoly):
            return ParamElement.make(self, value % self._phi, self._one)
        return ParamElement(self, self.ctx.constant(value), self._one)

    def _conjugate(self, poly, k: int):
        return poly.compose(self._w**k, *self._vars) % self._phi

    def to_record(self) -> dict:
        return {"kind": self.kind, "params": list(self.names), "base": "Q(zeta9)"}

    def element_to_json(self, x):
        return str(x)


class ParamElement(FieldElement):
    __slots__ = ("field", "num", "den")

    def __init__(self, field: ParameterField, num, den):
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def make(field: ParameterField, num, den) -> ParamElement:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return ParamElement(field, field._zero, field._one)
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num = num // g
                den = den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return ParamElement(field, num, den)

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ParamElement.make(self.field, self.num + o.num, self.den)
        return ParamElement.make(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    def __neg__(self):
        return ParamElement(self.field, -self.num, self.den)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        num = (self.num * o.num) % self.field._phi
        if self.den.is_one() and o.den.is_one():
            return ParamElement(self.field, num, self.den) if not num.is_zero() else self.field.zero
        return ParamElement.make(self.field, num, self.den * o.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero parameter-field element")
        f = self.field
        conj = f._one
        for k in _UNITS_MOD_9:
            conj = (conj * f._conjugate(self.num, k)) % f._phi
        norm = (self.num * conj) % f._phi
        if norm.degrees()[0] != 0:
            raise FieldError("norm to Q(x) still involves w; representation corrupted")
        return ParamElement.make(f, (self.den * conj) % f._phi, norm)

    def __eq__(self, other):
        try:
            o = self._try(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__
