"""Prime fields F_p."""

from __future__ import annotations

from functools import cached_property

from .base import Field, FieldElement, FieldError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField(Field):
    kind = "finite"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"only prime fields are supported, got q={p}")
        super().__init__(None)
        self.p = p

    def key(self) -> tuple:
        return ("finite", self.p)

    def describe(self) -> str:
        return f"GF({self.p})"

    def characteristic(self) -> int:
        return self.p

    def _coerce_foreign(self, value):
        return FFElement(self, int(value) % self.p)

    @cached_property
    def generator(self) -> int:
        """Smallest primitive root mod p."""
        factors = _prime_factors(self.p - 1)
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // r, self.p) != 1 for r in factors):
                return g
        return 1  # p == 2

    def root_of_unity(self, n: int):
        if (self.p - 1) % n:
            raise FieldError(f"GF({self.p}) has no primitive {n}-th root of unity")
        return self(pow(self.generator, (self.p - 1) // n, self.p))

    def to_record(self) -> dict:
        return {"kind": self.kind, "q": self.p}

    def element_to_json(self, x):
        return x.value

    def element_from_json(self, data):
        return self(int(data))

    def elements(self):
        return [self(i) for i in range(self.p)]


class FFElement(FieldElement):
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def __add__(self, other):
        other = self._try(other)
        if other is None:
            return NotImplemented
        return FFElement(self.field, (self.value + other.value) % self.field.p)

    def __neg__(self):
        return FFElement(self.field, -self.value % self.field.p)

    def __mul__(self, other):
        other = self._try(other)
        if other is None:
            return NotImplemented
        return FFElement(self.field, self.value * other.value % self.field.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return FFElement(self.field, pow(self.value, self.field.p - 2, self.field.p))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FFElement(self.field, pow(self.value, e, self.field.p))

    def __eq__(self, other):
        try:
            other = self._try(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return str(self.value)

    def sqrt(self):
        """A square root, or None.  Brute force: p is small."""
        p = self.field.p
        for r in range(p):
            if r * r % p == self.value:
                return FFElement(self.field, r)
        return None

    def order(self) -> int:
        if self.value == 0:
            raise FieldError("zero has no multiplicative order")
        p, k = self.field.p, 1
        x = self.value
        while x != 1:
            x = x * self.value % p
            k += 1
        return k
