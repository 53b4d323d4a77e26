"""Prime-degree Kummer extensions K(s), s^d = a, with a primitive d-th root of unity in K."""

from __future__ import annotations

from .base import Field, FieldElement, FieldError
from .finite import _is_prime


class KummerField(Field):
    kind = "kummer-extension"

    def __init__(self, parent: Field, degree: int, radicand, name: str = "s", check: bool = True):
        if not _is_prime(degree):
            raise FieldError(f"Kummer degree must be prime, got {degree}")
        super().__init__(parent)
        self.degree = degree
        self.radicand = parent(radicand)
        if self.radicand.is_zero():
            raise FieldError("zero radicand")
        self.name = name
        # raises FieldError when the parent lacks the root
        self.zeta = parent.root_of_unity(degree) if degree > 2 else parent(-1)
        if check and is_dth_power(self.radicand, degree):
            raise FieldError(f"radicand {self.radicand} is a {degree}-th power in {parent}")

    def key(self) -> tuple:
        return ("kummer", self.parent.key(), self.degree, self.name, str(self.radicand))

    def describe(self) -> str:
        return f"{self.parent.describe()}[{self.name}|{self.name}^{self.degree}={self.radicand}]"

    def gen(self) -> KummerElement:
        z = self.parent.zero
        return KummerElement(self, (z, self.parent.one) + (z,) * (self.degree - 2))

    def from_coeffs(self, coeffs) -> KummerElement:
        coeffs = [self.parent(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise FieldError("too many coefficients")
        coeffs += [self.parent.zero] * (self.degree - len(coeffs))
        return KummerElement(self, tuple(coeffs))

    def _from_parent(self, value):
        z = self.parent.zero
        return KummerElement(self, (value,) + (z,) * (self.degree - 1))

    def _coerce_foreign(self, value):
        return self._from_parent(self.parent(value))

    def twist(self, x: KummerElement, level: Field, zeta) -> KummerElement:
        """Apply the automorphism s_level -> zeta * s_level, identity on the other levels."""
        if level == self:
            out, z = [], self.parent.one
            for c in x.coeffs:
                out.append(c * z)
                z = z * zeta
            return KummerElement(self, tuple(out))
        if not isinstance(self.parent, KummerField):
            raise FieldError(f"{level} is not a level of {self}")
        return KummerElement(self, tuple(self.parent.twist(c, level, zeta) for c in x.coeffs))

    def conjugates(self, x: KummerElement) -> list[KummerElement]:
        out, z = [x], self.parent.one
        for _ in range(self.degree - 1):
            z = z * self.zeta
            out.append(self.twist(x, self, z))
        return out

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "name": self.name,
            "radicand": self.parent.element_to_json(self.radicand),
        }

    def element_to_json(self, x):
        return [self.parent.element_to_json(c) for c in x.coeffs]

    def element_from_json(self, data):
        return self.from_coeffs([self.parent.element_from_json(c) for c in data])


class KummerElement(FieldElement):
    __slots__ = ("field", "coeffs")

    def __init__(self, field: KummerField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return KummerElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return KummerElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        A, B = self.coeffs, o.coeffs
        nzA = [i for i in range(d) if not A[i].is_zero()]
        nzB = [j for j in range(d) if not B[j].is_zero()]
        zero = self.field.parent.zero
        lo = [zero] * d
        hi = [zero] * d
        for i in nzA:
            for j in nzB:
                k = i + j
                if k < d:
                    lo[k] = lo[k] + A[i] * B[j]
                else:
                    hi[k - d] = hi[k - d] + A[i] * B[j]
        a = self.field.radicand
        out = tuple(lo[k] + a * hi[k] if not hi[k].is_zero() else lo[k] for k in range(d))
        return KummerElement(self.field, out)

    def scale(self, c) -> KummerElement:
        """Multiply by an element of the parent field."""
        c = self.field.parent(c)
        return KummerElement(self.field, tuple(a * c for a in self.coeffs))

    def norm(self):
        """N_{K(s)/K}(x) as an element of the parent."""
        d = self.field.degree
        c = self.coeffs
        a = self.field.radicand
        if d == 2:
            return c[0] * c[0] - a * c[1] * c[1]
        if d == 3:
            return c[0] ** 3 + a * c[1] ** 3 + a * a * c[2] ** 3 - 3 * a * c[0] * c[1] * c[2]
        prod = self
        for y in self.field.conjugates(self)[1:]:
            prod = prod * y
        return prod.coeffs[0]

    def trace(self):
        return self.coeffs[0] * self.field.degree

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Kummer extension")
        if self.in_parent():
            return self.field._from_parent(self.coeffs[0].inverse())
        conj = self.field.conjugates(self)[1:]
        prod = conj[0]
        for y in conj[1:]:
            prod = prod * y
        n = (self * prod).coeffs[0]
        if n.is_zero():
            raise FieldError(f"{self} is a zero divisor: radicand is a {self.field.degree}-th power")
        return prod.scale(n.inverse())

    def in_parent(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1:])

    def __eq__(self, other):
        try:
            o = self._try(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self):
        name = self.field.name
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
            if not mono:
                terms.append(f"({c})")
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__


def is_dth_power(x, d: int) -> bool:
    """Whether x is a d-th power in its field; only decided where cheap, else False."""
    from .ratfunc import RFElement

    if isinstance(x, RFElement):
        from ..oracle.factor import rf_is_power

        return rf_is_power(x, d)
    if isinstance(x, KummerElement) and x.in_parent():
        c = x.coeffs[0]
        if x.field.degree != d:
            # [K(s):K] prime to d: c is a d-th power in K(s) iff it is one in K
            return is_dth_power(c, d)
        # Kummer theory: c in K^d * <radicand>
        a = x.field.radicand
        return any(is_dth_power(c * a ** (-k), d) for k in range(d))
    return False
