"""Common machinery for field nodes and their elements."""

from __future__ import annotations

from typing import Any


class FieldError(ArithmeticError):
    """Raised for incompatible owners, division by zero, missing roots of unity."""


class Field:
    """A node in a tower of exact fields.

    Subclasses set ``kind`` and implement ``_coerce_foreign`` plus the element
    class.  Fields compare equal when their defining data agree, so a tower
    rebuilt from a certificate interoperates with the original.
    """

    kind = "abstract"

    def __init__(self, parent: Field | None = None):
        self.parent = parent

    # -- identity -------------------------------------------------------
    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, Field) and self.key() == other.key())

    def __hash__(self) -> int:
        return hash(self.key())

    @property
    def id(self) -> str:
        return self.describe()

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.describe()

    # -- tower ----------------------------------------------------------
    def tower(self) -> list[Field]:
        out, node = [], self
        while node is not None:
            out.append(node)
            node = node.parent
        return out

    def contains(self, other: Field) -> bool:
        return any(node == other for node in self.tower())

    def base(self) -> Field:
        return self.tower()[-1]

    # -- elements -------------------------------------------------------
    def __call__(self, value: Any):
        if getattr(value, "field", None) is not None:
            if value.field == self:
                return value
            if value.field.contains(self):
                raise FieldError(f"cannot coerce {value.field} element into subfield {self}")
            if self.contains(value.field):
                return self._lift(value)
            raise FieldError(f"no common tower between {value.field} and {self}")
        return self._coerce_foreign(value)

    def _lift(self, value):
        # default: go through the parent
        assert self.parent is not None
        return self._from_parent(self.parent(value))

    def _from_parent(self, value):
        raise NotImplementedError

    def _coerce_foreign(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def characteristic(self) -> int:
        return self.base().characteristic()

    def root_of_unity(self, n: int):
        """Fixed primitive n-th root of unity, inherited from the base of the tower."""
        return self(self.base().root_of_unity(n))

    def to_record(self) -> dict:
        raise NotImplementedError

    # element (de)serialisation
    def element_to_json(self, x) -> Any:
        raise NotImplementedError

    def element_from_json(self, data: Any):
        raise NotImplementedError


class FieldElement:
    """Mixin providing the derived operators on top of add/mul/neg/inv."""

    __slots__ = ()

    def _other(self, other):
        return self.field(other)

    def _try(self, other):
        """Coerce ``other`` into our field, or None if it lives higher in the tower."""
        f = getattr(other, "field", None)
        if f is not None and f != self.field and f.contains(self.field):
            return None
        return self.field(other)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._other(other) - self

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __ne__(self, other):
        return not self == other

    def is_one(self) -> bool:
        return self == self.field.one
