"""Finite-dimensional algebras given by sparse structure constants."""

from __future__ import annotations

import random
from itertools import product

from ..fields.base import FieldError
from ..fields.linalg import nullspace


class Algebra:
    """Protocol shared by table algebras and crossed products.

    Subclasses provide ``_mul(x, y)`` on raw data, ``coords(x)`` and
    ``from_coords(vec)`` over ``base``, plus ``basis(i)``.
    """

    base = None
    dim = 0
    degree = 0
    labels: list[str] = []

    def element(self, data) -> AlgebraElement:
        return AlgebraElement(self, data)

    def zero(self) -> AlgebraElement:
        return self.from_coords([self.base.zero] * self.dim)

    def one(self) -> AlgebraElement:
        raise NotImplementedError

    def scalar(self, c) -> AlgebraElement:
        return self.one().scale(self.base(c))

    def basis_elements(self) -> list[AlgebraElement]:
        return [self.basis(i) for i in range(self.dim)]

    # linear algebra over the base ---------------------------------------
    def reduced_trace(self, x: AlgebraElement):
        raise NotImplementedError

    def commutant(self, gens) -> list[AlgebraElement]:
        """Basis of {y : y g = g y for all g in gens}."""
        F = self.base
        rows = []
        basis = self.basis_elements()
        for g in gens:
            cols = [self.coords(b * g - g * b) for b in basis]
            rows.extend([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])
        rows = [r for r in rows if any(not c.is_zero() for c in r)]
        return [self.from_coords(v) for v in nullspace(rows, F, self.dim)]


class AlgebraElement:
    __slots__ = ("algebra", "data")

    def __init__(self, algebra: Algebra, data):
        self.algebra = algebra
        self.data = data

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return self.algebra.scalar(other)
        if other.algebra is not self.algebra:
            raise FieldError("elements of different algebras")
        return other

    def __add__(self, other):
        return self.algebra._add(self, self._check(other))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-self.algebra.base.one)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return self.algebra._mul(self, self._check(other))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("use inverse() for negative powers")
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c):
        return self.algebra._scale(self, c)

    def coords(self):
        return self.algebra.coords(self)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords())

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coords()))

    def commutes_with(self, other) -> bool:
        return (self * other - other * self).is_zero()

    def __repr__(self):
        return self.algebra.format(self)


class StructureConstantAlgebra(Algebra):
    """Algebra with basis e_0..e_{n-1}, table[(i, j)] = {k: c} meaning e_i e_j = sum c e_k."""

    def __init__(self, base, labels, table, unit_index: int = 0, degree: int | None = None, name: str = "A"):
        self.base = base
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = table
        self.unit_index = unit_index
        self.degree = degree or _isqrt(self.dim)
        self.name = name

    # raw arithmetic on {index: coeff} --------------------------------
    def basis(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {i: self.base.one})

    def one(self) -> AlgebraElement:
        return self.basis(self.unit_index)

    def scalar(self, c) -> AlgebraElement:
        c = self.base(c)
        return AlgebraElement(self, {self.unit_index: c} if not c.is_zero() else {})

    def from_coords(self, vec) -> AlgebraElement:
        return AlgebraElement(self, {i: self.base(c) for i, c in enumerate(vec) if not self.base(c).is_zero()})

    def coords(self, x: AlgebraElement) -> list:
        z = self.base.zero
        return [x.data.get(i, z) for i in range(self.dim)]

    def _add(self, x, y):
        out = dict(x.data)
        for k, c in y.data.items():
            s = out[k] + c if k in out else c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return AlgebraElement(self, out)

    def _scale(self, x, c):
        c = self.base(c)
        if c.is_zero():
            return AlgebraElement(self, {})
        return AlgebraElement(self, {k: v * c for k, v in x.data.items()})

    def _mul(self, x, y):
        out: dict = {}
        for i, a in x.data.items():
            for j, b in y.data.items():
                ab = a * b
                for k, c in self.table.get((i, j), {}).items():
                    v = ab * c
                    out[k] = out[k] + v if k in out else v
        return AlgebraElement(self, {k: v for k, v in out.items() if not v.is_zero()})

    def format(self, x) -> str:
        if not x.data:
            return "0"
        return " + ".join(f"({c})*{self.labels[k]}" for k, c in sorted(x.data.items()))

    # structure ---------------------------------------------------------
    def regular_traces(self) -> list:
        """Tr(L_{e_j}) for each basis element."""
        F = self.base
        out = []
        for j in range(self.dim):
            s = F.zero
            for i in range(self.dim):
                c = self.table.get((j, i), {}).get(i)
                if c is not None:
                    s = s + c
            out.append(s)
        return out

    def reduced_trace(self, x: AlgebraElement):
        tr = self.regular_traces() if not hasattr(self, "_tr") else self._tr
        self._tr = tr
        s = self.base.zero
        for j, c in x.data.items():
            s = s + c * tr[j]
        return s / self.degree

    def check_unit(self) -> bool:
        e = self.one()
        return all(e * b == b and b * e == b for b in self.basis_elements())

    def check_associativity(self, mode: str = "auto", samples: int = 200, seed: int = 0) -> bool:
        """Associativity on basis triples: all of them, or a seeded random sample."""
        n = self.dim
        if mode == "auto":
            mode = "exhaustive" if n <= 27 else "random"
        if mode == "exhaustive":
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        B = self.basis_elements()
        for i, j, k in triples:
            if (B[i] * B[j]) * B[k] != B[i] * (B[j] * B[k]):
                return False
        return True

    def export_table(self) -> list:
        """Sparse triples (i, j, [(k, coeff), ...]) with coefficients serialized."""
        F = self.base
        return [
            [i, j, [[k, F.element_to_json(c)] for k, c in sorted(entry.items())]]
            for (i, j), entry in sorted(self.table.items())
        ]


def _isqrt(n: int) -> int:
    r = int(round(n**0.5))
    return r if r * r == n else n


def tensor(A: StructureConstantAlgebra, B: StructureConstantAlgebra) -> StructureConstantAlgebra:
    if A.base != B.base:
        raise FieldError("tensor product needs a common base field")
    nB = B.dim
    labels = [f"{la}(x){lb}" for la in A.labels for lb in B.labels]
    table = {}
    for (i, j), ea in A.table.items():
        for (k, l), eb in B.table.items():
            entry = {}
            for p, c in ea.items():
                for q, d in eb.items():
                    entry[p * nB + q] = c * d
            table[(i * nB + k, j * nB + l)] = entry
    return StructureConstantAlgebra(A.base, labels, table, A.unit_index * nB + B.unit_index, A.degree * B.degree, f"{A.name}(x){B.name}")


def opposite(A: StructureConstantAlgebra) -> StructureConstantAlgebra:
    table = {(j, i): entry for (i, j), entry in A.table.items()}
    return StructureConstantAlgebra(A.base, A.labels, table, A.unit_index, A.degree, f"{A.name}^op")


def tensor_opposite(A, B=None, op: str = "tensor"):
    if op == "tensor":
        return tensor(A, B)
    if op == "opposite":
        return opposite(A)
    raise ValueError(f"unknown op {op!r}")


def center_and_trace(A: Algebra, generators=None):
    """(basis of the center, reduced-trace functional)."""
    gens = generators if generators is not None else A.basis_elements()
    center = A.commutant(gens)
    return center, A.reduced_trace
