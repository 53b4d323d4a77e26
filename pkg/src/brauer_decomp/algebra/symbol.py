"""Symbol algebras (a, b)_n: x^n = a, y^n = b, y x = rho_n x y."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..fields.base import Field, FieldError
from .sca import StructureConstantAlgebra


@dataclass(frozen=True)
class SymbolData:
    a: object
    b: object
    n: int
    field: Field

    def __post_init__(self):
        if self.field(self.a).is_zero() or self.field(self.b).is_zero():
            raise FieldError("symbol slots must be nonzero")

    @property
    def rho(self):
        return self.field.root_of_unity(self.n)

    def to_json(self) -> dict:
        F = self.field
        return {"a": F.element_to_json(F(self.a)), "b": F.element_to_json(F(self.b)), "degree": self.n}


def _monomial_table(n: int):
    """x^i y^j * x^k y^l = rho^(j k) a^[i+k >= n] b^[j+l >= n] x^.. y^..; entries as exponent triples."""
    idx = lambda i, j: i * n + j  # noqa: E731
    table = {}
    for i, j, k, l in product(range(n), repeat=4):
        # y^j x^k = rho^(jk) x^k y^j
        table[(idx(i, j), idx(k, l))] = (idx((i + k) % n, (j + l) % n), (j * k, (i + k) // n, (j + l) // n))
    return table


def _monomial_associative(n: int, table) -> bool:
    """Exhaustive associativity on all basis triples, on exponent vectors (rho, a, b)."""
    m = n * n
    for p, q, r in product(range(m), repeat=3):
        k1, e1 = table[(p, q)]
        k2, e2 = table[(k1, r)]
        k3, e3 = table[(q, r)]
        k4, e4 = table[(p, k3)]
        if k2 != k4:
            return False
        if ((e1[0] + e2[0] - e3[0] - e4[0]) % n, e1[1] + e2[1] - e3[1] - e4[1], e1[2] + e2[2] - e3[2] - e4[2]) != (0, 0, 0):
            return False
    return True


@lru_cache(maxsize=None)
def _checked_table(n: int):
    mono = _monomial_table(n)
    if not _monomial_associative(n, mono):
        raise AssertionError("symbol multiplication table is not associative")
    return mono


def build_symbol_algebra(data: SymbolData, check: bool = True) -> StructureConstantAlgebra:
    F, n = data.field, data.n
    a, b, rho = F(data.a), F(data.b), data.rho
    mono = _checked_table(n) if check else _monomial_table(n)
    rpow = [rho**k for k in range(n)]
    table = {}
    for key, (k, (er, ea, eb)) in mono.items():
        c = rpow[er % n]
        if ea:
            c = c * a
        if eb:
            c = c * b
        table[key] = {k: c}
    labels = []
    for i, j in product(range(n), repeat=2):
        x = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        y = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
        labels.append("*".join(s for s in (x, y) if s) or "1")
    A = StructureConstantAlgebra(F, labels, table, 0, n, f"({data.a},{data.b})_{n}")
    A.gens = (A.basis(n), A.basis(1))  # x, y
    return A
