"""Random Z/3 x Z/3 crossed products over F_q(t) with a known Brauer class.

Start from (E, G, mu1/t1, mu2 t2, rho9^{-1}), whose class is
(f1, f2)_9 + (f2, mu1)_3 + (f1, mu2)_3, and apply a coboundary (w1, w2) so
that b1, b2 and u are no longer monomial.  The class is unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..algebra.crossed import CrossedProductPresentation, bicyclic_field, coboundary
from ..brauer import BrauerExpr
from ..fields.kummer import KummerField, is_dth_power
from ..fields.ratfunc import RationalFunctionField


@dataclass(frozen=True)
class Specialization:
    F: RationalFunctionField
    f1: object
    f2: object
    mu1: object
    mu2: object
    w1: object
    w2: object
    presentation: CrossedProductPresentation

    @property
    def E(self) -> KummerField:
        return self.presentation.E

    def known_class(self) -> BrauerExpr:
        F = self.F
        return (
            BrauerExpr.symbol(F, self.f1, self.f2, 9, provenance="input:(f1,f2)_9")
            + BrauerExpr.symbol(F, self.f2, self.mu1, 3, provenance="input:(f2,mu1)_3")
            + BrauerExpr.symbol(F, self.f1, self.mu2, 3, provenance="input:(f1,mu2)_3")
        )

    def to_json(self) -> dict:
        F, E = self.F, self.E
        return {
            "f1": F.element_to_json(self.f1),
            "f2": F.element_to_json(self.f2),
            "mu1": F.element_to_json(self.mu1),
            "mu2": F.element_to_json(self.mu2),
            "w1": E.element_to_json(self.w1),
            "w2": E.element_to_json(self.w2),
        }

    @classmethod
    def from_json(cls, F: RationalFunctionField, data: dict) -> Specialization:
        f1, f2 = F.element_from_json(data["f1"]), F.element_from_json(data["f2"])
        E = bicyclic_field(F, f1, f2)
        return build_specialization(
            F, f1, f2, F.element_from_json(data["mu1"]), F.element_from_json(data["mu2"]),
            E.element_from_json(data["w1"]), E.element_from_json(data["w2"]),
        )


def build_specialization(F, f1, f2, mu1, mu2, w1, w2) -> Specialization:
    E = bicyclic_field(F, f1, f2)
    t1, t2 = E(E.parent.gen()), E.gen()
    rho9 = F.root_of_unity(9)
    base = CrossedProductPresentation(E, E(mu1) / t1, E(mu2) * t2, E(rho9.inverse()))
    pres = coboundary(base, E(w1), E(w2))
    pres.check()
    return Specialization(F, F(f1), F(f2), F(mu1), F(mu2), E(w1), E(w2), pres)


def _random_poly(rng: random.Random, F, degree: int, monic: bool = True):
    p = F.p
    coeffs = [rng.randrange(p) for _ in range(degree)] + [1 if monic else rng.randrange(1, p)]
    return F.from_polys(F.poly(coeffs))


def _random_unit_w(rng: random.Random, E, terms: int = 3):
    """1 + a few constant multiples of t1^i t2^j; small so degrees stay low."""
    F = E.parent.parent
    t1, t2 = E(E.parent.gen()), E.gen()
    w = E.one
    for _ in range(terms - 1):
        i, j = rng.randrange(3), rng.randrange(3)
        if i == j == 0:
            continue
        w = w + t1**i * t2**j * E(F(rng.randrange(1, F.p)))
    return w


def random_specialization(rng: random.Random, F: RationalFunctionField, degree_bound: int = 1, attempts: int = 50) -> Specialization:
    """A presentation with non-split E and invertible twisting data; degeneracies resampled."""
    last = None
    for _ in range(attempts):
        f1 = _random_poly(rng, F, rng.randint(1, degree_bound))
        f2 = _random_poly(rng, F, rng.randint(1, degree_bound))
        mu1 = F(rng.randrange(2, F.p))
        mu2 = _random_poly(rng, F, rng.randint(0, degree_bound), monic=False)
        if f1 == f2 or any(is_dth_power(f1**i * f2**j, 3) for i, j in ((1, 0), (0, 1), (1, 1), (1, 2))):
            continue
        try:
            E = bicyclic_field(F, f1, f2)
            w1 = _random_unit_w(rng, E)
            w2 = _random_unit_w(rng, E)
            return build_specialization(F, f1, f2, mu1, mu2, w1, w2)
        except (ArithmeticError, ValueError) as exc:
            last = exc
            continue
    raise RuntimeError(f"no valid specialization in {attempts} attempts: {last}")
