"""Local invariants of symbol algebras over F_p(t) and its Kummer extensions.

For a symbol (a, b)_n and a place Q with residue field of order q_Q, the
invariant is k/n where T_Q(a, b)^((q_Q - 1)/n) = rho_n^k.  Since
T^((q_Q - 1)/n) = N(T)^((p - 1)/n) for the norm N to F_p, only norms of
residues are ever computed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm

import flint

from ..fields.base import FieldError
from ..fields.kummer import KummerField
from ..fields.ratfunc import RationalFunctionField, RFElement
from .places import (
    BasePlace,
    KummerLocal,
    OracleUnsupported,
    Place,
    candidate_base_places,
    check_oracle_field,
    oracle_base,
    rational_place,
)


class LocalContext:
    """Per-field cache of local data; lives only for one computation."""

    def __init__(self, field):
        check_oracle_field(field)
        self.field = field
        self.K = oracle_base(field)
        self.p = self.K.p
        self._kummer: dict[BasePlace, KummerLocal] = {}

    def kummer_local(self, bp: BasePlace) -> KummerLocal:
        if bp not in self._kummer:
            self._kummer[bp] = KummerLocal(self.field, bp)
        return self._kummer[bp]

    def places_over(self, bp: BasePlace) -> list[Place]:
        if isinstance(self.field, KummerField):
            return self.kummer_local(bp).places()
        return [rational_place(self.K, bp)]

    def unit_norm(self, x, place: Place) -> tuple[int, int]:
        x = self.field(x)
        if x.is_zero():
            raise FieldError("symbol slot is zero")
        if isinstance(self.field, KummerField):
            return self.kummer_local(place.base).unit_norm(x, place)
        return place.base.unit_norm(x)

    def places(self, elements) -> list[Place]:
        out = []
        for bp in candidate_base_places(self.field, elements):
            out.extend(self.places_over(bp))
        return out


def _dlog(value: int, n: int, p: int) -> int:
    rho = pow(_generator(p), (p - 1) // n, p)
    x = 1
    for k in range(n):
        if x == value:
            return k
        x = x * rho % p
    raise FieldError(f"{value} is not an {n}-th root of unity mod {p}")


def _generator(p: int) -> int:
    from ..fields.finite import FiniteField

    return FiniteField(p).generator


def tame_symbol_norm(ctx: LocalContext, a, b, place: Place) -> int:
    """N_{k(Q)/F_p} of the tame symbol T_Q(a, b)."""
    p = ctx.p
    va, na = ctx.unit_norm(a, place)
    vb, nb = ctx.unit_norm(b, place)
    sign = -1 if (va * vb * place.residue_degree) % 2 else 1
    val = sign * pow(na, vb, p) * pow(nb, -va, p)
    return val % p


def tame_symbol(a, b, P) -> flint.nmod_poly:
    """T_P(a, b) = (-1)^(v(a)v(b)) a^v(b) / b^v(a) in the residue field F_p[t]/P of F_p(t).

    The result is a residue polynomial (a constant at infinity).
    """
    K = a.field if isinstance(a, RFElement) else b.field
    a, b = K(a), K(b)
    bp = P.base if isinstance(P, Place) else P
    va, vb = bp.valuation(a), bp.valuation(b)
    x = a**vb / b**va
    if (va * vb) % 2:
        x = -x
    return bp.reduce_mod(x, 1)


def local_invariant(a, b, n: int, place: Place, ctx: LocalContext | None = None) -> Fraction:
    ctx = ctx or LocalContext(place_field(a, b))
    p = ctx.p
    if (p - 1) % n:
        raise OracleUnsupported(f"n = {n} does not divide q - 1 = {p - 1}")
    T = tame_symbol_norm(ctx, a, b, place)
    k = _dlog(pow(T, (p - 1) // n, p), n, p)
    return Fraction(k, n)


def place_field(a, b):
    fa, fb = a.field, getattr(b, "field", a.field)
    return fa if fa.contains(fb) else fb


class InvariantVector:
    """Finite-support map place -> Q/Z."""

    def __init__(self, entries: dict[Place, Fraction] | None = None):
        self.entries = {q: v % 1 for q, v in (entries or {}).items() if v % 1}

    def __getitem__(self, place: Place) -> Fraction:
        return self.entries.get(place, Fraction(0))

    def __add__(self, other: InvariantVector) -> InvariantVector:
        out = dict(self.entries)
        for q, v in other.entries.items():
            out[q] = out.get(q, Fraction(0)) + v
        return InvariantVector(out)

    def __neg__(self) -> InvariantVector:
        return InvariantVector({q: -v for q, v in self.entries.items()})

    def __sub__(self, other: InvariantVector) -> InvariantVector:
        return self + (-other)

    def scale(self, k: int) -> InvariantVector:
        return InvariantVector({q: k * v for q, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, InvariantVector) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def is_zero(self) -> bool:
        return not self.entries

    def places(self) -> list[Place]:
        return sorted(self.entries, key=Place.sort_key)

    def reciprocity_sum(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0)) % 1

    def exponent(self) -> int:
        return reduce(lcm, (v.denominator for v in self.entries.values()), 1)

    def table(self) -> list[tuple[str, int, int]]:
        return [(q.label, self.entries[q].numerator, self.entries[q].denominator) for q in self.places()]

    def __repr__(self):
        body = ", ".join(f"{lab}: {n}/{d}" for lab, n, d in self.table())
        return "{" + body + "}"


def _terms(expr):
    for t in expr.terms:
        yield t.a, t.b, t.n, t.coeff


def invariant_vector(expr, field=None) -> InvariantVector:
    """Invariant vector of a BrauerExpr (anything with .field and .terms)."""
    field = field or expr.field
    if not isinstance(field, (RationalFunctionField, KummerField)):
        raise OracleUnsupported(f"no local-invariant oracle for {field}")
    terms = [(field(a), field(b), n, c) for a, b, n, c in _terms(expr) if c % n]
    if not terms:
        return InvariantVector()
    ctx = LocalContext(field)
    elements = [x for a, b, _, _ in terms for x in (a, b)]
    out: dict[Place, Fraction] = {}
    for place in ctx.places(elements):
        total = Fraction(0)
        for a, b, n, c in terms:
            total += c * local_invariant(a, b, n, place, ctx)
        if total % 1:
            out[place] = total % 1
    vec = InvariantVector(out)
    if vec.reciprocity_sum() != 0:
        raise AssertionError(f"reciprocity violated: {vec}")
    return vec


def class_equal_exponent(e1, e2) -> tuple[bool, int]:
    """(whether e1 and e2 name the same class, exponent of e1)."""
    v1, v2 = invariant_vector(e1), invariant_vector(e2)
    return v1 == v2, v1.exponent()


def exponent(expr) -> int:
    return invariant_vector(expr).exponent()


def pushforward(vec: InvariantVector, lower) -> InvariantVector:
    """Sum the invariants of all places above each lower place."""
    K = oracle_base(lower)
    out: dict[Place, Fraction] = {}
    for q, v in vec.entries.items():
        P = rational_place(K, q.base)
        out[P] = out.get(P, Fraction(0)) + v
    return InvariantVector(out)


def restriction(vec: InvariantVector, upper: KummerField, extra_base=()) -> InvariantVector:
    """inv_Q(res e) = e_Q f_Q inv_P(e) for every place Q of ``upper``."""
    out: dict[Place, Fraction] = {}
    for P, v in vec.entries.items():
        for Q in KummerLocal(upper, P.base).places():
            out[Q] = Q.e * Q.f * v
    return InvariantVector(out)


def pushforward_check(upper_expr, lower_expr) -> bool:
    """inv_P(lower) == sum over Q | P of inv_Q(upper), for every lower place P."""
    up = invariant_vector(upper_expr)
    down = invariant_vector(lower_expr)
    return pushforward(up, lower_expr.field) == down


def restriction_check(lower_expr, upper_expr) -> bool:
    """The dual law: inv_Q(upper) == [L_Q : F_P] inv_P(lower) for every upper place Q."""
    down = invariant_vector(lower_expr)
    up = invariant_vector(upper_expr)
    return restriction(down, upper_expr.field) == up
