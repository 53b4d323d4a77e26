"""Chains of degree-3 symbols linking (a, b)_3 to (gamma, c^{-1})_3.

(a,b) = (a,x1) = (x2,x1) = (x2,x3) = (gamma,x3) = (gamma,c^{-1}).  Verification
is five oracle class equalities; search walks a height-ordered candidate
list under an oracle-call budget.  Running out of budget is not a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from ..brauer import BrauerExpr
from ..oracle.invariants import invariant_vector


@dataclass(frozen=True)
class ChainWitness:
    x1: object
    x2: object
    x3: object

    def to_json(self) -> dict:
        return {k: getattr(self, k).field.element_to_json(getattr(self, k)) for k in ("x1", "x2", "x3")}


class BudgetExhausted(Exception):
    """The search used its whole oracle budget without closing the chain."""


def chain_links(a, b, gamma, c, w: ChainWitness) -> list[tuple]:
    K = w.x1.field
    return [
        ((a, b), (a, w.x1)),
        ((a, w.x1), (w.x2, w.x1)),
        ((w.x2, w.x1), (w.x2, w.x3)),
        ((w.x2, w.x3), (gamma, w.x3)),
        ((gamma, w.x3), (gamma, K(c).inverse())),
    ]


def _class(K, pair, cache=None):
    key = (str(pair[0]), str(pair[1]))
    if cache is not None and key in cache:
        return cache[key]
    v = invariant_vector(BrauerExpr.symbol(K, pair[0], pair[1], 3))
    if cache is not None:
        cache[key] = v
    return v


def verify_chain(a, b, gamma, c, w: ChainWitness) -> list[bool]:
    K = w.x1.field
    cache: dict = {}
    return [_class(K, s, cache) == _class(K, t, cache) for s, t in chain_links(a, b, gamma, c, w)]


def height_candidates(K, base_field, extra=()):
    """Structural candidates first, then constants, then monic linear polynomials of the base."""
    seen = set()
    for x in extra:
        x = K(x)
        if not x.is_zero() and str(x) not in seen:
            seen.add(str(x))
            yield x
    p = base_field.p
    for c in range(1, p):
        x = K(base_field(c))
        if str(x) not in seen:
            seen.add(str(x))
            yield x
    t = base_field.gen()
    for c in range(p):
        for k in range(1, p):
            x = K((t + c) * k)
            if str(x) not in seen:
                seen.add(str(x))
                yield x


def find_or_verify_chain(a, b, gamma, c, budget: int = 200, witness: ChainWitness | None = None, base_field=None):
    """Verify a given witness, else search for one; raises BudgetExhausted."""
    K = a.field
    if witness is not None:
        links = verify_chain(a, b, gamma, c, witness)
        if not all(links):
            raise ValueError(f"chain fails at link {links.index(False) + 1}")
        return witness
    base_field = base_field or _rational_base(K)
    cache: dict = {}
    calls = [0]

    def same(s, t):
        calls[0] += 1
        if calls[0] > budget:
            raise BudgetExhausted(f"oracle budget {budget} exhausted")
        return _class(K, s, cache) == _class(K, t, cache)

    cinv = K(c).inverse()
    extra = (b, cinv, a, gamma)
    target = _class(K, (a, b), cache)
    if target != _class(K, (gamma, cinv), cache):
        raise ValueError("the two symbols are not equal; no chain exists")
    for x1 in islice(height_candidates(K, base_field, extra), budget):
        if not same((a, b), (a, x1)):
            continue
        for x2 in islice(height_candidates(K, base_field, extra), budget):
            if _trivial(x2) or not same((a, x1), (x2, x1)):
                continue
            for x3 in islice(height_candidates(K, base_field, extra), budget):
                if not same((x2, x1), (x2, x3)) or not same((x2, x3), (gamma, x3)):
                    continue
                if same((gamma, x3), (gamma, cinv)):
                    return ChainWitness(x1, x2, x3)
    raise BudgetExhausted("candidate list exhausted")


def _trivial(x) -> bool:
    return x == x.field.one


def _rational_base(K):
    node = K
    while node.parent is not None and not hasattr(node, "var"):
        node = node.parent
    return node
