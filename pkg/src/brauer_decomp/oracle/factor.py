"""Factorization of polynomials over prime fields: squarefree, distinct-degree, equal-degree.

Equal-degree splitting is Cantor-Zassenhaus with an explicit seed, so a given
input always yields the same factor list.  Factors come back monic and
sorted by (degree, coefficients).
"""

from __future__ import annotations

import random
from math import gcd

import flint

from ..fields.ratfunc import RFElement, poly_key

DEFAULT_SEED = 0x5EED


def _monic(f: flint.nmod_poly) -> flint.nmod_poly:
    lc = int(f.leading_coefficient())
    if lc == 1:
        return f
    return f * pow(lc, f.modulus() - 2, f.modulus())


def _pth_root(f: flint.nmod_poly) -> flint.nmod_poly:
    """g with g^p = f, for f whose exponents are all multiples of p (coefficients are fixed by Frobenius)."""
    p = f.modulus()
    cs = [int(c) for c in f.coeffs()]
    return flint.nmod_poly(cs[::p], p)


def squarefree_decomposition(f: flint.nmod_poly) -> list[tuple[flint.nmod_poly, int]]:
    """Monic f = prod g_i^i with g_i squarefree and pairwise coprime; returns [(g_i, i)]."""
    p = f.modulus()
    f = _monic(f)
    out: list[tuple[flint.nmod_poly, int]] = []
    if f.degree() <= 0:
        return out
    df = f.derivative()
    if df.is_zero():
        for g, m in squarefree_decomposition(_pth_root(f)):
            out.append((g, m * p))
        return out
    c = f.gcd(df)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree() > 0:
            out.append((_monic(z), i))
        i += 1
        w, c = y, c // y
    if c.degree() > 0:
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def distinct_degree(f: flint.nmod_poly) -> list[tuple[flint.nmod_poly, int]]:
    """Split a monic squarefree f into (product of all degree-d factors, d)."""
    p = f.modulus()
    x = flint.nmod_poly([0, 1], p)
    out = []
    h = x
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, f)
        g = f.gcd(h - x)
        if g.degree() > 0:
            out.append((_monic(g), d))
            f = f // g
            h = h % f
    if f.degree() > 0:
        out.append((_monic(f), f.degree()))
    return out


def equal_degree(f: flint.nmod_poly, d: int, rng: random.Random) -> list[flint.nmod_poly]:
    """Split a monic squarefree product of degree-d irreducibles (p odd)."""
    n = f.degree()
    if n == d:
        return [f]
    p = f.modulus()
    e = (p**d - 1) // 2
    while True:
        r = flint.nmod_poly([rng.randrange(p) for _ in range(n)], p)
        if r.degree() <= 0:
            continue
        g = f.gcd(r)
        if 0 < g.degree() < n:
            break
        g = f.gcd(r.pow_mod(e, f) - 1)
        if 0 < g.degree() < n:
            break
    g = _monic(g)
    return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_poly(f: flint.nmod_poly, seed: int = DEFAULT_SEED):
    """(leading coefficient, [(monic irreducible, multiplicity)]) for nonzero f."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.modulus()
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    rng = random.Random(seed)
    lc = int(f.leading_coefficient())
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for q in equal_degree(h, d, rng):
                out.append((q, m))
    out.sort(key=lambda fm: (fm[0].degree(), poly_key(fm[0]), fm[1]))
    return lc, out


def is_irreducible(f: flint.nmod_poly) -> bool:
    _, fac = factor_poly(f)
    return len(fac) == 1 and fac[0][1] == 1


def rf_is_power(x: RFElement, d: int) -> bool:
    """Whether x is a d-th power in F_p(t)."""
    if x.is_zero():
        return True
    p = x.field.p
    lc = int(x.num.leading_coefficient())
    if pow(lc, (p - 1) // gcd(d, p - 1), p) != 1:
        return False
    for poly in (x.num, x.den):
        if poly.degree() <= 0:
            continue
        for _, m in squarefree_decomposition(poly):
            if m % d:
                return False
    return True


def rf_root(x: RFElement, d: int) -> RFElement | None:
    """A d-th root of x in F_p(t), or None."""
    if not rf_is_power(x, d):
        return None
    p = x.field.p
    lc = int(x.num.leading_coefficient())
    c = next(c for c in range(1, p) if pow(c, d, p) == lc)
    parts = []
    for poly in (x.num, x.den):
        acc = flint.nmod_poly([1], p)
        for g, m in squarefree_decomposition(poly):
            acc = acc * g ** (m // d)
        parts.append(acc)
    return RFElement.make(x.field, parts[0] * c, parts[1])

