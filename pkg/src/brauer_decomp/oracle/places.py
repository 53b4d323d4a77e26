"""Places of F_p(t) and of prime-degree Kummer extensions of it.

Every place is handled in a local coordinate in which it is a finite place
given by a monic irreducible P: the infinite place of F_p(t) becomes the
place s = 0 after t -> 1/s.  For each place we fix a uniformizer and expose

    local(x) -> (v_Q(x), N_{k(Q)/F_p}(residue of x / pi^v))

which is all the tame symbol needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import flint

from ..fields.base import FieldError
from ..fields.kummer import KummerElement, KummerField
from ..fields.ratfunc import RationalFunctionField, RFElement, poly_key, poly_str
from .factor import factor_poly


class OracleUnsupported(FieldError):
    """The field node has no local-invariant oracle (symbolic fields, deep towers)."""


# -- local polynomial helpers ----------------------------------------------


def _val(f: flint.nmod_poly, P: flint.nmod_poly) -> int:
    v = 0
    while True:
        q, r = divmod(f, P)
        if not r.is_zero():
            return v
        f = q
        v += 1


def _strip(f: flint.nmod_poly, P: flint.nmod_poly) -> tuple[int, flint.nmod_poly]:
    v = 0
    while True:
        q, r = divmod(f, P)
        if not r.is_zero():
            return v, f
        f = q
        v += 1


def _invmod(f: flint.nmod_poly, m: flint.nmod_poly) -> flint.nmod_poly:
    g, s, _ = f.xgcd(m)
    if g.degree() != 0:
        raise FieldError("not invertible modulo the place")
    return (s * pow(int(g[0]), m.modulus() - 2, m.modulus())) % m


def _reverse(f: flint.nmod_poly) -> flint.nmod_poly:
    return flint.nmod_poly([int(c) for c in f.coeffs()][::-1], f.modulus())


def _norm_fp(u: flint.nmod_poly, P: flint.nmod_poly) -> int:
    """N_{F_p[t]/P / F_p}(u) for u prime to P (P monic)."""
    return int(P.resultant(u % P))


@dataclass(frozen=True)
class BasePlace:
    """A place of F_p(t): a monic irreducible poly (as a key) or infinity."""

    p: int
    poly: tuple[int, ...]  # local modulus coefficients; (0, 1) for infinity
    infinite: bool = False

    @property
    def P(self) -> flint.nmod_poly:
        return flint.nmod_poly(list(self.poly), self.p)

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def label(self, var: str = "t") -> str:
        if self.infinite:
            return "inf"
        return f"({poly_str(self.P, var)})"

    def sort_key(self):
        return (1 if self.infinite else 0, self.degree, self.poly)

    # local coordinates ---------------------------------------------
    def localize(self, x: RFElement) -> tuple[flint.nmod_poly, flint.nmod_poly]:
        """(num, den) in the local variable, so the place is P = self.P."""
        if not self.infinite:
            return x.num, x.den
        n, d = x.num, x.den
        dn, dd = n.degree(), d.degree()
        rn, rd = _reverse(n), _reverse(d)
        shift = dd - dn
        if shift > 0:
            rn = rn.left_shift(shift)
        elif shift < 0:
            rd = rd.left_shift(-shift)
        return rn, rd

    def valuation(self, x: RFElement) -> int:
        if x.is_zero():
            raise FieldError("valuation of zero")
        if self.infinite:
            return x.den.degree() - x.num.degree()
        P = self.P
        return _val(x.num, P) - _val(x.den, P)

    def unit_norm(self, x: RFElement) -> tuple[int, int]:
        """(v(x), N(residue of x / P^v)) with the uniformizer P (1/t at infinity)."""
        num, den = self.localize(x)
        P = self.P
        vn, num = _strip(num, P)
        vd, den = _strip(den, P)
        p = self.p
        return vn - vd, _norm_fp(num, P) * pow(_norm_fp(den, P), p - 2, p) % p

    def reduce_mod(self, x: RFElement, N: int) -> flint.nmod_poly:
        """x mod P^N for a P-integral x (in local coordinates)."""
        num, den = self.localize(x)
        PN = self.P**N
        return (num * _invmod(den % PN, PN)) % PN


def base_places_of(polys, p: int) -> set[BasePlace]:
    out = set()
    for f in polys:
        if f.degree() <= 0:
            continue
        for g, _ in factor_poly(f)[1]:
            out.add(BasePlace(p, tuple(int(c) for c in g.coeffs())))
    return out


def infinity(p: int) -> BasePlace:
    return BasePlace(p, (0, 1), True)


def finite_place(poly: flint.nmod_poly) -> BasePlace:
    return BasePlace(poly.modulus(), tuple(int(c) for c in poly.coeffs()))


# -- residue fields F_p[t]/P -----------------------------------------------


def _powmod(x: flint.nmod_poly, e: int, P: flint.nmod_poly) -> flint.nmod_poly:
    return x.pow_mod(e, P) if P.degree() > 1 else flint.nmod_poly([pow(int((x % P)[0]), e, P.modulus())], P.modulus())


def _residue_elements(P: flint.nmod_poly):
    """Deterministic enumeration of nonzero residues: constants, then t + c, t^2 + ..."""
    p = P.modulus()
    for c in range(1, p):
        yield flint.nmod_poly([c], p)
    for k in range(1, P.degree()):
        for c in range(p):
            yield flint.nmod_poly([c] + [0] * (k - 1) + [1], p)


def residue_root(a: flint.nmod_poly, d: int, P: flint.nmod_poly) -> flint.nmod_poly | None:
    """A d-th root of a in F_p[t]/P (d prime), or None.  Adleman-Manders-Miller."""
    p = P.modulus()
    one = flint.nmod_poly([1], p)
    a = a % P
    order = p ** P.degree() - 1
    if order % d:
        # d-th powering is a bijection
        return _powmod(a, pow(d, -1, order), P)
    if _powmod(a, order // d, P) != one:
        return None
    e, m = 0, order
    while m % d == 0:
        m //= d
        e += 1
    z = next(c for c in _residue_elements(P) if _powmod(c, order // d, P) != one)
    z = _powmod(z, m, P)  # order d^e
    k = pow(d, -1, m) if m > 1 else 0
    x = _powmod(a, k, P)
    # x^d = a * b with b of order dividing d^(e-1)
    b = (_powmod(x, d, P) * _invmod(a, P)) % P
    zd = _powmod(z, d ** (e - 1), P)
    L = 0
    zinv = _invmod(z, P)
    for i in range(e):
        h = (b * _powmod(zinv, L, P)) % P
        h = _powmod(h, d ** (e - 1 - i), P)
        digit = next(j for j in range(d) if _powmod(zd, j, P) == h % P)
        L += digit * d**i
    if L % d:
        raise FieldError("root extraction failed")
    y = _powmod(zinv, L // d, P)
    r = (x * y) % P
    assert _powmod(r, d, P) == a
    return r


# -- places of Kummer extensions -------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place of an oracle-supported field node."""

    field_key: tuple
    base: BasePlace
    kind: str  # "finite", "infinity", "ramified", "inert", "split"
    index: int = 0
    e: int = 1
    f: int = 1
    label: str = dc_field(default="", compare=False)

    @property
    def residue_degree(self) -> int:
        return self.base.degree * self.f

    def sort_key(self):
        return (self.base.sort_key(), self.kind, self.index)

    def __str__(self):
        return self.label


def oracle_base(field) -> RationalFunctionField:
    if isinstance(field, RationalFunctionField):
        return field
    if isinstance(field, KummerField) and isinstance(field.parent, RationalFunctionField):
        return field.parent
    raise OracleUnsupported(f"no local-invariant oracle for {field}")


def check_oracle_field(field) -> None:
    K = oracle_base(field)
    if (K.p - 1) % 9:
        raise OracleUnsupported(f"oracle needs q = 1 mod 9, got q = {K.p}")


def base_place_of(place_or_base) -> BasePlace:
    return place_or_base.base if isinstance(place_or_base, Place) else place_or_base


def rational_place(K: RationalFunctionField, bp: BasePlace) -> Place:
    kind = "infinity" if bp.infinite else "finite"
    return Place(K.key(), bp, kind, label=bp.label(K.var))


class KummerLocal:
    """Local data of L = K(alpha), alpha^d = a, above one base place P."""

    def __init__(self, L: KummerField, bp: BasePlace):
        self.L = L
        self.bp = bp
        self.d = d = L.degree
        K = L.parent
        P = bp.P
        p = bp.p
        self.va = bp.valuation(L.radicand)
        if self.va % d:
            self.kind = "ramified"
            # uniformizer alpha^mm * P^kk with mm*va + d*kk = 1
            g, mm, kk = _egcd(self.va, d)
            assert g == 1
            self.mm, self.kk = mm, kk
            return
        self.m = self.va // d
        Pm = self._P_elem(K) ** self.m
        self.a_unit = L.radicand / Pm**d
        abar = bp.reduce_mod(self.a_unit, 1)
        root = residue_root(abar, d, P)
        if root is None:
            self.kind = "inert"
            self.abar = abar
            return
        self.kind = "split"
        self.root = root
        zeta = int(L.zeta.constant_value()) if d > 2 else p - 1
        self.zetas = [pow(zeta, k, p) for k in range(d)]

    def _P_elem(self, K):
        """The uniformizer of the base place as an element of K."""
        if self.bp.infinite:
            return K.gen().inverse()
        return K.from_polys(self.bp.P)

    def places(self) -> list[Place]:
        K = self.L.parent
        lab = self.bp.label(K.var)
        key = self.L.key()
        if self.kind == "ramified":
            return [Place(key, self.bp, "ramified", 0, self.d, 1, f"{lab}^{self.d}")]
        if self.kind == "inert":
            return [Place(key, self.bp, "inert", 0, 1, self.d, f"{lab}:inert")]
        out = []
        for k in range(self.d):
            r = (self.root * self.zetas[k]) % self.bp.P
            out.append(Place(key, self.bp, "split", k, 1, 1, f"{lab}:{self.L.name}->{poly_str(r, K.var)}"))
        return out

    # local valuation + residue norm ------------------------------------
    def unit_norm(self, x: KummerElement, place: Place) -> tuple[int, int]:
        if x.is_zero():
            raise FieldError("valuation of zero")
        bp, d, p = self.bp, self.d, self.bp.p
        K = self.L.parent
        coeffs = x.coeffs
        if self.kind == "ramified":
            best = None
            for i, c in enumerate(coeffs):
                if c.is_zero():
                    continue
                w = d * bp.valuation(c) + i * self.va
                if best is None or w < best[0]:
                    best = (w, i, c)
            V, j, c = best
            E = j - self.mm * V
            assert E % d == 0
            unit = c * self.L.radicand ** (E // d) * self._P_elem(K) ** (-self.kk * V)
            v0, n = bp.unit_norm(unit)
            assert v0 == 0
            return V, n
        Pm = self._P_elem(K) ** self.m
        # coordinates in the normalized basis alpha' = alpha / P^m
        cs = [c * Pm**i for i, c in enumerate(coeffs)]
        vals = [bp.valuation(c) if not c.is_zero() else None for c in cs]
        vmin = min(v for v in vals if v is not None)
        Pv = self._P_elem(K) ** vmin
        scaled = [c / Pv for c in cs]  # P-integral, at least one unit
        P = bp.P
        if self.kind == "inert":
            r = [bp.reduce_mod(c, 1) if not c.is_zero() and bp.valuation(c) == 0 else flint.nmod_poly([], p) for c in scaled]
            nr = _kummer_norm(r, self.abar, d, P)
            return vmin, _norm_fp(nr, P)
        # split: Hensel-lift the root far enough to see the valuation
        # x / P^vmin has norm N(x) / P^(d vmin)
        nv = bp.valuation(x.norm()) - d * vmin
        N = nv + 1
        PN = P**N
        rhat = self._lift(N)
        z = self.zetas[place.index]
        img = flint.nmod_poly([], p)
        powr = flint.nmod_poly([1], p)
        rz = (rhat * z) % PN
        for c in scaled:
            if not c.is_zero():
                img = img + bp.reduce_mod(c, N) * powr
            powr = (powr * rz) % PN
        img = img % PN
        w, u = _strip(img, P)
        assert w < N, "insufficient precision in split place"
        return vmin + w, _norm_fp(u, P)

    def _lift(self, N: int) -> flint.nmod_poly:
        cache = self.__dict__.setdefault("_lifts", {})
        if N in cache:
            return cache[N]
        P, d = self.bp.P, self.d
        PN = P**N
        a = self.bp.reduce_mod(self.a_unit, N)
        r = self.root
        prec = 1
        while prec < N:
            prec = min(2 * prec, N)
            Pk = P**prec
            fr = (r.pow_mod(d, Pk) - a) % Pk
            dfr = (r.pow_mod(d - 1, Pk) * d) % Pk
            r = (r - fr * _invmod(dfr, Pk)) % Pk
        r = r % PN
        cache[N] = r
        return r


def _kummer_norm(r, abar, d, P):
    if d == 2:
        return (r[0] * r[0] - abar * r[1] * r[1]) % P
    if d == 3:
        return (r[0] ** 3 + abar * r[1] ** 3 + abar * abar * r[2] ** 3 - 3 * abar * r[0] * r[1] * r[2]) % P
    raise OracleUnsupported("Kummer degree > 3 in the oracle")


def _egcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def places_above(bp: BasePlace, L: KummerField) -> list[Place]:
    return KummerLocal(L, base_place_of(bp)).places()


def mass_formula_ok(bp: BasePlace, L: KummerField) -> bool:
    return sum(q.e * q.f for q in places_above(bp, L)) == L.degree


def candidate_base_places(field, elements) -> list[BasePlace]:
    """Base places outside of which every element is a unit and the field is unramified."""
    K = oracle_base(field)
    polys = []
    for x in elements:
        if isinstance(x, KummerElement):
            for c in x.coeffs:
                if not c.is_zero():
                    polys += [c.num, c.den]
            n = x.norm()
            polys += [n.num, n.den]
        else:
            x = K(x)
            polys += [x.num, x.den]
    if isinstance(field, KummerField):
        polys += [field.radicand.num, field.radicand.den]
    out = base_places_of(polys, K.p)
    out.add(infinity(K.p))
    return sorted(out, key=BasePlace.sort_key)


def poly_place_key(bp: BasePlace):
    return poly_key(bp.P)
