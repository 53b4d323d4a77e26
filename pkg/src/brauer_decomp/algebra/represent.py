"""Re-presenting an algebra over a new maximal subfield.

Everything here is linear algebra over the base field or short explicit
projector formulas: eigenvectors of a conjugation of finite order are
produced by averaging, Kummer generators of a cyclic cubic by the Lagrange
resolvent, and subfield coordinates by trace duality.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..fields.base import FieldError
from ..fields.kummer import KummerField
from ..fields.linalg import nullspace, rank
from ..fields.poly import Poly, compose_mod, inverse_mod
from .crossed import CrossedProduct, CrossedProductPresentation, bicyclic_field
from .sca import Algebra, AlgebraElement


class Degenerate(FieldError):
    """A generic construction failed at this specialization; callers resample."""


# -- small helpers ---------------------------------------------------------


def evaluate(poly: Poly, y: AlgebraElement) -> AlgebraElement:
    A = y.algebra
    out = A.scalar(0)
    for c in reversed(poly.coeffs):
        out = out * y + A.scalar(c)
    return out


def identity_coefficient(y: AlgebraElement):
    A = y.algebra
    if isinstance(A, CrossedProduct):
        return A.identity_coefficient(y)
    return A.reduced_trace(y) / A.degree


def scalar_value(y: AlgebraElement):
    """The base-field value of y when y is a scalar, else None."""
    c = identity_coefficient(y)
    return c if y == y.algebra.scalar(c) else None


def algebra_minimal_polynomial(y: AlgebraElement, max_degree: int | None = None) -> Poly:
    A = y.algebra
    F = A.base
    bound = max_degree or A.degree
    powers = [A.one()]
    for _ in range(bound):
        powers.append(powers[-1] * y)
        cols = [p.coords() for p in powers]
        rows = [[c[i] for c in cols] for i in range(A.dim)]
        rows = [r for r in rows if any(not x.is_zero() for x in r)]
        ns = nullspace(rows, F, len(cols))
        if ns:
            return Poly(F, ns[-1]).monic()
    raise FieldError(f"no polynomial relation of degree <= {bound}")


def is_invertible(y: AlgebraElement) -> bool:
    """Left multiplication has full rank."""
    A = y.algebra
    cols = [(y * b).coords() for b in A.basis_elements()]
    rows = [[c[i] for c in cols] for i in range(A.dim)]
    return rank(rows, A.base) == A.dim


def eigen_projector(y: AlgebraElement, g: AlgebraElement, g_inv: AlgebraElement, lam, order: int) -> AlgebraElement:
    """(1/order) sum_j lam^{-j} g^j y g^{-j}: the lam-eigencomponent of y under Ad_g."""
    F = y.algebra.base
    lam_inv = F(lam).inverse()
    out, cur, c = y, y, F.one
    for _ in range(order - 1):
        cur = g * cur * g_inv
        c = c * lam_inv
        out = out + cur.scale(c)
    return out.scale(F(order).inverse())


# -- Proposition-level checks ------------------------------------------------


def verify_v_relations(C: CrossedProduct, e1, e2, minpoly: bool = True) -> dict:
    """v = e1 z1 + e2 z2: v.t1t2 = rho3 t1t2.v, [v^3, t1t2] = 0, and deg minpoly(v^3)."""
    v = C.scalar(e1) * C.z1 + C.scalar(e2) * C.z2
    if v.is_zero():
        raise FieldError("v = 0")
    s = C.t1 * C.t2
    vp = v * v * v
    rep = {
        "commutation": v * s == (s * v).scale(C.pres.rho3),
        "vp_commutes": vp * s == s * vp,
    }
    if minpoly:
        m = algebra_minimal_polynomial(vp, 3)
        rep["minpoly_degree"] = m.degree
        rep["degenerate"] = m.degree < 3
    return rep


# -- cyclic cubic data -------------------------------------------------------


def cubic_galois_action(m: Poly, delta) -> Poly:
    """g with sigma(X) = g(X) mod m for a monic cubic m whose discriminant is delta^2."""
    if m.degree != 3:
        raise FieldError("cubic_galois_action needs a cubic")
    L = m.field
    X = Poly.x(L)
    half = L(2).inverse()
    g = ((Poly(L, [-m[2]]) - X) + Poly(L, [L(delta)]) * inverse_mod(m.derivative(), m)) * Poly(L, [half])
    g = g % m
    if not compose_mod(m, g, m).is_zero():
        raise Degenerate("sqrt(disc) does not make the cubic cyclic")
    if g == X % m:
        raise Degenerate("Galois action is trivial")
    return g


def lagrange_resolvent(m: Poly, g: Poly, rho) -> Poly:
    """h with h(g) = rho h mod m, from X by the resolvent (1/3) sum lam^{-j} sigma^j."""
    L = m.field
    X = Poly.x(L) % m
    gg = compose_mod(g, g, m)
    third = L(3).inverse()
    rho = L(rho)
    for lam, power in ((rho, 1), (rho * rho, 2)):
        li = lam.inverse()
        h = (X + g * Poly(L, [li]) + gg * Poly(L, [li * li])) * Poly(L, [third])
        h = h % m
        if h.is_zero():
            continue
        if power == 2:
            h = (h * h) % m
        if compose_mod(h, g, m) != (h * Poly(L, [rho])) % m:
            raise AssertionError("resolvent is not a rho-eigenvector")
        return h
    raise Degenerate("all Lagrange resolvents vanish")


# -- Skolem-Noether ----------------------------------------------------------


def skolem_noether_solve(A: Algebra, gens, images) -> AlgebraElement:
    """Invertible z with z g = sigma(g) z for each generator, by a nullspace computation."""
    F = A.base
    basis = A.basis_elements()
    rows = []
    for g, sg in zip(gens, images):
        cols = [(b * g - sg * b).coords() for b in basis]
        rows.extend([c[i] for c in cols] for i in range(A.dim))
    rows = [r for r in rows if any(not x.is_zero() for x in r)]
    for vec in nullspace(rows, F, A.dim):
        z = A.from_coords(vec)
        if is_invertible(z):
            return z
    raise FieldError("no invertible element induces the automorphism")


# -- re-presentation over K = L[s, t3] -------------------------------------------


@dataclass
class SubfieldEmbedding:
    """K = L(s)(t3) inside an algebra, s^3 and t3^3 in L."""

    K: KummerField
    algebra: Algebra
    s: AlgebraElement
    t3: AlgebraElement

    def __post_init__(self):
        A = self.algebra
        L = self.K.parent.parent
        self._sp = [A.one(), self.s, self.s * self.s]
        self._tp = [A.one(), self.t3, self.t3 * self.t3]
        s_inv = self.s * self.s * A.scalar(L(self.K.parent.radicand).inverse())
        t_inv = self.t3 * self.t3 * A.scalar(self.K.radicand.coeffs[0].inverse())
        spi = [A.one(), s_inv, s_inv * s_inv]
        tpi = [A.one(), t_inv, t_inv * t_inv]
        # monomials s^a t3^b and their inverses, which pair to the identity under the trace
        self._mono = [[self._sp[a] * self._tp[b] for b in range(3)] for a in range(3)]
        self._dual = [[tpi[b] * spi[a] for b in range(3)] for a in range(3)]

    def embed(self, k) -> AlgebraElement:
        A = self.algebra
        out = A.scalar(0)
        k = self.K(k)
        for b, cb in enumerate(k.coeffs):
            for a, c in enumerate(cb.coeffs):
                if not c.is_zero():
                    out = out + self._mono[a][b].scale(c)
        return out

    def coords(self, y: AlgebraElement):
        """y as an element of K (coefficients by trace duality), or raise if y is not in K."""
        K = self.K
        E1 = K.parent
        A = self.algebra
        if hasattr(A, "identity_of_product"):
            pair = A.identity_of_product
        else:
            def pair(x, z):
                return identity_coefficient(x * z)
        cols = []
        for b in range(3):
            cb = [pair(y, self._dual[a][b]) for a in range(3)]
            cols.append(E1.from_coeffs(cb))
        k = K.from_coeffs(cols)
        if self.embed(k) != y:
            raise FieldError("element is not in the subfield")
        return k


@dataclass
class Representation:
    presentation: CrossedProductPresentation
    embedding: SubfieldEmbedding
    z1: AlgebraElement
    z2: AlgebraElement


def represent_as_crossed_product(A: Algebra, s, t3, z1, z2, f_s, l) -> Representation:
    """(K, G, z1^3, z2^3, z2 z1 (z1 z2)^{-1}) for K = L[s, t3], s^3 = f_s, t3^3 = l.

    z1 must fix s and send t3 -> rho3 t3; z2 must send s -> rho3 s and fix t3.
    """
    L = A.base
    K = bicyclic_field(L, f_s, l, names=("s", "t3"), check=False)
    emb = SubfieldEmbedding(K, A, s, t3)
    r = L.root_of_unity(3)
    if z1 * s != s * z1 or z1 * t3 != (t3 * z1).scale(r):
        raise AssertionError("z1 does not induce sigma_1")
    if z2 * s != (s * z2).scale(r) or z2 * t3 != t3 * z2:
        raise AssertionError("z2 does not induce sigma_2")
    b1 = emb.coords(z1 * z1 * z1)
    b2 = emb.coords(z2 * z2 * z2)
    if b1.is_zero() or b2.is_zero():
        raise Degenerate("a new generator is not invertible")
    z1_inv = z1 * z1 * emb.embed(b1.inverse())
    z2_inv = z2 * z2 * emb.embed(b2.inverse())
    u = emb.coords(z2 * z1 * z2_inv * z1_inv)
    pres = CrossedProductPresentation(K, b1, b2, u)
    pres.check()
    return Representation(pres, emb, z1, z2)


def nine_central_element(R: CrossedProduct, candidates=None):
    """x = s + z2 with x^3 in K, and w with x w = rho9 w x; returns (x, x3, w, w^9, x^9).

    R = (w^9, x^9)_9 in the convention X^n = a, Y^n = b, Y X = rho X Y.  Since
    x^3 lies in the maximal subfield, the order-9 projector factors as the
    order-3 projector for Ad_x followed by the diagonal one for Ad_{x^3}.
    """
    L = R.base
    K = R.pres.E
    x = R.t1 + R.z2
    x3 = x * x * x
    if set(x3.data) - {(0, 0)}:
        raise Degenerate("x^3 is not in the maximal subfield")
    k3 = x3.data.get((0, 0), K.zero)
    if k3.is_zero():
        raise Degenerate("x^3 = 0")
    x9 = scalar_value(R.embed(k3 * k3 * k3))
    if x9 is None:
        raise Degenerate("x^9 is not central")
    k3_inv = k3.inverse()
    x_inv = x * x * R.embed(k3_inv)
    rho9 = L.root_of_unity(9)
    third = L(3).inverse()
    if candidates is None:
        candidates = [R.z1, R.z1 * R.z2, R.z1 * R.z1, R.z1 * R.t2, R.z1 * R.z2 * R.z2]
    for y in candidates:
        y1 = eigen_projector(y, x, x_inv, rho9, 3)
        # Ad_{x^3} scales the block (k, l) by x3 sigma^{k,l}(x3)^{-1}
        lam3 = rho9**3
        data = {}
        for kl, e in y1.data.items():
            ratio = k3 * R.pres.sigma(k3_inv, *kl)
            acc = e + e * ratio.scale(lam3.inverse()) + e * (ratio * ratio).scale(lam3.inverse() ** 2)
            acc = acc.scale(third)
            if not acc.is_zero():
                data[kl] = acc
        w = AlgebraElement(R, data)
        if w.is_zero():
            continue
        w3 = w * w * w
        w9 = scalar_value(w3 * w3 * w3)
        if w9 is None or w9.is_zero():
            continue
        if x * w != (w * x).scale(rho9):
            raise AssertionError("projector output is not a rho9-eigenvector")
        return x, x3, w, w9, x9
    raise Degenerate("no invertible rho9-eigenvector of Ad_x among the candidates")
