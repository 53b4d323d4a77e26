"""Bicyclic crossed products (E, G, b1, b2, u) with G = Z/3 x Z/3.

E = F(t1)(t2) with t1^3 = f1, t2^3 = f2.  sigma_1 fixes t1 and sends
t2 -> rho_3 t2; sigma_2 sends t1 -> rho_3 t1 and fixes t2.  The algebra is
E[z1, z2] with z_i e = sigma_i(e) z_i, z1^3 = b1, z2^3 = b2, z2 z1 = u z1 z2.

Elements are stored as {(k, l): e} meaning sum e z1^k z2^l, with e in E.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..fields.base import Field, FieldError
from ..fields.kummer import KummerField
from ..fields.poly import coordinates
from .sca import Algebra, AlgebraElement, StructureConstantAlgebra

P = 3
GROUP = [(k, l) for k in range(P) for l in range(P)]


def bicyclic_field(F: Field, f1, f2, names=("t1", "t2"), check: bool = True) -> KummerField:
    E1 = KummerField(F, P, F(f1), names[0], check=check)
    return KummerField(E1, P, E1(F(f2)), names[1], check=check)


@dataclass(frozen=True)
class CrossedProductPresentation:
    E: KummerField
    b1: object
    b2: object
    u: object

    @property
    def F(self) -> Field:
        return self.E.parent.parent

    @property
    def E1(self) -> KummerField:
        return self.E.parent

    @property
    def f1(self):
        return self.E1.radicand

    @property
    def f2(self):
        return self.E.radicand.coeffs[0]

    @property
    def rho3(self):
        return self.F.root_of_unity(P)

    def t1(self):
        return self.E(self.E1.gen())

    def t2(self):
        return self.E.gen()

    def sigma(self, e, k: int = 1, l: int = 0):
        """sigma_1^k sigma_2^l (e)."""
        E, r = self.E, self.rho3
        e = E(e)
        if k % P:
            e = E.twist(e, E, r ** (k % P))
        if l % P:
            e = E.twist(e, self.E1, r ** (l % P))
        return e

    def norm1(self, x):
        return x * self.sigma(x, 1) * self.sigma(x, 2)

    def norm2(self, x):
        return x * self.sigma(x, 0, 1) * self.sigma(x, 0, 2)

    def norm(self, x):
        return self.norm2(self.norm1(x))

    # coefficient views used by the pipeline -----------------------------
    def b1_coeffs(self):
        """(c0, c1, c2) with b1 = c0 + c1 t1 + c2 t1^2."""
        b1 = self.E(self.b1)
        if not all(c.is_zero() for c in b1.coeffs[1:]):
            raise FieldError("b1 is not in E1")
        return tuple(b1.coeffs[0].coeffs)

    def b2_coeffs(self):
        """(a0, a1, a2) with b2 = a0 + a1 t2 + a2 t2^2."""
        b2 = self.E(self.b2)
        out = []
        for c in b2.coeffs:
            if not c.in_parent():
                raise FieldError("b2 is not in E2")
            out.append(c.coeffs[0])
        return tuple(out)

    def invariant_report(self) -> dict:
        E = self.E
        b1, b2, u = E(self.b1), E(self.b2), E(self.u)
        rep = {
            "b1_in_E1": self.sigma(b1, 1) == b1,
            "b2_in_E2": self.sigma(b2, 0, 1) == b2,
            "norm_u_is_1": self.norm(u) == E.one,
            "cocycle_1": self.norm1(u) * b1 == self.sigma(b1, 0, 1),
            "cocycle_2": self.norm2(u) * self.sigma(b2, 1) == b2,
        }
        rep["ok"] = all(rep.values())
        return rep

    def check(self) -> None:
        rep = self.invariant_report()
        if not rep["b1_in_E1"]:
            raise FieldError("b1 is not fixed by sigma_1")
        if not rep["b2_in_E2"]:
            raise FieldError("b2 is not fixed by sigma_2")
        if not rep["norm_u_is_1"]:
            raise FieldError("N_{E/F}(u) != 1")
        if not rep["ok"]:
            raise FieldError("u, b1, b2 do not satisfy the cocycle conditions")

    def to_json(self) -> dict:
        E = self.E
        return {
            "f1": self.F.element_to_json(self.f1),
            "f2": self.F.element_to_json(self.f2),
            "b1": E.element_to_json(E(self.b1)),
            "b2": E.element_to_json(E(self.b2)),
            "u": E.element_to_json(E(self.u)),
        }


def twist_product(P1: CrossedProductPresentation, P2: CrossedProductPresentation) -> CrossedProductPresentation:
    """(E, G, b1, b2, u) (x) (E, G, b1', b2', u') ~ (E, G, b1 b1', b2 b2', u u')."""
    if P1.E != P2.E:
        raise FieldError("twist product needs the same E and sigma data")
    E = P1.E
    return CrossedProductPresentation(E, E(P1.b1) * E(P2.b1), E(P1.b2) * E(P2.b2), E(P1.u) * E(P2.u))


def coboundary(Pr: CrossedProductPresentation, w1, w2) -> CrossedProductPresentation:
    """Rescale z1 -> w1 z1, z2 -> w2 z2; the class is unchanged."""
    E = Pr.E
    w1, w2 = E(w1), E(w2)
    b1 = Pr.norm1(w1) * E(Pr.b1)
    b2 = Pr.norm2(w2) * E(Pr.b2)
    u = E(Pr.u) * w2 * Pr.sigma(w1, 0, 1) / (w1 * Pr.sigma(w2, 1))
    return CrossedProductPresentation(E, b1, b2, u)


class CrossedProduct(Algebra):
    """The 81-dimensional algebra of a presentation, with block multiplication."""

    def __init__(self, pres: CrossedProductPresentation, check: bool = True):
        if check:
            pres.check()
        self.pres = pres
        self.E = E = pres.E
        self.base = pres.F
        self.dim = 81
        self.degree = 9
        self._b1, self._b2, self._u = E(pres.b1), E(pres.b2), E(pres.u)
        self._factor = self._factor_set()
        self._ebasis = [E(pres.E1.gen() ** i) * E.gen() ** j for j in range(P) for i in range(P)]
        self.labels = [
            _label(i, j, k, l) for k, l in GROUP for j in range(P) for i in range(P)
        ]

    # factor set ----------------------------------------------------------
    def _right_z1(self, e, k, l):
        U = self.E.one
        if l >= 1:
            U = self._u
        if l == 2:
            U = self.pres.sigma(self._u, 0, 1) * self._u
        e = e * self.pres.sigma(U, k, 0)
        k += 1
        if k == P:
            e = e * self._b1
            k = 0
        return e, k, l

    def _right_z2(self, e, k, l):
        l += 1
        if l == P:
            e = e * self.pres.sigma(self._b2, k, 0)
            l = 0
        return e, k, l

    def _factor_set(self):
        """z1^a z2^b z1^c z2^d = F[(a,b),(c,d)] z1^.. z2^.."""
        out = {}
        for (a, b), (c, d) in product(GROUP, GROUP):
            e, k, l = self.E.one, a, b
            for _ in range(c):
                e, k, l = self._right_z1(e, k, l)
            for _ in range(d):
                e, k, l = self._right_z2(e, k, l)
            out[(a, b, c, d)] = (e, (k, l))
        return out

    def sigma_kl(self, e, k, l):
        return self.pres.sigma(e, k, l)

    # protocol ----------------------------------------------------------
    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {(0, 0): self.E.one})

    def scalar(self, c) -> AlgebraElement:
        c = self.E(c)
        return AlgebraElement(self, {(0, 0): c} if not c.is_zero() else {})

    def embed(self, e) -> AlgebraElement:
        """E -> algebra."""
        return self.scalar(e)

    def z(self, k: int, l: int = 0, e=None) -> AlgebraElement:
        return AlgebraElement(self, {(k % P, l % P): self.E.one if e is None else self.E(e)})

    @property
    def z1(self):
        return self.z(1, 0)

    @property
    def z2(self):
        return self.z(0, 1)

    @property
    def t1(self):
        return self.scalar(self.pres.t1())

    @property
    def t2(self):
        return self.scalar(self.pres.t2())

    def basis(self, i: int) -> AlgebraElement:
        blk, r = divmod(i, 9)
        return AlgebraElement(self, {GROUP[blk]: self._ebasis[r]})

    def from_coords(self, vec) -> AlgebraElement:
        E = self.E
        data = {}
        for blk, kl in enumerate(GROUP):
            chunk = vec[9 * blk : 9 * blk + 9]
            if all(self.base(c).is_zero() for c in chunk):
                continue
            e = E.zero
            for c, bvec in zip(chunk, self._ebasis):
                if not self.base(c).is_zero():
                    e = e + bvec * E(self.base(c))
            data[kl] = e
        return AlgebraElement(self, data)

    def coords(self, x: AlgebraElement) -> list:
        out = []
        zero = [self.base.zero] * 9
        for kl in GROUP:
            e = x.data.get(kl)
            out.extend(zero if e is None else coordinates(e, self.base))
        return out

    def block(self, x: AlgebraElement, k: int, l: int):
        return x.data.get((k, l), self.E.zero)

    def _add(self, x, y):
        out = dict(x.data)
        for kl, e in y.data.items():
            s = out[kl] + e if kl in out else e
            if s.is_zero():
                out.pop(kl, None)
            else:
                out[kl] = s
        return AlgebraElement(self, out)

    def _scale(self, x, c):
        c = self.E(c)
        if c.is_zero():
            return AlgebraElement(self, {})
        return AlgebraElement(self, {kl: c * e for kl, e in x.data.items()})

    def _mul(self, x, y):
        out: dict = {}
        for (a, b), e in x.data.items():
            for (c, d), f in y.data.items():
                fac, kl = self._factor[(a, b, c, d)]
                v = e * self.pres.sigma(f, a, b) * fac
                out[kl] = out[kl] + v if kl in out else v
        return AlgebraElement(self, {kl: v for kl, v in out.items() if not v.is_zero()})

    def reduced_trace(self, x: AlgebraElement):
        """9 times the identity coordinate."""
        e = x.data.get((0, 0))
        if e is None:
            return self.base.zero
        return coordinates(e, self.base)[0] * 9

    def identity_coefficient(self, x: AlgebraElement):
        e = x.data.get((0, 0))
        return self.base.zero if e is None else coordinates(e, self.base)[0]

    def identity_of_product(self, x: AlgebraElement, y: AlgebraElement):
        """identity_coefficient(x * y), touching only the blocks that land on (0, 0)."""
        acc = None
        for (a, b), e in x.data.items():
            f = y.data.get(((-a) % P, (-b) % P))
            if f is None:
                continue
            fac, _ = self._factor[(a, b, (-a) % P, (-b) % P)]
            v = e * self.pres.sigma(f, a, b) * fac
            acc = v if acc is None else acc + v
        return self.base.zero if acc is None else coordinates(acc, self.base)[0]

    def format(self, x) -> str:
        if not x.data:
            return "0"
        parts = []
        for (k, l), e in sorted(x.data.items()):
            mono = "*".join(s for s in (_z("z1", k), _z("z2", l)) if s)
            parts.append(f"[{e}]" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # checks ------------------------------------------------------------
    def relation_report(self) -> dict:
        z1, z2, t1, t2 = self.z1, self.z2, self.t1, self.t2
        r = self.pres.rho3
        rep = {
            "z1t1=t1z1": z1 * t1 == t1 * z1,
            "z2t2=t2z2": z2 * t2 == t2 * z2,
            "z1t2=rho3t2z1": z1 * t2 == (t2 * z1).scale(r),
            "z2t1=rho3t1z2": z2 * t1 == (t1 * z2).scale(r),
            "z1^3=b1": z1 * z1 * z1 == self.scalar(self._b1),
            "z2^3=b2": z2 * z2 * z2 == self.scalar(self._b2),
            "z2z1=uz1z2": z2 * z1 == self.scalar(self._u) * z1 * z2,
        }
        return rep

    def cocycle_associative(self) -> bool:
        """Associativity of the factor set on all 729 group triples (E-semilinear form)."""
        Fs, sig = self._factor, self.pres.sigma
        for g, h, k in product(GROUP, GROUP, GROUP):
            f1, gh = Fs[g + h]
            f2, ghk = Fs[gh + k]
            f3, hk = Fs[h + k]
            f4, ghk2 = Fs[g + hk]
            if ghk != ghk2:
                return False
            # (z^g z^h) z^k = f1 f2 z^ghk ; z^g (z^h z^k) = sigma_g(f3) f4 z^ghk
            if f1 * f2 != sig(f3, *g) * f4:
                return False
        return True

    def structure_constants(self) -> StructureConstantAlgebra:
        """The 81 x 81 sparse table over F (expensive; for export and small checks)."""
        basis = self.basis_elements()
        table = {}
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                c = (x * y).coords()
                table[(i, j)] = {k: v for k, v in enumerate(c) if not v.is_zero()}
        return StructureConstantAlgebra(self.base, self.labels, table, 0, 9, "crossed-product")


def _z(name, k):
    return "" if k == 0 else (name if k == 1 else f"{name}^{k}")


def _label(i, j, k, l):
    parts = [_z("t1", i), _z("t2", j), _z("z1", k), _z("z2", l)]
    return "*".join(s for s in parts if s) or "1"


def build_crossed_product(pres: CrossedProductPresentation, check: bool = True) -> CrossedProduct:
    return CrossedProduct(pres, check=check)


def lift_element(e, E_new: KummerField):
    """Coefficient-wise image of an element of F(t1)(t2) in L(t1)(t2) for L over F."""
    E1_new = E_new.parent
    L = E1_new.parent
    return E_new.from_coeffs([E1_new.from_coeffs([L(c) for c in ci.coeffs]) for ci in e.coeffs])


def base_change(pres: CrossedProductPresentation, L: Field) -> CrossedProductPresentation:
    """The same presentation over L E (the Kummer data stays non-split when [L:F] = 2)."""
    E = bicyclic_field(L, L(pres.f1), L(pres.f2), names=(pres.E1.name, pres.E.name), check=False)
    return CrossedProductPresentation(
        E, lift_element(pres.E(pres.b1), E), lift_element(pres.E(pres.b2), E), lift_element(pres.E(pres.u), E)
    )
