"""Zero-polynomial identities over the symbolic field Q(zeta_9)(parameters).

Part one works with a genuine family of presentations: the coboundary of
(E, G, m1/t1, m2 t2, rho9^{-1}) by w1 = 1 + (p + t1) t2, w2 = 1 + r t1 + t2,
twisted by lambda = -c0/a0.  Every cocycle condition is checked symbolically.

Part two is the x^3 identity.  x = s + z2 only touches the subalgebra
K[z2] = (K/L(t3), sigma_2, b2), so b2 = l1 t3 + l2 t3^2 stays generic while
b1 and u are irrelevant (set to 1, and the computation is confirmed to stay
in the z1-free blocks).
"""

from __future__ import annotations

from ..algebra.crossed import (
    CrossedProduct,
    CrossedProductPresentation,
    bicyclic_field,
    coboundary,
    twist_product,
)
from ..fields.parameter import ParameterField
from .stages import d_presentation


def family_presentation():
    F = ParameterField(("f1", "f2", "m1", "m2", "p", "r"))
    f1, f2, m1, m2, p, r = F.vars("f1", "f2", "m1", "m2", "p", "r")
    E = bicyclic_field(F, f1, f2, check=False)
    t1, t2 = E(E.parent.gen()), E.gen()
    P0 = CrossedProductPresentation(E, E(m1) * t1.inverse(), E(m2) * t2, E(F.root_of_unity(9).inverse()))
    w1 = E.one + (E(p) + t1) * t2
    w2 = E.one + E(r) * t1 + t2
    return P0, coboundary(P0, w1, w2)


def v_identities() -> dict:
    P0, A = family_presentation()
    F, E = A.F, A.E
    c0, a0 = A.b1_coeffs()[0], A.b2_coeffs()[0]
    out = {
        "base_cocycle": P0.invariant_report()["ok"],
        "family_cocycle": A.invariant_report()["ok"],
        "c0_nonzero": not c0.is_zero(),
        "a0_nonzero": not a0.is_zero(),
    }
    lam = -c0 / a0
    C = twist_product(A, CrossedProductPresentation(E, E.one, E(lam), E.one))
    out["twisted_cocycle"] = C.invariant_report()["ok"]
    alg = CrossedProduct(C)
    v = alg.z1 + alg.z2
    s = alg.t1 * alg.t2
    v3 = v * v * v
    out["v_commutation"] = v * s == (s * v).scale(F.root_of_unity(3))
    out["v3_commutes"] = v3 * s == s * v3
    out["trace_v3_zero"] = alg.reduced_trace(v3).is_zero()
    return out


def x_identities() -> dict:
    F = ParameterField(("f1", "f2", "l", "l1", "l2"))
    f1, f2, l, l1, l2 = F.vars("f1", "f2", "l", "l1", "l2")
    f_s = f1 * f2
    K = bicyclic_field(F, f_s, l, names=("s", "t3"), check=False)
    t3 = K.gen()
    Pp = CrossedProductPresentation(K, K.one, K(l1) * t3 + K(l2) * t3 * t3, K.one)
    D = d_presentation(K, f_s, l1)
    R = twist_product(Pp, D)
    alg = CrossedProduct(R, check=False)
    x = alg.t1 + alg.z2
    x2 = x * x
    x3 = x2 * x
    coef = -(f_s * l2 / l1)
    x9 = x3 * x3 * x3
    touched = set(x.data) | set(x2.data) | set(x3.data) | set(x9.data)
    scalar = x9.data.get((0, 0))
    return {
        "D_cocycle": D.invariant_report()["ok"],
        "R_b2_formula": K(R.b2) == K(-f_s) + K(coef) * t3,
        "z1_free": all(k == 0 for k, _ in touched),
        "x3_associative": x3 == x * x2,
        "x3_formula": x3 == alg.scalar(K(coef) * t3),
        "x9_in_L": set(x9.data) == {(0, 0)} and scalar is not None and scalar.in_parent() and scalar.coeffs[0].in_parent(),
        "x9_value": x9 == alg.scalar(K(coef**3 * l)),
    }


def identity_suite() -> dict:
    return {"v": v_identities(), "x": x_identities()}


def suite_passed(res: dict) -> bool:
    return all(v is True for part in res.values() for v in part.values())
