"""The exponent-3 branch: telescoping into five exponent-3 degree-9 symbols, Tignol, descent.

Instances are reverse-constructed: pick gamma, x3 and norm witnesses theta_i,
then define x2, x1, a, b, c so that every telescoped factor is visibly of the
form (y, N(theta))_9 with theta in L(y^{1/3}).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from ..brauer import BrauerExpr, ExtensionDescriptor, SymbolTerm, normalize, rosset_tate_cor
from ..fields.kummer import KummerField, is_dth_power
from ..oracle.invariants import invariant_vector, pushforward
from . import certificate as cert
from .chain import BudgetExhausted, ChainWitness, find_or_verify_chain, verify_chain
from .stages import normalize_coefficients


# -- Tignol -----------------------------------------------------------------


@dataclass(frozen=True)
class NormWitness:
    """alpha^3 = a generates M = K(alpha); b = N_{M/K}(theta)."""

    M: KummerField
    theta: object

    @property
    def a(self):
        return self.M.radicand

    @property
    def b(self):
        return self.theta.norm()

    def to_json(self) -> dict:
        return {"theta": self.M.element_to_json(self.theta)}


def cube_root_field(a, name: str = "alpha") -> KummerField:
    return KummerField(a.field, 3, a, name, check=False)


def tignol_decompose(witness: NormWitness, coeff: int = 1, provenance: str = "tignol", check: bool = True) -> BrauerExpr:
    """(a, N theta)_9 = cor_{M/K} (a, theta)_9 = cor_{M/K} (alpha, theta)_3: at most 3 degree-3 symbols."""
    M = witness.M
    if witness.theta.is_zero():
        raise ValueError("theta must be nonzero")
    ext = ExtensionDescriptor.kummer(M)
    out = rosset_tate_cor(SymbolTerm(M.gen(), M(witness.theta), 3, coeff, provenance), ext, check=check)
    if check:
        K = M.parent
        lhs = BrauerExpr.symbol(K, witness.a, witness.b, 9).scale(coeff)
        if invariant_vector(lhs) != invariant_vector(out):
            raise AssertionError("Tignol decomposition does not match the input class")
    return out


def random_theta(rng: random.Random, M: KummerField, terms: int = 2):
    """1 + small constant multiples of alpha, alpha^2 (nonzero by construction)."""
    K = M.parent
    F = _rf(K)
    while True:
        coeffs = [K.one, K.zero, K.zero]
        for _ in range(terms):
            i = rng.randrange(1, 3)
            coeffs[i] = coeffs[i] + K(F(rng.randrange(1, F.p)))
        if not (coeffs[1].is_zero() and coeffs[2].is_zero()):
            return M.from_coeffs(coeffs)


def _rf(node):
    while not hasattr(node, "var"):
        node = node.parent
    return node


def reverse_tignol_case(rng: random.Random, K, degree_bound: int = 1):
    """(a, theta) with a a non-cube of K; the symbol is (a, N theta)_9."""
    F = _rf(K)
    for _ in range(100):
        coeffs = [rng.randrange(F.p) for _ in range(rng.randint(1, degree_bound))] + [1]
        a = K(F.from_polys(F.poly(coeffs))) * K(F(rng.randrange(1, F.p)))
        if is_dth_power(F(a) if K == F else a, 3):
            continue
        M = cube_root_field(a)
        return NormWitness(M, random_theta(rng, M))
    raise RuntimeError("no non-cube found")


# -- MT3 instance --------------------------------------------------------------------


@dataclass
class MT3Instance:
    F: object
    L: KummerField
    gamma: object
    x3: object
    alpha: object
    beta: object
    values: dict  # atom name -> element of L
    by_radicand: dict  # atom name y -> NormWitness over L(y^{1/3})

    @property
    def witnesses(self) -> list:
        """One per telescoped factor, in factor order."""
        return [self.by_radicand[name] for name, _, _, _ in FACTORS]

    def to_json(self) -> dict:
        F, L = self.F, self.L
        return {
            "disc": F.element_to_json(L.radicand),
            "gamma": F.element_to_json(self.gamma),
            "x3": L.element_to_json(self.x3),
            "alpha": F.element_to_json(self.alpha),
            "beta": F.element_to_json(self.beta),
            "thetas": [self.by_radicand[n].to_json()["theta"] for n in CONSTRUCTION],
        }


# factor i: (y, N theta_i)_9 with sign s_i; telescoped symbol and its atom factorization
FACTORS = [
    # (a, b/x1)_9
    ("a", 1, (("a", 1),), (("b", 1), ("x1", -1))),
    # (a/x2, x1)_9 = -(x1, a/x2)_9
    ("x1", -1, (("a", 1), ("x2", -1)), (("x1", 1),)),
    # (x2, x1/x3)_9
    ("x2", 1, (("x2", 1),), (("x1", 1), ("x3", -1))),
    # (x2/gamma, x3)_9 = -(x3, x2/gamma)_9
    ("x3", -1, (("x2", 1), ("gamma", -1)), (("x3", 1),)),
    # (gamma, x3 c)_9
    ("gamma", 1, (("gamma", 1),), (("x3", 1), ("c", 1))),
]


def _eval(values, fact):
    out = None
    for name, e in fact:
        v = values[name] ** e
        out = v if out is None else out * v
    return out


CONSTRUCTION = ("x3", "x2", "x1", "a", "gamma")


def build_instance(F, L, gamma, x3, alpha, beta, theta_data) -> MT3Instance:
    """theta_data: five thetas as JSON coefficient lists or callables M -> theta,
    indexed by CONSTRUCTION (the cube root each theta lives over)."""
    values = {"gamma": L(gamma), "x3": L(x3)}
    thetas = {}

    def theta_for(idx, y):
        M = cube_root_field(y)
        d = theta_data[idx]
        th = d(M) if callable(d) else M.element_from_json(d)
        thetas[CONSTRUCTION[idx]] = NormWitness(M, th)
        return th.norm()

    # x2 = gamma N(theta4), theta4 in L(x3^{1/3})
    values["x2"] = values["gamma"] * theta_for(0, values["x3"])
    # x1 = x3 N(theta3), theta3 in L(x2^{1/3})
    values["x1"] = values["x3"] * theta_for(1, values["x2"])
    # a = x2 N(theta2), theta2 in L(x1^{1/3})
    values["a"] = values["x2"] * theta_for(2, values["x1"])
    # b = x1 N(theta1), theta1 in L(a^{1/3})
    values["b"] = values["x1"] * theta_for(3, values["a"])
    # c = N(theta5) / x3, theta5 in L(gamma^{1/3})
    values["c"] = theta_for(4, values["gamma"]) / values["x3"]
    return MT3Instance(F, L, F(gamma), L(x3), F(alpha), F(beta), values, thetas)


def random_instance(rng: random.Random, F, degree_bound: int = 1) -> MT3Instance:
    from .specialize import _random_poly

    for _ in range(100):
        disc = _random_poly(rng, F, rng.randint(1, 2))
        if disc.sqrt() is not None:
            continue
        L = KummerField(F, 2, disc, "d", check=False)
        gamma = _random_poly(rng, F, 1) * F(rng.randrange(1, F.p))
        x3 = L(_random_poly(rng, F, rng.randint(1, degree_bound))) + L.gen() * L(F(rng.randrange(0, F.p)))
        alpha = _random_poly(rng, F, 1)
        beta = F(rng.randrange(2, F.p))
        if is_dth_power(gamma, 3) or is_dth_power(alpha, 3):
            continue
        try:
            inst = build_instance(F, L, gamma, x3, alpha, beta, [lambda M: random_theta(rng, M)] * 5)
        except ArithmeticError:
            continue
        vals = list(inst.values.values())
        if any(v.is_zero() or v == L.one for v in vals) or len({str(v) for v in vals}) < len(vals):
            continue
        return inst
    raise RuntimeError("no MT3 instance found")


def instance_from_json(F, data) -> MT3Instance:
    disc = F.element_from_json(data["disc"])
    L = KummerField(F, 2, disc, "d", check=False)
    return build_instance(
        F, L, F.element_from_json(data["gamma"]), L.element_from_json(data["x3"]),
        F.element_from_json(data["alpha"]), F.element_from_json(data["beta"]), data["thetas"],
    )


# -- the branch ---------------------------------------------------------------------


@dataclass
class MT3Result:
    inst: MT3Instance
    mt1: BrauerExpr
    telescoped: BrauerExpr
    over_L: BrauerExpr
    over_F: BrauerExpr
    checks: dict
    chain: ChainWitness
    chain_search: dict | None = None


def exponent3_branch(inst: MT3Instance, chain_budget: int = 0) -> MT3Result:
    """MT3 on a reverse-constructed instance.

    The chain comes from the construction; with chain_budget > 0 an independent
    height search is also attempted and its outcome recorded (not a verdict).
    """
    L, F, vals = inst.L, inst.F, inst.values
    ext = ExtensionDescriptor.kummer(L)
    atoms = dict(vals)
    mt1 = BrauerExpr(
        L,
        (
            SymbolTerm(vals["a"], vals["b"], 9, 1, "(a,b)_9", (("a", 1),), (("b", 1),)),
            SymbolTerm(vals["gamma"], vals["c"], 9, 1, "(gamma,c)_9", (("gamma", 1),), (("c", 1),)),
            SymbolTerm(L(inst.alpha), L(inst.beta), 3, 1, "(alpha,beta)_3"),
        ),
        atoms,
    )
    checks: dict = {}
    checks["mt1_exponent_divides_3"] = 3 % invariant_vector(mt1).exponent() == 0
    # chain, as the exponent-3 hypothesis predicts
    chain = ChainWitness(vals["x1"], vals["x2"], vals["x3"])
    checks["chain_links"] = verify_chain(vals["a"], vals["b"], vals["gamma"], vals["c"], chain)
    search = None
    if chain_budget > 0:
        try:
            found = find_or_verify_chain(vals["a"], vals["b"], vals["gamma"], vals["c"], budget=chain_budget, base_field=F)
            search = {"status": "found", "witness": found.to_json()}
        except BudgetExhausted as exc:
            search = {"status": "budget-exhausted", "detail": str(exc)}
    # telescoping
    tele_terms = []
    for i, (_, sign, fa, fb) in enumerate(FACTORS):
        tele_terms.append(SymbolTerm(_eval(vals, fa), _eval(vals, fb), 9, 1, f"factor{i + 1}", fa, fb))
    telescoped = BrauerExpr(L, tuple(tele_terms), atoms)
    degree9 = BrauerExpr(L, mt1.terms[:2], atoms)
    checks["telescoping_formal"] = len(normalize(telescoped - degree9, steinberg=False).terms) == 0
    checks["telescoping_oracle"] = invariant_vector(telescoped) == invariant_vector(degree9)
    checks["factor_exponents"] = [3 % invariant_vector(BrauerExpr(L, (t,))).exponent() == 0 for t in tele_terms]
    # Tignol on each factor: factor_i = sign_i (y, N theta)_9
    over_L_terms: tuple = ()
    witness_ok = []
    for (ynm, sign, fa, fb), w, t in zip(FACTORS, inst.witnesses, tele_terms):
        y = vals[ynm]
        witness_ok.append(w.a == y)
        piece = tignol_decompose(w, sign, provenance=f"tignol:{ynm}")
        witness_ok.append(invariant_vector(piece) == invariant_vector(BrauerExpr(L, (replace(t, fa=None, fb=None),))))
        over_L_terms += piece.terms
    checks["tignol_pieces"] = witness_ok
    over_L = normalize_coefficients(BrauerExpr(L, over_L_terms + (mt1.terms[2],)))
    checks["over_L_class"] = invariant_vector(over_L) == invariant_vector(mt1)
    # descent: cor then 2^{-1} = slot power 2 on degree-3 symbols
    cor_terms: tuple = ()
    for t in over_L.terms:
        cor_terms += rosset_tate_cor(t, ext).terms
    over_F = normalize_coefficients(
        BrauerExpr(F, tuple(replace(t, a=t.a**2) for t in cor_terms))
    )
    checks["descent_consistency"] = invariant_vector(over_F).scale(2) == pushforward(invariant_vector(mt1), F)
    return MT3Result(inst, mt1, telescoped, over_L, over_F, checks, chain, search)


def verdicts(res: MT3Result) -> dict:
    c = res.checks
    flat = {k: (all(v) if isinstance(v, list) else v) for k, v in c.items()}
    return {
        "count_L": len(res.over_L),
        "count_F": len(res.over_F),
        "degrees_L": sorted(set(res.over_L.degrees())),
        "degrees_F": sorted(set(res.over_F.degrees())),
        **flat,
    }


def passed(v: dict) -> bool:
    return v["count_L"] <= 16 and v["count_F"] <= 31 and all(
        val is True for k, val in v.items() if not k.startswith(("count", "degrees"))
    )


def to_certificate(res: MT3Result, meta: dict | None = None) -> dict:
    L = res.inst.L
    return {
        "schema": cert.SCHEMA,
        "kind": "mt3",
        "meta": meta or {},
        "field": res.inst.F.to_record(),
        "quadratic": {"radicand": res.inst.F.element_to_json(L.radicand), "name": L.name},
        "input": res.inst.to_json(),
        "chain": res.chain.to_json(),
        "chain_search": res.chain_search,
        "expressions": {
            "MT1": cert.expr_record(res.mt1),
            "telescoped": cert.expr_record(res.telescoped),
            "over_L": cert.expr_record(res.over_L),
            "over_F": cert.expr_record(res.over_F),
        },
        "checks": res.checks,
        "verdicts": verdicts(res),
    }


def verify_certificate(doc: dict) -> dict:
    F = cert.field_from_record(doc["field"])
    L = cert.quadratic_from_record(F, doc["quadratic"])
    try:
        inst = instance_from_json(F, doc["input"])
    except (KeyError, ArithmeticError, ValueError) as exc:
        raise cert.CertificateError("input", f"bad MT3 input: {exc}") from exc
    if inst.L != L:
        raise cert.CertificateError("input", "quadratic extension mismatch")
    stored = {}
    for name in ("MT1", "telescoped", "over_L", "over_F"):
        stored[name] = cert.check_expr_record(F if name == "over_F" else L, doc["expressions"][name], name)
    res = exponent3_branch(inst)
    if res.chain.to_json() != doc["chain"]:
        raise cert.CertificateError("chain", "chain witness does not reproduce")
    for name, expr in (("MT1", res.mt1), ("telescoped", res.telescoped), ("over_L", res.over_L), ("over_F", res.over_F)):
        if expr.to_json() != stored[name].to_json():
            raise cert.CertificateError(name, "expression does not reproduce")
    if res.checks != doc["checks"]:
        raise cert.CertificateError("checks", "stage checks do not reproduce")
    return verdicts(res)


# -- standalone Tignol certificates ------------------------------------------------


def tignol_verdicts(w: NormWitness, out: BrauerExpr) -> dict:
    K = w.M.parent
    lhs = BrauerExpr.symbol(K, w.a, w.b, 9)
    return {
        "count": len(out),
        "degrees": sorted(set(out.degrees())),
        "at_most_3": len(out) <= 3 and all(n == 3 for n in out.degrees()),
        "oracle_equal": invariant_vector(lhs) == invariant_vector(out),
        "input_exponent": invariant_vector(lhs).exponent(),
    }


def tignol_passed(v: dict) -> bool:
    return v["at_most_3"] is True and v["oracle_equal"] is True


def tignol_certificate(w: NormWitness, meta: dict | None = None) -> dict:
    K = w.M.parent
    out = tignol_decompose(w, check=False)
    return {
        "schema": cert.SCHEMA,
        "kind": "tignol",
        "meta": meta or {},
        "field": K.to_record(),
        "input": {"a": K.element_to_json(w.a), "theta": w.to_json()["theta"]},
        "expressions": {
            "input": cert.expr_record(BrauerExpr.symbol(K, w.a, w.b, 9)),
            "decomposition": cert.expr_record(out),
        },
        "verdicts": tignol_verdicts(w, out),
    }


def verify_tignol_certificate(doc: dict) -> dict:
    K = cert.field_from_record(doc["field"])
    try:
        M = cube_root_field(K.element_from_json(doc["input"]["a"]))
        w = NormWitness(M, M.element_from_json(doc["input"]["theta"]))
    except (KeyError, ArithmeticError, ValueError) as exc:
        raise cert.CertificateError("input", f"bad Tignol input: {exc}") from exc
    cert.check_expr_record(K, doc["expressions"]["input"], "input")
    stored = cert.check_expr_record(K, doc["expressions"]["decomposition"], "decomposition")
    out = tignol_decompose(w, check=False)
    if out.to_json() != stored.to_json():
        raise cert.CertificateError("decomposition", "decomposition does not reproduce")
    return tignol_verdicts(w, out)
