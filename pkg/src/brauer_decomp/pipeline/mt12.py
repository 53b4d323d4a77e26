"""One MT1/MT2 run on a specialization, and its certificate."""

from __future__ import annotations

from dataclasses import dataclass

from ..brauer import BrauerExpr, ExtensionDescriptor, restrict
from ..oracle.invariants import invariant_vector, restriction
from . import certificate as cert
from .specialize import Specialization
from .stages import (
    StageRecord,
    assemble_MT1,
    descend_MT2,
    step_quadratic_L,
    step_represent_KL,
    step_twist_B,
    step_twist_D_and_R,
)


@dataclass
class MT12Result:
    sample: Specialization
    ext: ExtensionDescriptor
    stages: list[StageRecord]
    B: BrauerExpr
    D: BrauerExpr
    R: BrauerExpr
    mt1: BrauerExpr
    mt2: BrauerExpr

    @property
    def L(self):
        return self.ext.upper


def run_mt12(sample: Specialization, check: bool = True) -> MT12Result:
    """Raises Degenerate when a generic step fails at this specialization."""
    tb = step_twist_B(sample.presentation)
    Q = step_quadratic_L(tb.C)
    rep, rep_rec = step_represent_KL(Q)
    L = Q.ext.upper
    f_s = L(sample.f1 * sample.f2)
    dr = step_twist_D_and_R(rep, f_s, Q.l)
    mt1 = assemble_MT1(dr.R, dr.D, tb.B, Q.ext)
    mt2 = descend_MT2(mt1, Q.ext, check=check)
    return MT12Result(sample, Q.ext, [tb.record, Q.record, rep_rec, dr.record], tb.B, dr.D, dr.R, mt1, mt2)


def verdicts(res: MT12Result) -> dict:
    known = res.sample.known_class()
    v_known = invariant_vector(known)
    v_mt1 = invariant_vector(res.mt1)
    v_mt2 = invariant_vector(res.mt2)
    if res.ext.degree == 1:
        res_law = v_mt2 == v_mt1
    else:
        res_law = restriction(v_mt2, res.L) == v_mt1
    return {
        "stages_pass": all(s.ok() for s in res.stages),
        "input_exponent": v_known.exponent(),
        "mt1_arity": res.mt1.degrees(),
        "mt2_arity": res.mt2.degrees(),
        "mt2_at_most_4": len(res.mt2) <= 4,
        "restriction_law": res_law,
        "mt1_matches_input": (restriction(v_known, res.L) if res.ext.degree > 1 else v_known) == v_mt1,
        "mt2_equals_input": v_mt2 == v_known,
    }


def passed(v: dict) -> bool:
    return all(v[k] is True for k in ("stages_pass", "mt2_at_most_4", "restriction_law", "mt1_matches_input", "mt2_equals_input"))


def to_certificate(res: MT12Result, meta: dict | None = None) -> dict:
    F = res.sample.F
    L = res.L
    return {
        "schema": cert.SCHEMA,
        "kind": "mt1-mt2",
        "meta": meta or {},
        "field": F.to_record(),
        "quadratic": None if res.ext.degree == 1 else {"radicand": F.element_to_json(L.radicand), "name": L.name},
        "input": {
            "specialization": res.sample.to_json(),
            "presentation": res.sample.presentation.to_json(),
            "known_class": cert.expr_record(res.sample.known_class()),
        },
        "stages": [s.to_json() for s in res.stages],
        "expressions": {
            "B": cert.expr_record(res.B),
            "D": cert.expr_record(res.D),
            "R": cert.expr_record(res.R),
            "MT1": cert.expr_record(res.mt1),
            "MT2": cert.expr_record(res.mt2),
        },
        "verdicts": verdicts(res),
    }


def verify_certificate(doc: dict) -> dict:
    """Re-derive every stage from the serialized input and re-check stored tables."""
    F = cert.field_from_record(doc["field"])
    try:
        sample = Specialization.from_json(F, doc["input"]["specialization"])
    except (KeyError, ArithmeticError) as exc:
        raise cert.CertificateError("input", f"bad specialization: {exc}") from exc
    if sample.presentation.to_json() != doc["input"]["presentation"]:
        raise cert.CertificateError("input", "presentation does not match the specialization data")
    cert.check_expr_record(F, doc["input"]["known_class"], "input")
    L = cert.quadratic_from_record(F, doc.get("quadratic"))
    stored = {}
    for name in ("B", "D", "R", "MT1", "MT2"):
        field = F if name in ("B", "MT2") else L
        stored[name] = cert.check_expr_record(field, doc["expressions"][name], f"expression {name}")
    res = run_mt12(sample)
    if res.L != L:
        raise cert.CertificateError("quadratic-L", "recomputed L differs")
    for rec, old in zip(res.stages, doc["stages"]):
        if rec.to_json() != old:
            raise cert.CertificateError(rec.name, "stage data or checks do not reproduce")
    for name, expr in (("B", res.B), ("D", res.D), ("R", res.R), ("MT1", res.mt1), ("MT2", res.mt2)):
        if expr.to_json() != stored[name].to_json():
            raise cert.CertificateError(f"expression {name}", "expression does not reproduce")
    # the MT1 identity over L, recomputed from the stored symbols
    if res.ext.degree > 1:
        lhs = stored["R"] - stored["D"] - restrict(stored["B"], res.ext)
        if invariant_vector(lhs) != invariant_vector(stored["MT1"]):
            raise cert.CertificateError("expression MT1", "MT1 != R - D - B")
    return verdicts(res)
