"""Certificate documents: deterministic JSON with a schema version."""

from __future__ import annotations

import json
from pathlib import Path

from ..brauer import BrauerExpr
from ..fields.kummer import KummerField
from ..fields.ratfunc import RationalFunctionField
from ..oracle.invariants import invariant_vector

SCHEMA = "brauer-decomp-certificate/1"


class CertificateError(Exception):
    """Schema violation or a verdict that does not reproduce."""

    def __init__(self, stage: str, msg: str):
        super().__init__(f"[{stage}] {msg}")
        self.stage = stage


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def write(doc: dict, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(doc))
    return path


def load(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateError("schema", f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise CertificateError("schema", "not a certificate document of this schema")
    for key in ("kind", "verdicts"):
        if key not in doc:
            raise CertificateError("schema", f"missing field {key!r}")
    return doc


def field_from_record(rec: dict) -> RationalFunctionField:
    if rec.get("kind") != "rational-function":
        raise CertificateError("schema", f"unsupported field record {rec}")
    return RationalFunctionField(int(rec["q"]), rec["var"])


def quadratic_from_record(F, rec: dict | None):
    if rec is None:
        return F
    return KummerField(F, 2, F.element_from_json(rec["radicand"]), rec["name"], check=False)


def invariant_table(expr: BrauerExpr) -> list:
    return [[lab, n, d] for lab, n, d in invariant_vector(expr).table()]


def expr_record(expr: BrauerExpr) -> dict:
    return {"terms": expr.to_json(), "invariants": invariant_table(expr)}


def check_expr_record(field, rec: dict, stage: str) -> BrauerExpr:
    """Rebuild an expression and confirm its stored invariant table."""
    try:
        expr = BrauerExpr.from_json(field, rec["terms"])
    except (KeyError, ValueError, ArithmeticError) as exc:
        raise CertificateError(stage, f"unreadable expression: {exc}") from exc
    if invariant_table(expr) != rec["invariants"]:
        raise CertificateError(stage, "stored invariant table does not match the expression")
    return expr


def verify(doc: dict) -> dict:
    """Dispatch on the certificate kind; returns the recomputed verdicts or raises."""
    from . import counts, exponent3, mt12

    kind = doc["kind"]
    verifiers = {
        "mt1-mt2": mt12.verify_certificate,
        "mt3": exponent3.verify_certificate,
        "tignol": exponent3.verify_tignol_certificate,
        "counts": counts.verify_certificate,
    }
    if kind not in verifiers:
        raise CertificateError("schema", f"unknown certificate kind {kind!r}")
    verdicts = verifiers[kind](doc)
    if verdicts != doc["verdicts"]:
        diff = sorted(k for k in set(verdicts) | set(doc["verdicts"]) if verdicts.get(k) != doc["verdicts"].get(k))
        raise CertificateError("verdicts", f"verdicts differ at {diff}")
    return verdicts
