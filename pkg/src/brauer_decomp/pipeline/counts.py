"""Symbol counts for a general degree-9 algebra, recomputed from first principles.

A degree-9 algebra becomes a Z/3 x Z/3 crossed product after an extension
of degree [S_9 : Syl_3] (a 3-Sylow fixed field H of the splitting field of a
maximal subfield), then a quadratic extension P = L[sqrt disc] as in the
crossed-product construction.  Symbols over P are pushed down by
corestriction, one symbol of P per unit of [P : F].
"""

from __future__ import annotations

from math import factorial

from . import certificate as cert

MT2_ARITY = (3, 1)  # degree-9 and degree-3 symbols after descent
MT3_SYMBOLS_PER_FACTOR = 3  # degree-9 exponent-3 symbol -> 3 degree-3 symbols
MT3_TELESCOPE_FACTORS = 5


def legendre(n: int, p: int) -> int:
    """Exponent of p in n!."""
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def counts_MT4(degree: int = 9, p: int = 3) -> dict:
    group_order = factorial(degree)
    sylow = p ** legendre(degree, p)
    index = group_order // sylow
    quadratic = 2
    PF = index * quadratic
    deg9, deg3 = MT2_ARITY
    mt3_over_L = MT3_TELESCOPE_FACTORS * MT3_SYMBOLS_PER_FACTOR + 1
    mt3_over_F = MT3_TELESCOPE_FACTORS * MT3_SYMBOLS_PER_FACTOR * quadratic + 1
    return {
        "S9_order": group_order,
        "sylow_order": sylow,
        "L_over_H": index,
        "P_over_F": PF,
        "degree9_symbols": deg9 * PF,
        "degree3_symbols": deg3 * PF,
        "total_symbols": (deg9 + deg3) * PF,
        "exponent3_symbols": mt3_over_F * PF,
        "mt2_arity": [deg9, deg3],
        "mt3_arity_L": mt3_over_L,
        "mt3_arity_F": mt3_over_F,
    }


EXPECTED = {
    "L_over_H": 4480,
    "P_over_F": 8960,
    "degree9_symbols": 26880,
    "degree3_symbols": 8960,
    "total_symbols": 35840,
    "exponent3_symbols": 277760,
    "mt2_arity": [3, 1],
    "mt3_arity_L": 16,
    "mt3_arity_F": 31,
}


def verdicts(table: dict) -> dict:
    return {k: table[k] == v for k, v in EXPECTED.items()}


def to_certificate(meta: dict | None = None) -> dict:
    table = counts_MT4()
    return {
        "schema": cert.SCHEMA,
        "kind": "counts",
        "meta": meta or {},
        "field": None,
        "table": table,
        "verdicts": verdicts(table),
    }


def verify_certificate(doc: dict) -> dict:
    table = counts_MT4()
    if doc.get("table") != table:
        raise cert.CertificateError("counts", "stored count table does not reproduce")
    return verdicts(table)
