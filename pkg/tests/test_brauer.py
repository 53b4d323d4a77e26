from hypothesis import assume, given, settings, strategies as st

from brauer_decomp.brauer import (
    BrauerExpr,
    ExtensionDescriptor,
    SymbolTerm,
    apply_power_rule,
    corestrict,
    is_formally_zero,
    normalize,
    projection_cor,
    restrict,
    rosset_tate_cor,
    scale_by_slot_power,
)
from brauer_decomp.fields import KummerField, is_dth_power
from brauer_decomp.oracle.invariants import invariant_vector, pushforward_check
from brauer_decomp.parse import ParseError, parse_symbol_terms

from conftest import FIELDS, rf_elements

F19 = FIELDS[19]
t = F19.gen()


def extension(F, rad, d):
    if d == 2 and rad.sqrt() is not None:
        return None
    if d == 3 and is_dth_power(rad, 3):
        return None
    return ExtensionDescriptor.kummer(KummerField(F, d, rad, "u", check=False))


ext_data = st.sampled_from([19, 37]).flatmap(
    lambda q: st.tuples(rf_elements(q, 2), rf_elements(q, 2), rf_elements(q, 2), rf_elements(q, 2), st.sampled_from([2, 3]), st.sampled_from([3, 9]))
)


@settings(max_examples=30)
@given(ext_data)
def test_rosset_tate_pushforward(data):
    rad, a0, a1, b, d, n = data
    E = extension(rad.field, rad, d)
    assume(E is not None)
    U = E.upper
    x = U(a0) + U.gen() * U(a1)
    y = U(b) + U.gen() * U(a0) if d == 2 else U(b) + U.gen() * U.gen() * U(a1)
    for term in (SymbolTerm(x, y, n), SymbolTerm(x, U(b), n), SymbolTerm(U(a0), x, n)):
        if term.b.is_zero() or term.a.is_zero():
            continue
        out = rosset_tate_cor(term, E, check=False)
        assert len(out) <= E.degree
        assert pushforward_check(BrauerExpr(U, (term,)), out)


@settings(max_examples=20)
@given(ext_data)
def test_cor_res_is_multiplication_by_degree(data):
    rad, a, _, b, d, n = data
    E = extension(rad.field, rad, d)
    assume(E is not None)
    e = BrauerExpr.symbol(rad.field, a, b, n)
    back = corestrict(restrict(e, E), E)
    assert invariant_vector(back) == invariant_vector(e).scale(E.degree)


def test_projection_formula():
    L = KummerField(F19, 2, t, "d")
    E = ExtensionDescriptor.kummer(L)
    x = L(t + 1) + L.gen()
    out = projection_cor(SymbolTerm(x, L(t + 3), 9), E)
    assert out.terms[0].a == x.norm() and out.terms[0].b == t + 3
    assert pushforward_check(BrauerExpr.symbol(L, x, L(t + 3), 9), out)


def test_normalize_bilinear_and_steinberg():
    atoms = {"a": t, "b": t + 1, "c": t + 2}
    e = BrauerExpr(
        F19,
        (
            SymbolTerm(t * (t + 1), t + 2, 9, 1, "", (("a", 1), ("b", 1)), (("c", 1),)),
            SymbolTerm(t + 2, t, 9, 1, "", (("c", 1),), (("a", 1),)),
            SymbolTerm(t + 1, t + 2, 9, -1, "", (("b", 1),), (("c", 1),)),
        ),
        atoms,
    )
    assert is_formally_zero(e)
    assert is_formally_zero(BrauerExpr.symbol(F19, t, 1 - t, 3))
    assert not is_formally_zero(BrauerExpr.symbol(F19, t, 1 - t, 3), steinberg=False)
    assert invariant_vector(normalize(e)).is_zero()


def test_power_rule_and_slot_powering():
    e = BrauerExpr.symbol(F19, t, t + 5, 9, 3)
    assert apply_power_rule(e).degrees() == [3]
    assert invariant_vector(apply_power_rule(e)) == invariant_vector(e)
    e2 = BrauerExpr.symbol(F19, t, t + 5, 9) + BrauerExpr.symbol(F19, t + 1, F19(2), 3)
    assert invariant_vector(scale_by_slot_power(e2, 5)) == invariant_vector(e2).scale(5)


def test_json_round_trip():
    L = KummerField(F19, 2, t, "d")
    e = BrauerExpr.symbol(L, L(t + 1) + L.gen(), L(F19(3)), 9, 2)
    assert BrauerExpr.from_json(L, e.to_json()).to_json() == e.to_json()


def test_parser():
    terms = parse_symbol_terms(F19, "(t,2)_3 - 3*(t+1, t^2)_9")
    assert [(n, c) for _, _, n, c in terms] == [(3, 1), (9, -3)]
    try:
        parse_symbol_terms(F19, "(t,2")
    except ParseError as exc:
        assert exc.pos == 4
    else:
        raise AssertionError("expected a parse error")
