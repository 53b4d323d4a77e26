import random

import pytest
from hypothesis import given, settings, strategies as st

from brauer_decomp.algebra.crossed import (
    GROUP,
    CrossedProduct,
    CrossedProductPresentation,
    base_change,
    twist_product,
)
from brauer_decomp.algebra.represent import (
    algebra_minimal_polynomial,
    cubic_galois_action,
    eigen_projector,
    identity_coefficient,
    is_invertible,
    lagrange_resolvent,
    skolem_noether_solve,
)
from brauer_decomp.algebra.sca import center_and_trace, tensor
from brauer_decomp.algebra.symbol import SymbolData, build_symbol_algebra
from brauer_decomp.fields import FieldError, KummerField
from brauer_decomp.fields.poly import Poly, compose_mod
from brauer_decomp.pipeline.specialize import random_specialization
from brauer_decomp.pipeline.stages import step_quadratic_L, step_twist_B

from conftest import FIELDS

F = FIELDS[19]
t = F.gen()


@pytest.fixture(scope="module")
def sample():
    # a specialization known to be non-degenerate at every generic step
    return random_specialization(random.Random(1), F)


@pytest.fixture(scope="module")
def A(sample):
    return CrossedProduct(sample.presentation)


def test_relations_and_cocycle(A):
    assert all(A.relation_report().values())
    assert A.cocycle_associative()
    assert A.reduced_trace(A.one()) == F(9)
    assert A.reduced_trace(A.z1).is_zero()


def _random_element(A, rng, blocks=2):
    E = A.E
    data = {}
    for kl in rng.sample(GROUP, blocks):
        data[kl] = E.from_coeffs([E.parent.from_coeffs([F(rng.randrange(19)) for _ in range(3)]) for _ in range(3)])
    from brauer_decomp.algebra.sca import AlgebraElement

    return AlgebraElement(A, {k: v for k, v in data.items() if not v.is_zero()})


@settings(max_examples=5)
@given(st.integers(0, 10**6))
def test_associative_on_random_elements(A, seed):
    rng = random.Random(seed)
    x, y, z = (_random_element(A, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert A.identity_of_product(x, y) == identity_coefficient(x * y)


def test_invalid_presentation_rejected(sample):
    P = sample.presentation
    bad = CrossedProductPresentation(P.E, P.b1, P.b2, P.E(F(2)) * P.E(P.u))
    assert not bad.invariant_report()["norm_u_is_1"]
    with pytest.raises(FieldError):
        CrossedProduct(bad)


def test_twist_with_trivial_is_identity(sample):
    P = sample.presentation
    one = CrossedProductPresentation(P.E, P.E.one, P.E.one, P.E.one)
    assert twist_product(P, one).to_json() == P.to_json()


def test_base_change_keeps_relations(sample):
    L = KummerField(F, 2, t + 7, "d")
    C = CrossedProduct(base_change(sample.presentation, L))
    assert all(C.relation_report().values())


def test_symbol_algebra_is_central_simple_of_degree_3():
    S = build_symbol_algebra(SymbolData(t, t + 1, 3, F))
    assert S.check_associativity(mode="full")
    center, _ = center_and_trace(S)
    assert len(center) == 1
    x, y = S.gens
    assert algebra_minimal_polynomial(x) == Poly(F, [-t, F.zero, F.zero, F.one])
    assert y * x == (x * y).scale(F.root_of_unity(3))


def test_skolem_noether_recovers_conjugator():
    S = build_symbol_algebra(SymbolData(t, t + 1, 3, F))
    x, y = S.gens
    rho = F.root_of_unity(3)
    z = skolem_noether_solve(S, [x], [x.scale(rho)])
    assert is_invertible(z)
    assert z * x == x.scale(rho) * z


def test_tensor_of_symbols_has_degree_9():
    S = build_symbol_algebra(SymbolData(t, F(2), 3, F))
    T = tensor(S, S)
    assert T.dim == 81
    assert T.reduced_trace(T.one()) == F(9)


def test_cyclic_cubic_data(sample):
    tb = step_twist_B(sample.presentation)
    Q = step_quadratic_L(tb.C)
    m = Poly(Q.g.field, [Q.g.field(c) for c in Q.m.coeffs])
    X = Poly.x(m.field)
    g = Q.g
    assert compose_mod(compose_mod(g, g, m), g, m) == X % m
    rho = m.field.root_of_unity(3)
    assert compose_mod(Q.h, g, m) == (Q.h * Poly(m.field, [rho])) % m
    # h^3 is fixed by sigma, so a constant mod m
    assert ((Q.h * Q.h * Q.h) % m).degree <= 0
    assert lagrange_resolvent(m, g, rho) == Q.h
    assert cubic_galois_action(m, m.field.gen().scale(_delta_scale(Q))) == g


def _delta_scale(Q):
    r, c = Q.disc.split_square()
    return c


def test_eigen_projector(sample):
    tb = step_twist_B(sample.presentation)
    Q = step_quadratic_L(tb.C)
    C = Q.CL
    t3 = Q.t3
    t3_inv = t3 * t3 * C.scalar(Q.l.inverse())
    rho = C.base.root_of_unity(3)
    y = C.z(1, 2)
    w = eigen_projector(y, t3, t3_inv, rho.inverse(), 3)
    assert t3 * w == (w * t3).scale(rho.inverse())
