"""Exact field towers: prime fields, F_p(t), Kummer levels, Q(zeta_9) and parameter fields."""

from .base import Field, FieldElement, FieldError
from .cyclotomic import CycElement, CyclotomicField
from .finite import FFElement, FiniteField
from .kummer import KummerElement, KummerField, is_dth_power
from .parameter import ParamElement, ParameterField
from .poly import Poly, field_sqrt, min_poly_disc, minimal_polynomial
from .ratfunc import RationalFunctionField, RFElement


def norm_trace(L: Field, x):
    """(N_{L/parent}(x), Tr_{L/parent}(x))."""
    if getattr(x, "field", None) != L:
        raise FieldError(f"{x!r} is not owned by {L}")
    if not isinstance(L, KummerField):
        raise FieldError(f"{L} is not an extension node")
    return x.norm(), x.trace()


def primitive_root_of_unity(K: Field, n: int):
    return K.root_of_unity(n)


__all__ = [
    "CycElement",
    "CyclotomicField",
    "FFElement",
    "Field",
    "FieldElement",
    "FieldError",
    "FiniteField",
    "KummerElement",
    "KummerField",
    "ParamElement",
    "ParameterField",
    "Poly",
    "RFElement",
    "RationalFunctionField",
    "field_sqrt",
    "is_dth_power",
    "min_poly_disc",
    "minimal_polynomial",
    "norm_trace",
    "primitive_root_of_unity",
]
