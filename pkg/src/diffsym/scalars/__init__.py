"""Exact scalar tower: Q < Q(w) < Q(w)(t) < Kummer extensions < monomial fields."""

from .cyclo import CycloElem, CycloField, cyclotomic_polynomial
from .kummer import KummerElem, KummerField
from .monomial import MonomialDiffField, PolyDiffElem, PolyDiffField
from .ode import OdeSolution, brute_force_ode_oracle, rational_ode_solve
from .polys import (
    Poly,
    QQ,
    coprime_basis,
    is_zero_elem,
    multiplicity,
    poly_extended_gcd,
    poly_gcd,
    squarefree_decompose,
)
from .powers import (
    ReducibleRadicandError,
    cyclo_nth_root,
    is_prime,
    kummer_vahlen_certify,
    mth_power_up_to_constant,
    rational_nth_root,
)
from .ratfunc import RatFunc, RatFuncField

__all__ = [
    "CycloElem",
    "CycloField",
    "KummerElem",
    "KummerField",
    "MonomialDiffField",
    "OdeSolution",
    "Poly",
    "PolyDiffElem",
    "PolyDiffField",
    "QQ",
    "RatFunc",
    "RatFuncField",
    "ReducibleRadicandError",
    "brute_force_ode_oracle",
    "coprime_basis",
    "cyclo_nth_root",
    "cyclotomic_polynomial",
    "is_prime",
    "is_zero_elem",
    "kummer_vahlen_certify",
    "mth_power_up_to_constant",
    "multiplicity",
    "poly_extended_gcd",
    "poly_gcd",
    "rational_nth_root",
    "rational_ode_solve",
    "squarefree_decompose",
]
