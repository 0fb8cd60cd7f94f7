"""Exact arithmetic kernel: rationals, cyclotomic numbers, Laurent and
multivariate polynomials, divided differences, determinants and Pfaffians."""
from fractions import Fraction as Rational

from .cyclo import (ComplexInterval, CycloElem, certified_sign, cyclotomic_poly,
                    embed_numeric, euler_phi)
from .errors import (ExactRingError, IndexOutOfRange, InexactDivision,
                     InsufficientVanishing, NonSquare, NotSkewSymmetric, OddDimension,
                     PrecisionExhausted, RingMismatch)
from .laurent import LaurentQ, q_limit, vanishing_order_at_minus_one
from .linalg import (bareiss_determinant, cofactor_determinant, determinant, matmul,
                     nullspace, pfaffian)
from .poly import (LAURENT_Q, RATIONAL, MultiPoly, Ring, cyclotomic, default_names,
                   divided_difference, exact_div, poly_arith, swap_vars, t_operator)

__all__ = [
    "Rational", "CycloElem", "ComplexInterval", "LaurentQ", "MultiPoly", "Ring",
    "RATIONAL", "LAURENT_Q", "cyclotomic", "default_names",
    "certified_sign", "cyclotomic_poly", "embed_numeric", "euler_phi",
    "q_limit", "vanishing_order_at_minus_one",
    "determinant", "cofactor_determinant", "bareiss_determinant", "pfaffian",
    "nullspace", "matmul",
    "poly_arith", "exact_div", "swap_vars", "divided_difference", "t_operator",
    "ExactRingError", "RingMismatch", "InexactDivision", "IndexOutOfRange",
    "NonSquare", "NotSkewSymmetric", "OddDimension", "InsufficientVanishing",
    "PrecisionExhausted",
]
