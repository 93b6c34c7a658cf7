"""Exact octonionic models of f4, so(16), compact e8 and split e8(8)."""

from ._matrix import Rational, frac
from .analysis import (
    ALGEBRAS,
    RootDatum,
    StructureTable,
    VerificationReport,
    build_structure_table,
    cartan_and_roots,
    killing_form,
    simplicity_certificate,
    verify_jacobi,
)
from .e8 import E8_DIM, E8Element, cartan_involution, e8_bracket, e8_split_bracket, scalar_product, tau
from .f4 import F4_DIM, F4Element, f4_bracket, f4_tau
from .octoct import OctOct, SoPair, oo_mul, so16_bracket
from .octonion import Octonion, oct_conj, oct_mul
from .so8 import Skew8, kappa, triality_lambda, triality_lambda2, wedge

__version__ = "0.1.0"

__all__ = [
    "ALGEBRAS", "E8_DIM", "F4_DIM", "E8Element", "F4Element", "OctOct", "Octonion", "Rational",
    "RootDatum", "Skew8", "SoPair", "StructureTable", "VerificationReport", "build_structure_table",
    "cartan_and_roots", "cartan_involution", "e8_bracket", "e8_split_bracket", "f4_bracket", "f4_tau",
    "frac", "kappa", "killing_form", "oct_conj", "oct_mul", "oo_mul", "scalar_product",
    "simplicity_certificate", "so16_bracket", "tau", "triality_lambda", "triality_lambda2",
    "verify_jacobi", "wedge",
]
