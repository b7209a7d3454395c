"""Exact polynomial families attached to Hessenberg varieties and quantum flag cohomology."""

from .fij import f_poly
from .hessfn import HessenbergFunction, dual, parse_csv, validate
from .ideal import BudgetExceeded, GroebnerBasis, buchberger, hilbert_series, normal_form
from .poly import DEFAULT_REGISTRY, Polynomial, PolyMatrix, VarRegistry, parse, serialize
from .quantum import E_poly, F_poly
from .symfun import complete, elementary
from .verify import VerificationReport, run_suite

__all__ = [
    "BudgetExceeded",
    "DEFAULT_REGISTRY",
    "E_poly",
    "F_poly",
    "GroebnerBasis",
    "HessenbergFunction",
    "PolyMatrix",
    "Polynomial",
    "VarRegistry",
    "VerificationReport",
    "buchberger",
    "complete",
    "dual",
    "elementary",
    "f_poly",
    "hilbert_series",
    "normal_form",
    "parse",
    "parse_csv",
    "run_suite",
    "serialize",
    "validate",
]
