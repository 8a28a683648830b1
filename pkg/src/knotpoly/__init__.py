"""Exact multivariable link polynomials from enhanced R-matrices and braid closures."""

from .braidrep import BraidWord, closure_mrt, component_count
from .invariants import alexander, compute, delta_sl3, lambda1, lambda_minus1, v1
from .laurent import MultiLaurent, RationalFn, VarContext
from .rmatrices import EnhancedRMatrix, build_catalog_pair, check_axioms

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "EnhancedRMatrix",
    "MultiLaurent",
    "RationalFn",
    "VarContext",
    "alexander",
    "build_catalog_pair",
    "check_axioms",
    "closure_mrt",
    "component_count",
    "compute",
    "delta_sl3",
    "lambda1",
    "lambda_minus1",
    "v1",
]
