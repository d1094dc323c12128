"""Exact and high-precision tools for zeta functions of curves over finite
fields, masses of vector bundles and lattices, and related root-system and
Witten-zeta computations."""

from .curvezeta import (
    CurveData,
    artin_zeta,
    completed_zeta_value,
    effective_divisor_counts,
    rh_check,
    zeta_special_value,
)
from .exactmath import HPNumber, RationalFunction, UniPoly
from .zetassembly import (
    AlphaBetaTable,
    assemble_zeta,
    extract_numerator,
    functional_equation_check,
    rank_one_pipeline,
    residue_at_one,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaBetaTable",
    "CurveData",
    "HPNumber",
    "RationalFunction",
    "UniPoly",
    "artin_zeta",
    "assemble_zeta",
    "completed_zeta_value",
    "effective_divisor_counts",
    "extract_numerator",
    "functional_equation_check",
    "rank_one_pipeline",
    "residue_at_one",
    "rh_check",
    "zeta_special_value",
]
