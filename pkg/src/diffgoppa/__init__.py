"""Differential Goppa codes over the projective line and elliptic curves.

Exact construction of generator matrices from jets of line-bundle sections,
residue-based duality, Taylor-group reparametrizations, and distance-design
algorithms, all in exact finite-field arithmetic.
"""

from .code import (
    CodeSpec,
    DistanceReport,
    Divisor,
    GoppaCode,
    LocalData,
    build_code,
    dual_code_residue,
    h_dual_linear,
    h_pairing,
    min_distance,
    verify_duality,
    weight,
)
from .curve import CurveModel, CurvePoint, curve_make, rational_points, section_basis
from .design import (
    SearchConfig,
    achieve_block_distance,
    nmds_g4,
    realize_linear_code,
    roth_lempel,
    search_parameters,
    sparsify_local,
    strong_obstruction,
)
from .errors import DiffGoppaError
from .field import Field, FqElement, field_make
from .matrix import FqMatrix, kernel_basis, rank, row_space_equal, rref
from .series import (
    LaurentSeries,
    TruncatedSeries,
    matrix_S,
    matrix_T,
    matrix_rho,
    residue,
    ts_compose,
    ts_inv,
    ts_mul,
    ts_reversion,
)
from .taylor import TaylorElement, act_on_code, orbit_sizes, tg_compose, tg_inverse

__version__ = "0.1.0"

__all__ = [
    "CodeSpec", "CurveModel", "CurvePoint", "DiffGoppaError", "DistanceReport",
    "Divisor", "Field", "FqElement", "FqMatrix", "GoppaCode", "LaurentSeries",
    "LocalData", "SearchConfig", "TaylorElement", "TruncatedSeries",
    "achieve_block_distance", "act_on_code", "build_code", "curve_make",
    "dual_code_residue", "field_make", "h_dual_linear", "h_pairing",
    "kernel_basis", "matrix_S", "matrix_T", "matrix_rho", "min_distance",
    "nmds_g4", "orbit_sizes", "rank", "rational_points", "realize_linear_code",
    "residue", "roth_lempel", "row_space_equal", "rref", "search_parameters",
    "section_basis", "sparsify_local", "strong_obstruction", "tg_compose",
    "tg_inverse", "ts_compose", "ts_inv", "ts_mul", "ts_reversion",
    "verify_duality", "weight",
]
