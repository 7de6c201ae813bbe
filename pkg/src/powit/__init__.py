"""Dominant eigenpairs of dense self-adjoint matrices.

Plain power iteration plus a squared variant that converges in
logarithmically many steps, rank-one deflation for the leading k pairs,
seeded Gaussian ensembles, a from-scratch Jacobi reference solver, and a
benchmark CLI that emits CSV records, JSON summaries, and figures.
"""

from .bench import (
    ALGORITHMS,
    CSV_FIELDS,
    DESK_SCALE_SIZES,
    FULL_SCALE_SIZES,
    ORACLE_CUTOFF,
    REFERENCE_SPEEDUP,
    BenchRecord,
    HistogramData,
    emit_histogram,
    emit_records,
    histogram,
    parse_records,
    run_suite,
    summarize,
)
from .deflation import Spectrum, deflate, top_k_eigenpairs
from .ensembles import MODES, EnsembleSpec, derive_seed, random_matrix, random_unit_vector
from .errors import (
    ConvergenceError,
    DegenerateInputError,
    DimensionError,
    EmptyDataError,
    NumericOverflowError,
    PowitError,
    SymmetryError,
)
from .linalg import (
    adjoint,
    as_matrix,
    as_vector,
    matmul,
    matvec,
    max_norm,
    max_norm_vec,
    normalize_matrix,
    normalize_vec,
    outer,
    phase_fix,
)
from .oracle import FullSpectrum, char_poly_eigs_2x2, jacobi_eigen
from .solvers import (
    POWER_MAX_ITER,
    RESIDUAL_SLACK,
    SOLVERS,
    SQUARED_MAX_ITER,
    EigenEstimate,
    SolverConfig,
    matrix_power_squaring,
    power_iteration,
    power_iteration_squared,
    rayleigh_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "CSV_FIELDS",
    "DESK_SCALE_SIZES",
    "FULL_SCALE_SIZES",
    "MODES",
    "ORACLE_CUTOFF",
    "POWER_MAX_ITER",
    "REFERENCE_SPEEDUP",
    "RESIDUAL_SLACK",
    "SOLVERS",
    "SQUARED_MAX_ITER",
    "BenchRecord",
    "ConvergenceError",
    "DegenerateInputError",
    "DimensionError",
    "EigenEstimate",
    "EmptyDataError",
    "EnsembleSpec",
    "FullSpectrum",
    "HistogramData",
    "NumericOverflowError",
    "PowitError",
    "SolverConfig",
    "Spectrum",
    "SymmetryError",
    "adjoint",
    "as_matrix",
    "as_vector",
    "char_poly_eigs_2x2",
    "deflate",
    "derive_seed",
    "emit_histogram",
    "emit_records",
    "histogram",
    "jacobi_eigen",
    "matmul",
    "matrix_power_squaring",
    "matvec",
    "max_norm",
    "max_norm_vec",
    "normalize_matrix",
    "normalize_vec",
    "outer",
    "parse_records",
    "phase_fix",
    "power_iteration",
    "power_iteration_squared",
    "random_matrix",
    "random_unit_vector",
    "rayleigh_quotient",
    "run_suite",
    "summarize",
    "top_k_eigenpairs",
]
