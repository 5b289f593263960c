"""Dominant eigenvalue and eigenvector of primitive nonnegative matrices.

The solver repeatedly rescales a matrix by the diagonal similarity built
from its own row (or column) sums; for primitive matrices the sums squeeze
onto the dominant eigenvalue and the accumulated scaling recovers the
dominant eigenvector.  Companion modules supply sum-based eigenvalue
enclosures, a power-iteration baseline, exact primitivity tests, and
stationary distributions of row-stochastic matrices.
"""

__version__ = "0.1.0"

from .baseline import BenchRecord, PowerResult, power_method, run_bench, tridiagonal_suite
from .bounds import BoundsReport, bounds_report, frobenius_bounds, minc_bounds, perron_2x2
from .errors import (
    BreakdownError,
    DomainError,
    InsufficientHistoryError,
    MatrixParseError,
    NegativeEntryError,
    NonFiniteEntryError,
    NonPositiveScaleError,
    NotApplicableError,
    NotSquareError,
    NotStochasticError,
    PerronError,
    RootNotOneError,
    ZeroSumError,
)
from .io import parse_matrix, read_csv, read_matrix_market, write_matrix_market
from .markov import StationaryDistribution, StochasticMatrix, damp, make_stochastic, stationary
from .matcore import (
    GerschgorinDisc,
    NonnegMatrix,
    Side,
    SumVector,
    diag_similarity,
    from_coordinates,
    from_dense,
    gerschgorin,
    random_primitive,
    rank_one_hadamard,
    sums,
    tridiagonal,
    tridiagonal_eigs,
)
from .primitivity import (
    BoolPattern,
    CrossCheckReport,
    is_irreducible,
    is_primitive,
    stagnation_cross_check,
    wielandt_bound,
)
from .solver import (
    ConvergenceHistory,
    PerronResult,
    SolverConfig,
    Status,
    Stopping,
    algorithm_a,
    algorithm_b,
    choose_side,
    convergence_discs,
    delta_error,
    detect_stagnation,
    estimate_iterations,
    range_error,
    recover_X,
)
