"""Iterative balancing of row or column sums to the dominant eigenvalue.

Each step replaces the working matrix B by the similarity D_r^{-1} B D_r,
where D_r is the diagonal of B's current row sums.  For a primitive matrix
the minimum sum rises, the maximum sum falls, and both converge to the
dominant eigenvalue; the final matrix has (near-)equal sums and is
diagonally similar to the input.  Two variants are provided:

* :func:`algorithm_a` scales the working matrix in place and returns only
  the eigenvalue enclosure.
* :func:`algorithm_b` accumulates the scaling vector y and rebuilds the
  working matrix from the original each step; y converges to the dominant
  eigenvector (of the transpose when column sums were balanced).

On matrices whose dominant eigenvalue is not strictly dominant in modulus
(imprimitive matrices), the sums oscillate instead of converging; the solver
reports this as ``Status.STAGNATED``, which doubles as a cheap primitivity
screen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, InsufficientHistoryError, ZeroSumError
from .matcore import (
    GerschgorinDisc,
    NonnegMatrix,
    Side,
    SumVector,
    _checked_scale,
    _raw_sums,
    _snap_unit,
    gerschgorin,
    rank_one_hadamard,
)

__all__ = [
    "Stopping",
    "Status",
    "SolverConfig",
    "ConvergenceHistory",
    "PerronResult",
    "algorithm_a",
    "algorithm_b",
    "choose_side",
    "range_error",
    "delta_error",
    "detect_stagnation",
    "estimate_iterations",
    "recover_X",
    "convergence_discs",
]

# accumulated scaling components beyond this magnitude trigger a rescale
_Y_RESCALE_LIMIT = 1e150


class Stopping(str, Enum):
    RANGE = "range"
    DELTA = "delta"


class Status(str, Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    STAGNATED = "stagnated"


@dataclass(frozen=True)
class SolverConfig:
    """Stopping rules and side selection for one solve.

    ``side=None`` picks the side whose initial sum range is smaller.  The
    range rule stops when max sum - min sum <= tolerance.  The delta rule
    stops when neither the minimum nor the maximum sum moved by more than
    the tolerance in one step; a run that stops this way while the range is
    still above tolerance is reported as STAGNATED, not CONVERGED, since
    per-step progress alone cannot distinguish convergence from the
    period-two oscillation of imprimitive matrices.
    """

    tolerance: float = 1e-8
    max_iterations: int = 100_000
    stopping: Stopping = Stopping.RANGE
    side: Side | None = None
    stagnation_window: int = 20
    stagnation_factor: float = 0.999

    def __post_init__(self):
        if not (self.tolerance > 0):
            raise DomainError(f"tolerance must be > 0, got {self.tolerance}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not (0 < self.stagnation_factor < 1):
            raise DomainError(f"stagnation_factor must be in (0, 1), got {self.stagnation_factor}")
        if self.stagnation_window < 1:
            raise DomainError(f"stagnation_window must be >= 1, got {self.stagnation_window}")


@dataclass(frozen=True)
class ConvergenceHistory:
    """Minimum and maximum sums per iteration, entry 0 being the input's.

    ``sums`` holds the full per-iteration sum vectors, shape
    (iterations + 1, n), when the solve was asked to record them.
    """

    rmin: np.ndarray
    rmax: np.ndarray
    sums: np.ndarray | None = None

    def __len__(self):
        return len(self.rmin)


@dataclass(frozen=True)
class PerronResult:
    """Outcome of one balancing run.

    ``balanced`` is returned in the orientation of the input matrix (same
    diagonal and zero pattern); for column-side runs its column sums are the
    equalized ones, and :func:`convergence_discs` evaluates discs in the
    balanced orientation.  ``eigenvector`` (algorithm B only) is the
    dominant eigenvector of the input when row sums were balanced and of
    its transpose when column sums were balanced, normalized to unit sum.
    """

    root_lo: float
    root_hi: float
    root: float
    eigenvector: np.ndarray | None
    balanced: NonnegMatrix
    iterations: int
    side_used: Side
    status: Status
    history: ConvergenceHistory


class _Iterate:
    """Mutable working copy of the matrix being balanced."""

    def __init__(self, M: NonnegMatrix):
        self.n = M.n
        if M.storage == "dense":
            self._orig = M._dense
            self._cur = M._dense.copy()
            self._rows_flat = np.repeat(np.arange(self.n), self.n)
            self._diag_idx = np.arange(self.n)
            self._csr = None
        else:
            self._csr = (M._indptr, M._indices, M._row_indices())
            self._orig = M._data
            self._cur = M._data.copy()
            self._on_diag = M._row_indices() == M._indices

    def row_sums(self) -> np.ndarray:
        if self._csr is None:
            return np.bincount(self._rows_flat, weights=self._cur.ravel(), minlength=self.n)
        _, _, rowidx = self._csr
        return np.bincount(rowidx, weights=self._cur, minlength=self.n)

    def _scale_matrix(self, x: np.ndarray, y: np.ndarray):
        if self._csr is None:
            scale = np.multiply.outer(x, y)
            d = self._diag_idx
            scale[d, d] = _snap_unit(scale[d, d])
            return scale
        _, indices, rowidx = self._csr
        scale = x[rowidx] * y[indices]
        scale[self._on_diag] = _snap_unit(scale[self._on_diag])
        return scale

    def scale_by(self, x, y):
        """cur <- cur o (x y^T), with unit diagonal factors kept exact."""
        self._cur *= self._scale_matrix(x, y)

    def reset_scale(self, x, y):
        """cur <- original o (x y^T)."""
        self._cur = self._orig * self._scale_matrix(x, y)

    def to_matrix(self) -> NonnegMatrix:
        if self._csr is None:
            return NonnegMatrix(self.n, dense=self._cur)
        indptr, indices, _ = self._csr
        return NonnegMatrix(self.n, indptr=indptr.copy(), indices=indices.copy(), data=self._cur)


def choose_side(A: NonnegMatrix) -> Side:
    """Side whose initial sum range is smaller; ties go to rows."""
    row = _raw_sums(A, Side.ROW)
    col = _raw_sums(A, Side.COLUMN)
    row_range = row.max() - row.min()
    col_range = col.max() - col.min()
    return Side.ROW if row_range <= col_range else Side.COLUMN


def range_error(s) -> float:
    """Spread max - min of a sum vector; zero when the sums are equalized."""
    values = s.values if isinstance(s, SumVector) else np.asarray(s, dtype=np.float64)
    return float(values.max() - values.min())


def delta_error(h: ConvergenceHistory) -> tuple[float, float]:
    """Last one-step movement of the minimum and maximum sums."""
    if len(h.rmin) < 2:
        raise InsufficientHistoryError("need at least two recorded iterations")
    return float(h.rmin[-1] - h.rmin[-2]), float(h.rmax[-2] - h.rmax[-1])


def _stagnant(rmin, rmax, cfg: SolverConfig) -> bool:
    w = cfg.stagnation_window
    if len(rmin) < w + 1:
        return False
    now = rmax[-1] - rmin[-1]
    then = rmax[-1 - w] - rmin[-1 - w]
    if now <= cfg.tolerance or then <= 0:
        return False
    return now / then > cfg.stagnation_factor


def detect_stagnation(h: ConvergenceHistory, cfg: SolverConfig) -> bool:
    """True when the sum range made essentially no progress over the window.

    Histories shorter than the window report False, as does any history
    whose current range is already within tolerance.
    """
    return _stagnant(h.rmin, h.rmax, cfg)


def estimate_iterations(alpha: float, c: float) -> int:
    """Iterations needed to shrink the error by factor alpha at mean contraction c."""
    if not (0 < alpha < 1):
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if not (0 < c < 1):
        raise DomainError(f"c must be in (0, 1), got {c}")
    # slack absorbs rounding of the log quotient for exact-power inputs
    return math.ceil(math.log(alpha) / math.log(c) - 1e-9)


def recover_X(y) -> NonnegMatrix:
    """Rank-one scaling matrix with entries y_j / y_i and unit diagonal."""
    y = np.asarray(y, dtype=np.float64)
    y = _checked_scale(y, len(y))
    ones = NonnegMatrix(len(y), dense=np.ones((len(y), len(y))))
    return rank_one_hadamard(ones, np.reciprocal(y), y)


def convergence_discs(result: PerronResult) -> list[GerschgorinDisc]:
    """Discs of the balanced matrix in the orientation that was balanced.

    At convergence every disc's rightmost point sits at the computed root.
    """
    B = result.balanced if result.side_used is Side.ROW else result.balanced.transpose()
    return gerschgorin(B)


def _run(A: NonnegMatrix, cfg: SolverConfig, want_vector: bool, record_sums: bool) -> PerronResult:
    side = cfg.side if cfg.side is not None else choose_side(A)
    M = A if side is Side.ROW else A.transpose()
    work = _Iterate(M)

    r = work.row_sums()
    zero = np.flatnonzero(r == 0)
    if zero.size:
        raise ZeroSumError(int(zero[0]), side=side.value)

    rmin = [float(r.min())]
    rmax = [float(r.max())]
    trace = [r.copy()] if record_sums else None
    y = np.ones(A.n) if want_vector else None

    t = 0
    while True:
        spread = rmax[-1] - rmin[-1]
        if cfg.stopping is Stopping.RANGE:
            if spread <= cfg.tolerance:
                status = Status.CONVERGED
                break
        elif len(rmin) >= 2:
            er_min = rmin[-1] - rmin[-2]
            er_max = rmax[-2] - rmax[-1]
            if er_min <= cfg.tolerance and er_max <= cfg.tolerance:
                status = Status.CONVERGED if spread <= cfg.tolerance else Status.STAGNATED
                break
        if _stagnant(rmin, rmax, cfg):
            status = Status.STAGNATED
            break
        if t >= cfg.max_iterations:
            status = Status.MAX_ITERATIONS
            break

        if want_vector:
            y *= r / r[0]
            if y.max() > _Y_RESCALE_LIMIT or y.min() < 1.0 / _Y_RESCALE_LIMIT:
                y /= np.exp(np.log(y).mean())
            work.reset_scale(np.reciprocal(y), y)
        else:
            work.scale_by(np.reciprocal(r), r)
        r = work.row_sums()
        t += 1
        rmin.append(float(r.min()))
        rmax.append(float(r.max()))
        if record_sums:
            trace.append(r.copy())

    balanced = work.to_matrix()
    if side is Side.COLUMN:
        balanced = balanced.transpose()
    history = ConvergenceHistory(
        rmin=np.array(rmin),
        rmax=np.array(rmax),
        sums=np.array(trace) if record_sums else None,
    )
    lo, hi = rmin[-1], rmax[-1]
    return PerronResult(
        root_lo=lo,
        root_hi=hi,
        root=0.5 * (lo + hi),
        eigenvector=(y / y.sum()) if want_vector else None,
        balanced=balanced,
        iterations=t,
        side_used=side,
        status=status,
        history=history,
    )


def algorithm_a(A: NonnegMatrix, cfg: SolverConfig | None = None, *, record_sums: bool = False) -> PerronResult:
    """Balance the sums by in-place rescaling; returns the root enclosure only.

    Each iteration multiplies entry (i, j) of the working matrix by
    r_j / r_i, where r is the current sum vector on the chosen side.
    """
    return _run(A, cfg or SolverConfig(), want_vector=False, record_sums=record_sums)


def algorithm_b(A: NonnegMatrix, cfg: SolverConfig | None = None, *, record_sums: bool = False) -> PerronResult:
    """Balance the sums while accumulating the scaling vector y.

    The working matrix is rebuilt from the original as A o ((1/y) yᵀ) each
    iteration, which keeps the zero pattern and diagonal exact; y is
    renormalized so its first component stays 1 (and rescaled by its
    geometric mean if any component passes 1e±150).  On convergence y spans
    the dominant eigenvector: M y = root * y within 10x tolerance, where M
    is the matrix in the balanced orientation.
    """
    return _run(A, cfg or SolverConfig(), want_vector=True, record_sums=record_sums)
