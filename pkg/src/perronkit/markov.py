"""Stationary distributions of row-stochastic matrices.

The stationary vector u (u^T P = u^T) is the dominant eigenvector of P^T,
so it drops out of the balancing solver run on the transpose; the dominant
eigenvalue must come back as 1, which doubles as an input sanity check.
Chains that are not primitive can be made so by blending with the uniform
matrix (damping) before solving.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, NotStochasticError, RootNotOneError, ZeroSumError
from .matcore import NonnegMatrix, Side, _matvec, _raw_sums
from .solver import SolverConfig, Status, algorithm_b

__all__ = [
    "StochasticMatrix",
    "StationaryDistribution",
    "make_stochastic",
    "damp",
    "stationary",
]

_ROWSUM_TOL = 1e-12


@dataclass(frozen=True)
class StochasticMatrix:
    """Square nonnegative matrix whose rows each sum to 1 within 1e-12."""

    matrix: NonnegMatrix

    def __post_init__(self):
        r = _raw_sums(self.matrix, Side.ROW)
        off = np.flatnonzero(np.abs(r - 1.0) > _ROWSUM_TOL)
        if off.size:
            i = int(off[0])
            raise NotStochasticError(i, float(r[i]))

    @property
    def n(self) -> int:
        return self.matrix.n


@dataclass(frozen=True)
class StationaryDistribution:
    """Probability vector u with u^T P = u^T, plus solve diagnostics."""

    u: np.ndarray
    residual: float
    iterations: int
    status: Status


def make_stochastic(A: NonnegMatrix) -> StochasticMatrix:
    """Divide each row by its sum; preserves the storage layout."""
    r = _raw_sums(A, Side.ROW)
    zero = np.flatnonzero(r == 0)
    if zero.size:
        raise ZeroSumError(int(zero[0]), side="row")
    if A.storage == "dense":
        scaled = NonnegMatrix(A.n, dense=A.to_dense() / r[:, None])
    else:
        scaled = NonnegMatrix(
            A.n,
            indptr=A._indptr.copy(),
            indices=A._indices.copy(),
            data=A._data / r[A._row_indices()],
        )
    return StochasticMatrix(scaled)


def damp(P: StochasticMatrix, alpha: float) -> StochasticMatrix:
    """Blend with the uniform matrix: alpha*P + (1 - alpha)/n everywhere.

    Every entry of the result is at least (1 - alpha)/n > 0, so the damped
    chain is positive and therefore primitive, and rows still sum to 1.
    """
    if not (0 < alpha < 1):
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    n = P.n
    dense = alpha * P.matrix.to_dense() + (1.0 - alpha) / n
    return StochasticMatrix(NonnegMatrix(n, dense=dense))


def stationary(P: StochasticMatrix, cfg: SolverConfig | None = None) -> StationaryDistribution:
    """Stationary distribution of a primitive row-stochastic matrix.

    Runs the accumulating solver on P^T balancing row sums (the side is
    forced: automatic selection would pick the already-equal transpose
    columns and return the trivial all-ones direction).  The returned
    vector is normalized to unit sum; the residual is ||u^T P - u^T||_inf.
    Raises RootNotOneError when a converged run's eigenvalue strays from 1
    by more than 100x tolerance, which signals a mis-scaled input.
    """
    cfg = replace(cfg or SolverConfig(), side=Side.ROW)
    transposed = P.matrix.transpose()
    res = algorithm_b(transposed, cfg)
    if res.status is Status.CONVERGED and abs(res.root - 1.0) > 100.0 * cfg.tolerance:
        raise RootNotOneError(res.root)
    u = res.eigenvector
    residual = float(np.abs(_matvec(transposed, u) - u).max())
    return StationaryDistribution(u=u, residual=residual, iterations=res.iterations, status=res.status)
