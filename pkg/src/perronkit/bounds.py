"""Enclosures of the dominant eigenvalue from row/column sums.

The plain sum bounds (min and max of the row or column totals) bracket the
dominant eigenvalue of any nonnegative matrix.  One similarity step with the
diagonal of those totals sharpens the bracket; repeating that step is exactly
what the solver iterates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotApplicableError, ZeroSumError
from .matcore import NonnegMatrix, Side, _raw_sums, diag_similarity

__all__ = [
    "BoundsReport",
    "frobenius_bounds",
    "minc_bounds",
    "bounds_report",
    "perron_2x2",
]


@dataclass(frozen=True)
class BoundsReport:
    """Plain and sharpened sum intervals for both sides; each is (lo, hi)."""

    frobenius_row: tuple[float, float]
    frobenius_col: tuple[float, float]
    minc_row: tuple[float, float]
    minc_col: tuple[float, float]


def frobenius_bounds(A: NonnegMatrix, side: Side) -> tuple[float, float]:
    """(min, max) of the chosen sums; brackets the dominant eigenvalue."""
    s = _raw_sums(A, side)
    return float(s.min()), float(s.max())


def minc_bounds(A: NonnegMatrix, side: Side) -> tuple[float, float]:
    """Sharpened interval after one similarity step with the chosen sums.

    Never looser than :func:`frobenius_bounds` on the same side.  The column
    interval equals the row interval of the transpose, which is the
    orientation that actually sharpens column sums.
    """
    if side is Side.COLUMN:
        lo, hi = minc_bounds(A.transpose(), Side.ROW)
        return lo, hi
    r = _raw_sums(A, Side.ROW)
    zero = np.flatnonzero(r == 0)
    if zero.size:
        raise ZeroSumError(int(zero[0]), side="row")
    return frobenius_bounds(diag_similarity(A, r), Side.ROW)


def bounds_report(A: NonnegMatrix) -> BoundsReport:
    """All four intervals at once."""
    return BoundsReport(
        frobenius_row=frobenius_bounds(A, Side.ROW),
        frobenius_col=frobenius_bounds(A, Side.COLUMN),
        minc_row=minc_bounds(A, Side.ROW),
        minc_col=minc_bounds(A, Side.COLUMN),
    )


def perron_2x2(A: NonnegMatrix) -> tuple[float, float]:
    """Closed-form dominant eigenvalue of a 2x2 matrix with positive off-diagonals.

    Returns (root, x) where root = (a11 + a22 + sqrt((a11 - a22)^2
    + 4 a12 a21)) / 2 and x = (root - a11) / a12, so that scaling the
    off-diagonals by x and 1/x equalizes both row sums at the root.  Both
    terms of the quadratic formula are nonnegative here, so there is no
    cancellation.
    """
    if A.n != 2:
        raise NotApplicableError(f"matrix has order {A.n}, closed form needs 2")
    (a11, a12), (a21, a22) = A.to_dense()
    if a12 == 0 or a21 == 0:
        raise NotApplicableError("off-diagonal entry is zero")
    root = (a11 + a22 + math.sqrt((a11 - a22) ** 2 + 4.0 * a12 * a21)) / 2.0
    x = (root - a11) / a12
    return float(root), float(x)
