"""Small dense numerical kernels: linear solve, principal eigenvector,
median, Pearson correlation. Everything here works on plain numpy arrays.
"""
from __future__ import annotations

import numpy as np

from .model import NumericError

PIVOT_REL_TOL = 1e-12
POWER_TOL = 1e-12
POWER_MAX_ITER = 100_000


def solve_linear(a, b) -> np.ndarray:
    """Solve A x = b by Gaussian elimination with partial pivoting.

    Raises NumericError when a pivot falls below
    PIVOT_REL_TOL * max|A| (singular to working precision).
    """
    A = np.array(a, dtype=float)
    rhs = np.array(b, dtype=float)
    n = rhs.size
    if A.shape != (n, n):
        raise NumericError(f"need square system, got A{A.shape} and b({n},)")
    scale = np.abs(A).max()
    if scale == 0:
        raise NumericError("singular system: zero matrix")
    tol = PIVOT_REL_TOL * scale

    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[p, k]) < tol:
            raise NumericError(f"singular to working precision at column {k}")
        if p != k:
            A[[k, p]] = A[[p, k]]
            rhs[[k, p]] = rhs[[p, k]]
        factors = A[k + 1:, k] / A[k, k]
        A[k + 1:, k:] -= np.outer(factors, A[k, k:])
        rhs[k + 1:] -= factors * rhs[k]

    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (rhs[k] - A[k, k + 1:] @ x[k + 1:]) / A[k, k]
    return x


def principal_eigenvector(a) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a positive matrix by power iteration.

    Returns the Perron vector scaled to sum 1 and the Rayleigh estimate
    of lambda_max. Converged when successive normalized iterates agree
    to POWER_TOL in the infinity norm.
    """
    A = np.asarray(a, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise NumericError("matrix must be square")
    if not (A > 0).all():
        raise NumericError("all entries must be positive")

    x = np.full(n, 1.0 / n)
    for _ in range(POWER_MAX_ITER):
        y = A @ x
        y /= y.sum()
        done = np.abs(y - x).max() < POWER_TOL
        x = y
        if done:
            lam = float((A @ x) @ x / (x @ x))
            return x, lam
    raise NumericError(f"power iteration did not converge in {POWER_MAX_ITER} steps")


def median(values) -> float:
    """Middle order statistic; mean of the two middle ones for even length."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise NumericError("median of empty input")
    return float(np.median(v))


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length vectors."""
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.size != yv.size or xv.size < 2:
        raise NumericError("pearson needs two equal-length vectors of size >= 2")
    xd = xv - xv.mean()
    yd = yv - yv.mean()
    sx = float(xd @ xd)
    sy = float(yd @ yd)
    if sx == 0 or sy == 0:
        raise NumericError("pearson undefined for zero-variance input")
    r = float(xd @ yd) / np.sqrt(sx * sy)
    return max(-1.0, min(1.0, r))
