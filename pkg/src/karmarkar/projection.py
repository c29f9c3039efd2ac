"""Orthogonal projection onto, and rejection from, the row space of a matrix.

For a ``k x n`` matrix ``B`` of full row rank the projection of ``v`` onto
the row space is ``B^T (B B^T)^{-1} B v`` and the rejection is what is left
over. The ``n x n`` projection matrix is never formed; instead the ``k x k``
Gram matrix is Cholesky-factored once per basis and each application costs
two triangular solves.

Rows are scaled to unit length before factoring. This leaves the row space
(and so every projection) unchanged, and makes the relative pivot test for
rank independent of how the individual constraints happen to be scaled.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import DimensionMismatch, RankDeficient

PIVOT_RTOL = 1e-10
REFINE_RTOL = 1e-12


def _cholesky(G):
    """Lower Cholesky factor of ``G`` plus the sequence of pivots.

    The pivot of column j is ``G[j, j] - sum_k L[j, k]**2`` (i.e. ``L[j, j]**2``).
    Factorization continues past bad pivots so the caller sees all of them;
    columns with a nonpositive pivot get a unit diagonal and a zero column.
    """
    k = G.shape[0]
    L = np.zeros_like(G)
    pivots = np.empty(k)
    ok = np.ones(k, dtype=bool)
    for j in range(k):
        d = G[j, j] - L[j, :j] @ L[j, :j]
        pivots[j] = d
        if d <= 0.0:
            ok[j] = False
            L[j, j] = 1.0
            continue
        L[j, j] = np.sqrt(d)
        if j + 1 < k:
            L[j + 1:, j] = (G[j + 1:, j] - L[j + 1:, :j] @ L[j, :j]) / L[j, j]
    return L, pivots, ok


def _bad_pivots(pivots, ok):
    scale = max(pivots.max(initial=0.0), 0.0)
    return np.flatnonzero(~ok | (pivots <= PIVOT_RTOL * scale))


@dataclass(frozen=True, eq=False)
class ProjectionBasis:
    """Constraint rows ``B`` with a factored Gram system.

    ``gram_factor`` is the lower Cholesky factor ``L`` of ``S B B^T S`` where
    ``S = diag(1 / row_norms)``.
    """

    B: np.ndarray
    gram_factor: np.ndarray
    row_norms: np.ndarray
    unit_rows: np.ndarray

    @property
    def k(self):
        return self.B.shape[0]

    @property
    def n(self):
        return self.B.shape[1]

    def gram(self):
        """``B B^T`` rebuilt from the factor."""
        L = self.gram_factor
        return self.row_norms[:, None] * (L @ L.T) * self.row_norms[None, :]

    def _solve_unit(self, w):
        L = self.gram_factor
        return solve_triangular(L.T, solve_triangular(L, w, lower=True), lower=False)

    def solve_gram(self, w):
        """Solve ``B B^T y = w``, refining once if the residual exceeds ``1e-12 |w|``."""
        w = np.asarray(w, dtype=float)
        U, s = self.unit_rows, self.row_norms
        u = w / s
        y = self._solve_unit(u)
        resid = u - U @ (U.T @ y)
        if np.linalg.norm(resid) > REFINE_RTOL * np.linalg.norm(u):
            y = y + self._solve_unit(resid)
        return y / s

    def coefficients(self, v):
        """Row-space coefficients ``y`` with ``project(v) = B^T y``."""
        v = _as_vector(v, self.n)
        return self.solve_gram(self.B @ v)


def _as_vector(v, n):
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.shape[0] != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {v.shape}")
    return v


def build_basis(B):
    """Factor the Gram matrix of ``B`` for repeated projections.

    Raises
    ------
    DimensionMismatch
        If ``B`` is not 2-d or has more rows than columns.
    RankDeficient
        If a Cholesky pivot falls below ``1e-10`` times the largest pivot.
        The exception lists the offending row indices.
    """
    B = np.array(B, dtype=float)
    if B.ndim != 2:
        raise DimensionMismatch(f"constraint matrix must be 2-d, got shape {B.shape}")
    k, n = B.shape
    if k == 0:
        raise DimensionMismatch("constraint matrix has no rows")
    if k > n:
        raise DimensionMismatch(f"constraint matrix has more rows ({k}) than columns ({n})")
    if not np.all(np.isfinite(B)):
        raise DimensionMismatch("constraint matrix has non-finite entries")
    norms = np.linalg.norm(B, axis=1)
    if np.any(norms == 0):
        zero = np.flatnonzero(norms == 0).tolist()
        raise RankDeficient(f"zero row(s) {zero}", dependent_rows=zero)
    U = B / norms[:, None]
    L, pivots, ok = _cholesky(U @ U.T)
    if _bad_pivots(pivots, ok).size:
        dep = dependent_rows(B)
        raise RankDeficient(f"rows are linearly dependent (dependent row(s) {dep})", dependent_rows=dep)
    for arr in (B, L, norms, U):
        arr.setflags(write=False)
    return ProjectionBasis(B, L, norms, U)


def dependent_rows(B):
    """Indices of rows of ``B`` that depend on the rows before them.

    Greedy scan in row order under the same pivot policy as :func:`build_basis`.
    """
    B = np.asarray(B, dtype=float)
    norms = np.linalg.norm(B, axis=1)
    kept, dependent = [], []
    for i in range(B.shape[0]):
        if norms[i] == 0:
            dependent.append(i)
            continue
        trial = B[kept + [i]] / norms[kept + [i], None]
        L, pivots, ok = _cholesky(trial @ trial.T)
        if _bad_pivots(pivots, ok).size:
            dependent.append(i)
        else:
            kept.append(i)
    return dependent


def reject(basis, v):
    """Component of ``v`` orthogonal to every row of the basis.

    >>> b = build_basis([[1.0, 1.0, 1.0]])
    >>> np.round(reject(b, [1.0, 0.0, 0.0]), 6)
    array([ 0.666667, -0.333333, -0.333333])
    """
    v = _as_vector(v, basis.n)
    return v - basis.B.T @ basis.coefficients(v)


def project(basis, v):
    """Component of ``v`` in the row space of the basis."""
    v = _as_vector(v, basis.n)
    return v - reject(basis, v)
