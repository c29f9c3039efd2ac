"""Brute-force vertex enumeration for small canonical-form problems.

Used as ground truth in tests: every vertex of ``{Ax = 0, e'x = n, x >= 0}``
is a basic feasible solution, so trying all ``C(n, m+1)`` column subsets
finds them all. The polytope sits inside the simplex and is bounded, so the
LP optimum is attained at one of them.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError, EmptyFeasibleSet, RankDeficient, TooLarge
from .problem import KarmarkarProblem
from .projection import build_basis

MAX_N = 16
EQ_TOL = 1e-9
NONNEG_TOL = 1e-12
DEDUP_TOL = 1e-9
MAX_REDRAWS = 100


@dataclass(frozen=True, eq=False)
class VertexSet:
    vertices: tuple
    optimum_value: float
    optimum_vertex: np.ndarray

    def __len__(self):
        return len(self.vertices)

    def as_array(self):
        return np.array(self.vertices)


def _solve_basis(M, rhs):
    # square system through the shared Gram factorization: for nonsingular M
    # the minimum-norm solution M^T (M M^T)^{-1} rhs is the unique solution
    try:
        basis = build_basis(M)
    except RankDeficient:
        return None
    return M.T @ basis.solve_gram(rhs)


def _is_duplicate(v, seen):
    return any(np.max(np.abs(v - w)) <= DEDUP_TOL for w in seen)


def basic_solutions(problem):
    """Yield ``(columns, x)`` for every nonsingular basis, feasible or not."""
    n, m = problem.n, problem.m
    M = problem.stacked()
    rhs = np.zeros(m + 1)
    rhs[-1] = n
    for cols in itertools.combinations(range(n), m + 1):
        cols = list(cols)
        xs = _solve_basis(M[:, cols], rhs)
        if xs is None:
            continue
        x = np.zeros(n)
        x[cols] = xs
        yield cols, x


def enumerate_vertices(problem):
    """All vertices of the feasible polytope, sorted lexicographically.

    The optimum fields refer to ``problem.c``.
    """
    n, m = problem.n, problem.m
    if n > MAX_N:
        raise TooLarge(f"vertex enumeration is limited to n <= {MAX_N}, got n = {n}")
    if m + 1 > n:
        raise DimensionMismatch(f"m + 1 = {m + 1} exceeds n = {n}")
    M = problem.stacked()
    rhs = np.zeros(m + 1)
    rhs[-1] = n

    found = []
    for _, x in basic_solutions(problem):
        if np.any(x < -NONNEG_TOL):
            continue
        if np.max(np.abs(M @ x - rhs)) > EQ_TOL * max(1.0, n):
            continue
        x = np.where(x < 0, 0.0, x)
        if not _is_duplicate(x, found):
            found.append(x)
    if not found:
        raise EmptyFeasibleSet("internal error: no basis gave a feasible point although e is feasible")

    found.sort(key=tuple)
    values = [float(problem.c @ v) for v in found]
    best = int(np.argmin(values))
    return VertexSet(tuple(found), values[best], found[best])


def certify_zero_optimum(problem, tol=1e-9):
    """True iff the exact optimum of ``problem`` is zero within ``tol``."""
    return abs(enumerate_vertices(problem).optimum_value) <= tol


def make_zero_optimum_instance(seed, n, m, c0=None):
    """Random problem with ``Ae = 0``, full rank, zero optimum and ``c'e > 0``.

    Rows of ``A`` are Gaussian with their mean subtracted. The cost is
    ``c0 - (v*/n) e`` where ``v*`` is the optimum of ``c0``; on the simplex
    this shifts every objective value by ``-v*`` and keeps the argmin set.
    Passing ``c0`` fixes the cost draw.
    """
    if not (1 <= m + 1 < n <= MAX_N):
        raise DomainError(f"need 1 <= m + 1 < n <= {MAX_N}, got n = {n}, m = {m}")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_REDRAWS):
        A = rng.standard_normal((m, n))
        A -= A.mean(axis=1, keepdims=True)
        cost = rng.standard_normal(n) if c0 is None else np.asarray(c0, dtype=float)
        draft = KarmarkarProblem(A, cost)
        try:
            build_basis(draft.stacked())
        except RankDeficient:
            continue
        v_star = enumerate_vertices(draft).optimum_value
        c = cost - (v_star / n) * np.ones(n)
        if c.sum() > 1e-9:
            return KarmarkarProblem(A, c, f"zero-optimum instance seed={seed} n={n} m={m}")
    raise RankDeficient(f"no usable instance after {MAX_REDRAWS} draws (seed={seed}, n={n}, m={m})")
