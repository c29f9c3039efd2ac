"""The projective transform T_a and the diagonally scaled subproblem."""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotFeasible, NotInterior, NotOnSimplex, ZeroDenominator
from .problem import TOL_FEAS, KarmarkarProblem

TOL_DENOMINATOR = 1e-300


@dataclass(frozen=True, eq=False)
class TransformCoefficients:
    """Strictly positive weights ``a`` defining ``T_a``."""

    a: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        if a.ndim != 1:
            raise DimensionMismatch(f"coefficients must be a vector, got shape {a.shape}")
        if not np.all(np.isfinite(a)) or np.any(a <= 0):
            raise NotInterior("transform coefficients must be finite and strictly positive")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @classmethod
    def centering(cls, z):
        """Coefficients ``1/z``, which send ``z`` to the centre ``e``."""
        z = np.asarray(z, dtype=float)
        if np.any(z <= 0):
            raise NotInterior("centering point must be strictly positive")
        return cls(1.0 / z)

    def inverse(self):
        return TransformCoefficients(1.0 / self.a)

    def __len__(self):
        return self.a.shape[0]


def _coefficients(a):
    return a if isinstance(a, TransformCoefficients) else TransformCoefficients(a)


def apply(a, x, n=None):
    """``y_i = n a_i x_i / sum_j a_j x_j``.

    The result lies on ``{e'y = n}`` and does not depend on the scale of ``x``.
    ``n`` defaults to ``len(x)``.
    """
    a = _coefficients(a)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != len(a):
        raise DimensionMismatch(f"x has shape {x.shape}, coefficients have length {len(a)}")
    if n is None:
        n = x.shape[0]
    elif n != x.shape[0]:
        raise DimensionMismatch(f"x has {x.shape[0]} entries, expected n = {n}")
    if np.any(x < 0):
        raise NotOnSimplex("transform argument must be nonnegative")
    w = a.a * x
    denom = w.sum()
    if not denom > TOL_DENOMINATOR:
        raise ZeroDenominator(f"sum a_j x_j = {denom!r} is not positive")
    return n * (w / denom)


def invert(a, y, n=None, tol=TOL_FEAS):
    """Inverse of :func:`apply` on the simplex: ``T_b`` with ``b = 1/a``."""
    a = _coefficients(a)
    y = np.asarray(y, dtype=float)
    if n is None:
        n = y.shape[0]
    if y.ndim == 1 and abs(y.sum() - n) > tol * max(n, 1):
        raise NotOnSimplex(f"e'y = {y.sum():.17g}, expected {n}")
    return apply(a.inverse(), y, n)


def scaled_subproblem(problem, z, tol_feas=TOL_FEAS, tol_interior=None):
    """Rewrite ``problem`` in coordinates centred at the interior point ``z``.

    Returns the problem with matrix ``A Z`` and cost ``Z c``, ``Z = diag(z)``;
    ``e`` is feasible for it because ``A Z e = A z = 0``.
    """
    z = np.asarray(z, dtype=float)
    n = problem.n
    if z.shape != (n,):
        raise DimensionMismatch(f"z has shape {z.shape}, expected ({n},)")
    if tol_interior is None:
        tol_interior = 1e-12 * n
    if np.any(z <= tol_interior):
        raise NotInterior(f"min z_i = {z.min():.3g} is not above {tol_interior:.3g}")
    if abs(z.sum() - n) > tol_feas * n:
        raise NotOnSimplex(f"e'z = {z.sum():.17g}, expected {n}")
    resid = float(np.max(np.abs(problem.A @ z), initial=0.0))
    if resid > tol_feas:
        raise NotFeasible(f"max |Az| = {resid:.3g} exceeds {tol_feas:.3g}")
    return KarmarkarProblem(problem.A * z, problem.c * z, problem.comment)
