"""The log potential and the auxiliary function psi(t) = t - log(1 + t).

All logarithms are natural.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError, NonpositiveObjective, PreconditionViolated

PSI_ONE = 1.0 - math.log(2.0)


@dataclass(frozen=True)
class PotentialValue:
    phi: float
    objective: float
    log_barrier_sum: float


def phi(c, x):
    """Evaluate ``n log(c'x) - sum_i log x_i`` at a positive point.

    Raises
    ------
    NonpositiveObjective
        When ``c'x <= 0``. For a zero-optimum problem this means the
        optimum has been reached, so callers usually treat it as success.
    """
    c = np.asarray(c, dtype=float)
    x = np.asarray(x, dtype=float)
    if c.shape != x.shape or x.ndim != 1:
        raise DimensionMismatch(f"c has shape {c.shape} but x has shape {x.shape}")
    if np.any(x <= 0):
        raise DomainError("potential needs a strictly positive point")
    objective = float(c @ x)
    if not objective > 0:
        raise NonpositiveObjective(f"c'x = {objective!r} is not positive", objective)
    barrier = float(np.sum(np.log(x)))
    return PotentialValue(x.shape[0] * math.log(objective) - barrier, objective, barrier)


def psi(t):
    if not t > -1:
        raise DomainError(f"psi is defined for t > -1, got {t!r}")
    return t - math.log1p(t)


def objective_upper_bound_from_phi(phi_value, n):
    """``exp(phi / n)``, which bounds ``c'x`` from above on the simplex.

    ``sum log x_i <= 0`` whenever ``e'x = n`` (AM-GM), hence
    ``phi >= n log(c'x)``. This is the direction the iteration bound rests on.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    return math.exp(phi_value / n)


def objective_lower_bound_from_phi(phi_value, n):
    """``exp(phi / n)`` under the name used by the published interface.

    Despite the name the value is an upper bound on ``c'x`` (equality only
    at the centre); see :func:`objective_upper_bound_from_phi`.
    """
    return objective_upper_bound_from_phi(phi_value, n)


def psi_majorization_check(a, bs, t, rtol=1e-10):
    """Whether ``psi(-|a| t) >= sum_i psi(b_i t)`` given ``a**2 == sum b_i**2``.

    ``t - log1p(t)`` carries an absolute rounding error of order
    ``eps * |t|``, so the comparison allows that much slack per term; without
    it the limit ``t -> 0`` (both sides tend to zero) would be decided by noise.
    """
    bs = np.asarray(bs, dtype=float).ravel()
    a2, b2 = a * a, float(bs @ bs)
    if abs(a2 - b2) > rtol * max(a2, b2):
        raise PreconditionViolated(f"a^2 = {a2!r} but sum b_i^2 = {b2!r}")
    if not t > 0:
        raise PreconditionViolated(f"t must be positive, got {t!r}")
    args = np.concatenate([[-abs(a) * t], bs * t])
    if np.any(args <= -1):
        raise PreconditionViolated("every scaled argument must exceed -1")
    lhs = psi(-abs(a) * t)
    rhs = math.fsum(psi(float(v)) for v in bs * t)
    slack = 8 * np.finfo(float).eps * float(np.sum(np.abs(args)))
    return lhs >= rhs - slack
