"""Projective-scaling iteration for canonical-form LPs.

Each step rescales the current iterate ``x`` to the centre of the simplex
(``D = diag(x)``), moves a distance ``alpha * r`` from the centre against the
projected scaled cost, and maps the result back::

    c_P = reject([A D; e'], D c)
    z   = e - alpha r c_P / |c_P|
    x   = n D z / (e' D z)

The analysis guarantees that ``n log(c'x) - sum log x_i`` drops by at least
``1 - ln 2`` per step when the optimal value is zero, which yields the
iteration bound in :func:`iteration_bound`.
"""

import enum
import io
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    ConstantObjective,
    DimensionMismatch,
    DomainError,
    NonpositiveObjective,
    NotInterior,
    NumericalBreakdown,
    RankDeficient,
)
from .geometry import SimplexGeometry
from .potential import PSI_ONE, phi
from .problem import TOL_FEAS
from .projection import build_basis, reject

# per-step potential drops below the guarantee by more than this are flagged
DECREASE_FLAG_SLACK = 1e-3

TRACE_HEADER = "iter,objective,phi,delta_phi,projected_gradient_norm,min_coordinate"


class Status(str, enum.Enum):
    CONVERGED = "Converged"
    TRIVIAL_CENTRE_OPTIMAL = "TrivialCentreOptimal"
    CONSTANT_OBJECTIVE = "ConstantObjectiveOnFeasibleSet"
    ITERATION_LIMIT = "IterationLimit"
    NUMERICAL_BREAKDOWN = "NumericalBreakdown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SolverConfig:
    epsilon: float = 1e-6
    max_iterations: Optional[int] = None  # None: 4 x theoretical bound
    alpha_override: Optional[float] = None
    tol_feas: float = TOL_FEAS
    tol_interior: float = 0.0  # iterates must satisfy x_i > tol_interior
    tol_gradient: float = 1e-12
    trace_enabled: bool = True

    def __post_init__(self):
        if not self.epsilon > 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon!r}")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise DomainError(f"max_iterations must be >= 0, got {self.max_iterations!r}")
        # r > 1 for every n, so alpha * r < 1 forces alpha < 1; the exact
        # check against r happens once n is known
        if self.alpha_override is not None and not 0 < self.alpha_override < 1:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha_override!r}")

    def geometry(self, n):
        return SimplexGeometry.for_dimension(n, self.alpha_override)


@dataclass(frozen=True, eq=False)
class StepInfo:
    """Quantities from one step, in the scaled coordinates centred at ``e``."""

    z: np.ndarray
    direction: np.ndarray
    projected_gradient_norm: float
    scaled_objective_before: float  # (Dc)'e = c'x
    scaled_objective_after: float  # (Dc)'z


@dataclass(frozen=True, eq=False)
class IterationRecord:
    k: int
    x: np.ndarray
    objective: float
    phi: float
    delta_phi: float
    projected_gradient_norm: float
    min_coordinate: float
    step: Optional[StepInfo] = None
    flagged: bool = False  # potential drop below the guarantee


@dataclass(frozen=True, eq=False)
class SolveResult:
    status: Status
    final_x: np.ndarray
    iterations: int
    theoretical_bound: int
    trace: tuple = field(default_factory=tuple)
    objective: float = math.nan
    message: str = ""

    @property
    def within_bound(self):
        return self.iterations <= self.theoretical_bound


def iteration_bound(n, c_dot_e, epsilon):
    """``ceil(n / psi(1) * log(c'e / epsilon))``, floored at zero.

    >>> iteration_bound(3, 1.0, 1e-6)
    136
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    if not c_dot_e > 0:
        raise DomainError(f"c'e must be positive, got {c_dot_e!r}")
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    if epsilon >= c_dot_e:
        return 0
    return max(0, math.ceil(n / PSI_ONE * math.log(c_dot_e / epsilon)))


def iterate_once(problem, x, geometry, tol_gradient=1e-12, tol_interior=0.0):
    """One projective-scaling step from the interior feasible point ``x``.

    Returns ``(x_next, StepInfo)``.

    Raises
    ------
    ConstantObjective
        If the projected scaled cost vanishes relative to ``|D c|`` and is
        too short to be consistent with a zero optimum; every feasible point
        then has the same cost.
    NumericalBreakdown
        If ``[A D; e']`` is numerically rank deficient or the pull-back
        denominator is not positive.
    """
    x = np.asarray(x, dtype=float)
    n = problem.n
    if x.shape != (n,):
        raise DimensionMismatch(f"x has shape {x.shape}, expected ({n},)")
    if geometry.n != n:
        raise DimensionMismatch(f"geometry is for n = {geometry.n}, problem has n = {n}")
    if not np.all(x > tol_interior):
        raise NotInterior(f"min x_i = {x.min():.3g} is on the boundary")

    Dc = problem.c * x
    B = np.vstack([problem.A * x, np.ones((1, n))])
    try:
        basis = build_basis(B)
    except RankDeficient as exc:
        raise NumericalBreakdown(f"scaled constraint matrix lost rank: {exc}") from exc

    c_p = reject(basis, Dc)
    # c_P is much shorter than Dc near the optimum, so one pass leaves a
    # row-space residual of order eps*|Dc|; rejecting again (a no-op in exact
    # arithmetic) brings it down to eps*|c_P| and keeps A x = 0 from drifting
    c_p = reject(basis, c_p)
    gnorm = float(np.linalg.norm(c_p))
    scaled_obj = float(Dc.sum())
    # with a zero optimum |c_P| >= (Dc)'e / R, so a small |c_P| near the
    # optimum (where c'x is tiny too) is not mistaken for a constant cost
    if gnorm <= tol_gradient * float(np.linalg.norm(Dc)) and gnorm * geometry.R <= scaled_obj:
        raise ConstantObjective("projected cost is zero: objective constant on the feasible set", gnorm)

    p_hat = c_p / gnorm
    z = 1.0 - geometry.step_radius * p_hat
    Dz = x * z
    denom = float(Dz.sum())
    if not denom > 0:
        raise NumericalBreakdown(f"pull-back denominator e'Dz = {denom!r} is not positive")
    x_next = n * Dz / denom
    info = StepInfo(
        z=z,
        direction=p_hat,
        projected_gradient_norm=gnorm,
        scaled_objective_before=scaled_obj,
        scaled_objective_after=float(Dc @ z),
    )
    return x_next, info


def _potential(c, x):
    try:
        return phi(c, x).phi
    except NonpositiveObjective:
        return -math.inf


def solve(problem, config=None):
    """Run the iteration from the centre ``e`` until ``c'x < epsilon``.

    ``problem`` is assumed validated (see :func:`karmarkar.problem.validate`).
    Numerical breakdown is reported through ``Status.NUMERICAL_BREAKDOWN``
    with the trace gathered so far, not raised.
    """
    if config is None:
        config = SolverConfig()
    n = problem.n
    geometry = config.geometry(n)
    x = np.ones(n)
    c_dot_e = problem.c_dot_e()

    if abs(c_dot_e) <= config.tol_feas:
        return SolveResult(Status.TRIVIAL_CENTRE_OPTIMAL, x, 0, 0, (), c_dot_e,
                           "c'e = 0: the centre is optimal")
    if c_dot_e < 0:
        raise DomainError(f"c'e = {c_dot_e!r} < 0 contradicts a zero optimum")

    bound = iteration_bound(n, c_dot_e, config.epsilon)
    limit = config.max_iterations
    if limit is None:
        limit = max(4 * bound, 1)

    objective = c_dot_e
    potential = _potential(problem.c, x)
    trace = []
    k = 0
    status, message = None, ""
    while status is None:
        if objective < config.epsilon:
            status = Status.CONVERGED
            break
        if k >= limit:
            status = Status.ITERATION_LIMIT
            message = f"stopped after {k} iterations with c'x = {objective:.17g}"
            break
        try:
            x_next, step = iterate_once(problem, x, geometry, config.tol_gradient, config.tol_interior)
        except ConstantObjective as exc:
            status, message = Status.CONSTANT_OBJECTIVE, str(exc)
            break
        except (NumericalBreakdown, NotInterior) as exc:
            status, message = Status.NUMERICAL_BREAKDOWN, str(exc)
            break

        k += 1
        x = x_next
        objective = problem.objective(x)
        next_potential = _potential(problem.c, x)
        delta = potential - next_potential
        potential = next_potential
        if config.trace_enabled:
            trace.append(IterationRecord(
                k=k,
                x=x,
                objective=objective,
                phi=potential,
                delta_phi=delta,
                projected_gradient_norm=step.projected_gradient_norm,
                min_coordinate=float(x.min()),
                step=step,
                flagged=delta < PSI_ONE - DECREASE_FLAG_SLACK,
            ))

    return SolveResult(status, x, k, bound, tuple(trace), objective, message)


def trace_csv(trace):
    """Render records as CSV text with 17 significant digits and ``\\n`` line ends."""
    out = io.StringIO()
    out.write(TRACE_HEADER + "\n")
    for rec in trace:
        fields = (rec.objective, rec.phi, rec.delta_phi,
                  rec.projected_gradient_norm, rec.min_coordinate)
        out.write(str(rec.k) + "," + ",".join(f"{v:.17g}" for v in fields) + "\n")
    return out.getvalue()
