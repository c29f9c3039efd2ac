"""Karmarkar's projective-scaling method for LPs in canonical form."""

from .errors import (
    ConstantObjective,
    DimensionMismatch,
    DomainError,
    EmptyFeasibleSet,
    KarmarkarError,
    NonpositiveObjective,
    NotFeasible,
    NotInterior,
    NotOnSimplex,
    NumericalBreakdown,
    PreconditionViolated,
    ProblemFormatError,
    RankDeficient,
    TooLarge,
    ZeroDenominator,
)
from .geometry import SimplexGeometry, inner_radius, outer_radius, step_alpha
from .oracle import VertexSet, certify_zero_optimum, enumerate_vertices, make_zero_optimum_instance
from .potential import (
    PSI_ONE,
    PotentialValue,
    objective_lower_bound_from_phi,
    objective_upper_bound_from_phi,
    phi,
    psi,
    psi_majorization_check,
)
from .problem import KarmarkarProblem, ValidationReport, rescale_unit_simplex, validate
from .projection import ProjectionBasis, build_basis, project, reject
from .solver import (
    IterationRecord,
    SolveResult,
    SolverConfig,
    Status,
    iterate_once,
    iteration_bound,
    solve,
)
from .transform import TransformCoefficients, scaled_subproblem

__version__ = "0.1.0"
