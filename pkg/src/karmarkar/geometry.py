"""Radii of the spheres around the centre of the standard simplex, and the step fraction."""

import math
from dataclasses import dataclass

from .errors import DomainError


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {n!r}")
    return int(n)


def outer_radius(n):
    """Distance from the centre ``e`` to a vertex such as ``(0, ..., 0, n)``."""
    n = _check_n(n)
    return math.sqrt(n * (n - 1))


def inner_radius(n):
    """Distance from ``e`` to the nearest facet, i.e. to ``(0, w, ..., w)`` with ``w = n/(n-1)``."""
    n = _check_n(n)
    return math.sqrt(n / (n - 1))


def step_alpha(r):
    """Step fraction ``1/(r+1)`` that maximizes the guaranteed potential drop."""
    if not r > 0:
        raise DomainError(f"inner radius must be positive, got {r!r}")
    return 1.0 / (r + 1.0)


@dataclass(frozen=True)
class SimplexGeometry:
    n: int
    R: float
    r: float
    alpha: float

    @classmethod
    def for_dimension(cls, n, alpha=None):
        """Geometry for dimension ``n``; ``alpha`` overrides ``1/(r+1)`` if given.

        An override must satisfy ``0 < alpha * r < 1`` so the step stays
        strictly inside the inscribed sphere.
        """
        R, r = outer_radius(n), inner_radius(n)
        if alpha is None:
            alpha = step_alpha(r)
        elif not (alpha > 0 and alpha * r < 1):
            raise DomainError(
                f"alpha = {alpha!r} gives alpha*r = {alpha * r:.6g}; need 0 < alpha*r < 1"
            )
        return cls(int(n), R, r, float(alpha))

    @property
    def step_radius(self):
        """Radius ``alpha * r`` of the ball the step is taken in."""
        return self.alpha * self.r

    @property
    def contraction(self):
        """Guaranteed objective ratio ``1 - alpha r / R`` per step."""
        return 1.0 - self.alpha * self.r / self.R
