import math

import numpy as np
import pytest

from karmarkar.errors import DomainError
from karmarkar.geometry import SimplexGeometry, inner_radius, outer_radius, step_alpha


def test_outer_radius_values():
    assert outer_radius(3) == pytest.approx(math.sqrt(6), rel=1e-15)
    assert outer_radius(3) == pytest.approx(2.449490, abs=1e-6)
    assert outer_radius(2) == pytest.approx(math.sqrt(2), rel=1e-15)


@pytest.mark.parametrize("n", [2, 3, 5, 10, 17])
def test_outer_radius_is_distance_to_vertex(n):
    vertex = np.zeros(n)
    vertex[-1] = n
    assert outer_radius(n) == pytest.approx(np.linalg.norm(vertex - np.ones(n)), rel=1e-13)


def test_outer_radius_ten():
    assert outer_radius(10) == pytest.approx(9.486833, abs=1e-6)


def test_inner_radius_values():
    assert inner_radius(3) == pytest.approx(math.sqrt(1.5), rel=1e-15)
    assert inner_radius(3) == pytest.approx(1.224745, abs=1e-6)
    assert inner_radius(2) == pytest.approx(math.sqrt(2), rel=1e-15)


@pytest.mark.parametrize("n", [2, 3, 5, 9, 40])
def test_inner_radius_is_distance_to_facet(n):
    w = n / (n - 1)
    tangent = np.full(n, w)
    tangent[0] = 0.0
    assert tangent.sum() == pytest.approx(n)
    assert inner_radius(n) == pytest.approx(np.linalg.norm(tangent - np.ones(n)), rel=1e-13)


def test_inner_radius_five():
    assert inner_radius(5) == pytest.approx(math.sqrt(1.25), rel=1e-15)


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5])
def test_dimension_errors(bad):
    with pytest.raises(DomainError):
        outer_radius(bad)
    with pytest.raises(DomainError):
        inner_radius(bad)


def test_step_alpha():
    assert step_alpha(math.sqrt(1.5)) == pytest.approx(0.449490, abs=1e-6)
    assert step_alpha(1.0) == 0.5
    for r in (0.1, 1.0, 10.0, 1000.0):
        assert step_alpha(r) * r < 1
    with pytest.raises(DomainError):
        step_alpha(0.0)
    with pytest.raises(DomainError):
        step_alpha(-1.0)


@pytest.mark.parametrize("n", range(2, 65))
def test_radius_identities(n):
    R, r = outer_radius(n), inner_radius(n)
    assert R * r == pytest.approx(n, rel=1e-12)
    assert r / R == pytest.approx(1 / (n - 1), rel=1e-12)
    assert r > 1
    assert step_alpha(r) * r < 1


def test_geometry_override():
    g = SimplexGeometry.for_dimension(3)
    assert g.alpha == pytest.approx(1 / (1 + math.sqrt(1.5)))
    assert g.step_radius == pytest.approx(g.alpha * g.r)
    assert SimplexGeometry.for_dimension(3, alpha=0.25).alpha == 0.25
    with pytest.raises(DomainError):
        SimplexGeometry.for_dimension(3, alpha=1 / math.sqrt(1.5))
    with pytest.raises(DomainError):
        SimplexGeometry.for_dimension(3, alpha=0.0)
