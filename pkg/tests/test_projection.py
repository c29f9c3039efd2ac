import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from karmarkar.errors import DimensionMismatch, RankDeficient
from karmarkar.projection import build_basis, dependent_rows, project, reject


def explicit_projector(B):
    """Dense P = B^T (B B^T)^{-1} B, formed by explicit inversion."""
    B = np.asarray(B, dtype=float)
    return B.T @ np.linalg.inv(B @ B.T) @ B


@st.composite
def matrices_and_vectors(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return rng.standard_normal((k, n)), rng.standard_normal(n)


def test_single_row_of_ones():
    basis = build_basis([[1.0, 1.0, 1.0]])
    np.testing.assert_allclose(basis.gram(), [[3.0]])
    # hand solve of the 1x1 Gram system: E = v - (v'e / 3) e
    np.testing.assert_allclose(reject(basis, [1.0, 0.0, 0.0]), [2 / 3, -1 / 3, -1 / 3], atol=1e-15)
    np.testing.assert_allclose(project(basis, [1.0, 0.0, 0.0]), [1 / 3, 1 / 3, 1 / 3], atol=1e-15)


def test_difference_rows_gram():
    basis = build_basis([[1.0, -1.0, 0.0], [0.0, 1.0, -1.0]])
    np.testing.assert_allclose(basis.gram(), [[2.0, -1.0], [-1.0, 2.0]], atol=1e-15)
    assert np.all(np.linalg.eigvalsh(basis.gram()) > 0)


def test_proportional_rows_rejected():
    with pytest.raises(RankDeficient) as info:
        build_basis([[1.0, 1.0, 1.0], [2.0, 2.0, 2.0]])
    assert info.value.dependent_rows == (1,)


def test_zero_row_rejected():
    with pytest.raises(RankDeficient):
        build_basis([[0.0, 0.0, 0.0], [1.0, 1.0, 1.0]])


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        build_basis([1.0, 2.0])
    with pytest.raises(DimensionMismatch):
        build_basis(np.ones((3, 2)))
    basis = build_basis([[1.0, 1.0, 1.0]])
    with pytest.raises(DimensionMismatch):
        reject(basis, [1.0, 0.0])


def test_badly_scaled_rows_are_still_independent():
    # a relative pivot test on the raw Gram matrix would call this singular
    B = [[1e-7, -1e-7, 0.0], [1.0, 1.0, 1.0]]
    basis = build_basis(B)
    np.testing.assert_allclose(
        reject(basis, [1.0, 0.0, 0.0]),
        (np.eye(3) - explicit_projector(B)) @ [1.0, 0.0, 0.0],
        atol=1e-12,
    )


def test_dependent_rows_scan():
    B = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [2, 0, 3, 0]]
    assert dependent_rows(B) == [2, 4]


@given(matrices_and_vectors())
def test_row_space_vectors_are_annihilated(bv):
    B, v = bv
    basis = build_basis(B)
    y = v[: B.shape[0]]
    w = B.T @ y
    assert np.linalg.norm(reject(basis, w)) <= 1e-10 * max(1.0, np.linalg.norm(w))


@given(matrices_and_vectors())
def test_null_space_vectors_are_fixed(bv):
    B, v = bv
    basis = build_basis(B)
    v0 = v - explicit_projector(B) @ v  # B v0 = 0
    np.testing.assert_allclose(reject(basis, v0), v0, rtol=0, atol=1e-12 * max(1, np.linalg.norm(v)))
    np.testing.assert_allclose(project(basis, v0), 0.0, atol=1e-12 * max(1, np.linalg.norm(v)))


@given(matrices_and_vectors())
def test_decomposition(bv):
    B, v = bv
    basis = build_basis(B)
    p, e = project(basis, v), reject(basis, v)
    np.testing.assert_allclose(p + e, v, rtol=0, atol=1e-14 * np.linalg.norm(v) + 1e-300)
    nv2 = v @ v
    assert abs(p @ e) <= 1e-9 * nv2
    assert abs(nv2 - (p @ p + e @ e)) <= 1e-9 * nv2
    assert np.max(np.abs(B @ e)) <= 1e-9 * max(1.0, np.linalg.norm(v))


@given(matrices_and_vectors())
def test_idempotent(bv):
    B, v = bv
    basis = build_basis(B)
    e1 = reject(basis, v)
    e2 = reject(basis, e1)
    assert np.linalg.norm(e2 - e1) <= 1e-10 * max(np.linalg.norm(e1), 1e-300)


@settings(max_examples=200)
@given(matrices_and_vectors(max_n=5))
def test_matches_explicit_projector(bv):
    B, v = bv
    basis = build_basis(B)
    P = explicit_projector(B)
    np.testing.assert_allclose(project(basis, v), P @ v, rtol=0, atol=1e-8)
    np.testing.assert_allclose(reject(basis, v), v - P @ v, rtol=0, atol=1e-8)


@given(matrices_and_vectors())
def test_factor_reproduces_gram(bv):
    B, _ = bv
    basis = build_basis(B)
    G = B @ B.T
    assert np.linalg.norm(basis.gram() - G) <= 1e-10 * np.linalg.norm(G)


def test_basis_is_read_only():
    basis = build_basis([[1.0, 1.0, 1.0]])
    with pytest.raises(ValueError):
        basis.B[0, 0] = 2.0
