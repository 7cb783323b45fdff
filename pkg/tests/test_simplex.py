from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bernvand.bases import bernstein_basis, equispaced_nodes
from bernvand.conditioning import mass_matrix
from bernvand.simplex import (
    block_lu_factors,
    block_lu_solve,
    block_reduction_error,
    block_slices,
    build_lattice,
    elevate,
    elevation,
    evaluate,
    lattice_points,
    lattice_size,
    simplex_mass_matrix,
    simplex_vandermonde,
)


def test_lattice_examples():
    assert build_lattice(1, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(build_lattice(2, 1)) == 3
    assert len(build_lattice(3, 4)) == comb(7, 3) == 35


@pytest.mark.parametrize("d,n", [(1, 5), (2, 4), (3, 3)])
def test_lattice_blocks(d, n):
    lat = build_lattice(d, n)
    assert len(lat) == lattice_size(d, n) and len(set(lat)) == len(lat)
    assert all(sum(b) == n and min(b) >= 0 for b in lat)
    for b0, sl in enumerate(block_slices(d, n)):
        assert {b[0] for b in lat[sl]} == {b0}
        assert sl.stop - sl.start == comb(n - b0 + d - 1, d - 1)
        if d > 1:
            assert [b[1:] for b in lat[sl]] == build_lattice(d - 1, n - b0)


def test_vandermonde_examples():
    np.testing.assert_array_equal(simplex_vandermonde(2, 1, 1), np.eye(3))
    V = simplex_vandermonde(2, 2, 2)
    row = build_lattice(2, 2).index((0, 1, 1))
    assert V[row].sum() == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("n", [1, 4, 9])
def test_one_dimensional_case(n):
    np.testing.assert_allclose(
        simplex_vandermonde(1, n, n), bernstein_basis(n, equispaced_nodes(n)), rtol=0, atol=1e-15
    )


def test_vandermonde_row_sums_and_degenerate_lattice():
    for d, m, n in [(2, 3, 5), (3, 4, 2)]:
        np.testing.assert_allclose(simplex_vandermonde(d, m, n).sum(axis=1), 1, atol=1e-14)
    np.testing.assert_array_equal(simplex_vandermonde(2, 0, 0), [[1]])
    with pytest.raises(ValueError):
        simplex_vandermonde(2, 0, 1)


def test_elevation_examples():
    np.testing.assert_allclose(elevation(1, 1, 2) @ [2.0, 6.0], [2, 4, 6])
    for d in (1, 2, 3):
        np.testing.assert_array_equal(elevation(d, 3, 3).toarray(), np.eye(lattice_size(d, 3)))
    err = np.abs(simplex_vandermonde(2, 3, 3) @ elevation(2, 2, 3).toarray() - simplex_vandermonde(2, 3, 2)).max()
    assert err <= 1e-12
    with pytest.raises(ValueError):
        elevation(2, 3, 2)


def test_elevation_keeps_constants():
    E = elevation(3, 2, 5).toarray()
    np.testing.assert_allclose(E.sum(axis=1), 1, atol=1e-14)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 3), st.integers(0, 2**32 - 1))
def test_elevation_preserves_values(d, n0, extra, seed):
    rng = np.random.default_rng(seed)
    n = n0 + extra
    c = rng.standard_normal(lattice_size(d, n0))
    bary = rng.dirichlet(np.ones(d + 1), 20)
    e = elevation(d, n0, n) @ c
    np.testing.assert_allclose(evaluate(e, d, n, bary), evaluate(c, d, n0, bary), atol=1e-11)
    np.testing.assert_allclose(e, elevate(c, d, n0, n), atol=1e-13)


def test_block_reduction_examples():
    assert block_reduction_error(2, 2, 2, 2, 0) == 0.0
    assert block_reduction_error(2, 2, 2, 2, 1) == 0.0
    assert block_reduction_error(2, 3, 3, 1, 1) <= 1e-13
    assert block_reduction_error(3, 2, 2, 0, 0) <= 1e-13
    V = simplex_vandermonde(3, 2, 2)
    sl = block_slices(3, 2)[0]
    np.testing.assert_allclose(V[sl, sl], simplex_vandermonde(2, 2, 2), atol=1e-15)
    with pytest.raises(ValueError):
        block_reduction_error(1, 2, 2, 0, 0)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_block_factors_reconstruct(n):
    L, U = block_lu_factors(2, n)
    assert np.abs(L @ U - simplex_vandermonde(2, n, n)).max() <= 1e-10
    blk = block_slices(2, n)
    for a0 in range(n + 1):
        for b0 in range(a0 + 1, n + 1):
            assert np.all(L[blk[a0], blk[b0]] == 0) and np.all(U[blk[b0], blk[a0]] == 0)
    for k in range(n + 1):
        D = U[blk[k], blk[k]]
        np.testing.assert_array_equal(D, D[0, 0] * np.eye(D.shape[0]))


def test_block_solve_examples():
    b = np.array([0.2, -1.0, 3.0])
    np.testing.assert_allclose(block_lu_solve(2, 1, b), b)
    for d, n in [(2, 4), (3, 3)]:
        rng = np.random.default_rng(d * 10 + n)
        V = simplex_vandermonde(d, n, n)
        c = rng.uniform(-1, 1, V.shape[0])
        dense = np.linalg.solve(V, V @ c)
        got = block_lu_solve(d, n, V @ c)
        assert np.linalg.norm(got - dense) <= 1e-8 * np.linalg.norm(dense)
    with pytest.raises(ValueError):
        block_lu_solve(2, 2, np.ones(5))


def test_block_solve_one_dimensional_base_case():
    V = simplex_vandermonde(1, 6, 6)
    c = np.linspace(-1, 1, 7)
    np.testing.assert_allclose(block_lu_solve(1, 6, V @ c), c, atol=1e-12)


def _triangle_rule(k):
    # collapsed Gauss rule, exact for total degree <= 2k - 2
    g, w = np.polynomial.legendre.leggauss(k)
    u, wu = (g + 1) / 2, w / 2
    U, Vv = np.meshgrid(u, u, indexing="ij")
    W = np.outer(wu, wu) * (1 - U)
    x, y = U.ravel(), ((1 - U) * Vv).ravel()
    return np.column_stack([1 - x - y, x, y]), W.ravel()


def test_simplex_mass_matrix():
    np.testing.assert_allclose(simplex_mass_matrix(1, 6), mass_matrix(6), rtol=1e-14)
    M = simplex_mass_matrix(2, 4)
    np.testing.assert_array_equal(M, M.T)
    one = np.ones(lattice_size(2, 4))
    assert one @ M @ one == pytest.approx(0.5, rel=1e-14)
    one3 = np.ones(lattice_size(3, 3))
    assert one3 @ simplex_mass_matrix(3, 3) @ one3 == pytest.approx(1 / 6, rel=1e-14)
    bary, w = _triangle_rule(8)
    B = np.column_stack([evaluate(np.eye(lattice_size(2, 4))[k], 2, 4, bary) for k in range(lattice_size(2, 4))])
    np.testing.assert_allclose(M, (B * w[:, None]).T @ B, atol=1e-15)


def test_lattice_points_are_nodes():
    pts = lattice_points(2, 3)
    assert pts.shape == (10, 2)
    bary = np.column_stack([1 - pts.sum(axis=1), pts])
    np.testing.assert_allclose(
        np.column_stack([evaluate(np.eye(10)[k], 2, 3, bary) for k in range(10)]),
        simplex_vandermonde(2, 3, 3),
        atol=1e-15,
    )
