import numpy as np
import pytest

from bernvand.bases import bernstein_basis, de_casteljau, equispaced_nodes, random_stratified_nodes
from bernvand.conditioning import (
    conditioning_row,
    conditioning_sweep,
    kappa_bound,
    kappa_m_to_2,
    kappa_m_to_2_via_mass,
    m_norm,
    mass_matrix,
    spectral_check,
)

GX, GW = np.polynomial.legendre.leggauss(64)
QX, QW = (GX + 1) / 2, GW / 2


def test_mass_matrix_examples():
    np.testing.assert_array_equal(mass_matrix(0), [[1]])
    np.testing.assert_allclose(mass_matrix(1), [[1 / 3, 1 / 6], [1 / 6, 1 / 3]], rtol=1e-15)


@pytest.mark.parametrize("n", [5, 12])
def test_mass_matrix_against_quadrature(n):
    B = bernstein_basis(n, QX)
    np.testing.assert_allclose(mass_matrix(n), (B * QW[:, None]).T @ B, rtol=0, atol=1e-13)


def test_m_norm_examples():
    assert m_norm(mass_matrix(1), [1, 0]) == pytest.approx(np.sqrt(1 / 3), rel=1e-15)
    assert m_norm(mass_matrix(7), np.ones(8)) == pytest.approx(1.0, rel=1e-14)
    rng = np.random.default_rng(0)
    p = rng.standard_normal(9)
    quad = np.sqrt(QW @ de_casteljau(p, QX) ** 2)
    assert m_norm(mass_matrix(8), p) == pytest.approx(quad, rel=1e-12)
    with pytest.raises(ValueError):
        m_norm(mass_matrix(2), [1, 2])


def test_kappa_small_cases():
    assert kappa_m_to_2([0.3]) == pytest.approx(1.0)
    assert kappa_bound([0.3]) == pytest.approx(1.0)
    assert kappa_m_to_2([0, 1]) == pytest.approx(np.sqrt(3), abs=1e-10)
    assert kappa_bound([0, 1]) == pytest.approx(2**1.5 * np.sqrt(2 / 3), abs=1e-10)


@pytest.mark.parametrize("n", [2, 8, 15])
def test_two_formulations_agree(n):
    for x in (equispaced_nodes(n), random_stratified_nodes(n, n)):
        assert kappa_m_to_2_via_mass(x) == pytest.approx(kappa_m_to_2(x), rel=1e-6)


@pytest.mark.parametrize("seed", range(5))
def test_bound_dominates_stratified(seed):
    for n in (3, 10, 20):
        x = random_stratified_nodes(n, seed)
        assert kappa_m_to_2(x) <= kappa_bound(x)


def test_spectral_examples():
    r0 = spectral_check(0)
    np.testing.assert_allclose(r0.Q, [[1]])
    np.testing.assert_allclose(r0.eigenvalues, [1])
    r1 = spectral_check(1)
    assert sorted(r1.eigenvalues) == pytest.approx([1 / 6, 1 / 2], rel=1e-14)
    assert spectral_check(6).ok


def test_spectral_against_symmetric_eigensolver():
    r = spectral_check(10)
    assert r.ok
    np.testing.assert_allclose(np.sort(r.eigenvalues), np.linalg.eigvalsh(mass_matrix(10)), rtol=1e-10)


def test_spectral_reports_failures():
    r = spectral_check(5, tol=0.0)
    assert not r.ok


def test_sweep_rows():
    rows = conditioning_sweep(5)
    assert [r.n for r in rows] == [1, 2, 3, 4, 5]
    assert rows[0].kappa_2 == pytest.approx(1.0)
    assert all(r.kappa_m_to_2 <= r.bound for r in rows)
    r = conditioning_row(random_stratified_nodes(4, 1))
    assert r.n == 4
