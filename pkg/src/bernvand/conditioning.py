"""Mass-matrix conditioning of Bernstein-Vandermonde matrices.

The ``M -> 2`` condition number measures coefficient vectors in the
mass-matrix norm ``||p||_M = sqrt(p^T M p)`` (the L^2 norm of the polynomial)
and data vectors in the Euclidean norm.
"""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .bases import (
    bernstein_basis,
    equispaced_nodes,
    lagrange_l2_norms,
    legendre_shifted_eval,
    legendre_to_bernstein_matrix,
)
from .structured import condition_number_2
from .validation import check_degree, check_nodes


def mass_matrix(n: int) -> np.ndarray:
    """``M[i, j] = int_0^1 B^n_i B^n_j dx = binom(n,i) binom(n,j) / ((2n+1) binom(2n, i+j))``."""
    n = check_degree(n, maximum=30)
    M = np.empty((n + 1, n + 1))
    for i in range(n + 1):
        for j in range(n + 1):
            M[i, j] = comb(n, i) * comb(n, j) / ((2 * n + 1) * comb(2 * n, i + j))
    return M


def m_norm(M, p) -> float:
    M = np.asarray(M, dtype=float)
    p = np.asarray(p, dtype=float)
    if p.shape != (M.shape[0],):
        raise ValueError(f"dimension mismatch: mass matrix is {M.shape}, vector is {p.shape}")
    return float(np.sqrt(p @ M @ p))


def legendre_vandermonde(nodes) -> np.ndarray:
    """``Vhat[i, j] = L^j(x_i)`` for shifted Legendre polynomials."""
    x = check_nodes(nodes)
    return np.column_stack([legendre_shifted_eval(j, x) for j in range(x.size)])


def kappa_m_to_2(nodes) -> float:
    """``kappa_{M->2}(V)`` as the 2-norm condition number of ``Vhat diag(sqrt(2j+1))``."""
    Vhat = legendre_vandermonde(nodes)
    scale = np.sqrt(2.0 * np.arange(Vhat.shape[1]) + 1.0)
    return condition_number_2(Vhat * scale)


def kappa_m_to_2_via_mass(nodes) -> float:
    """Same quantity as ``kappa_2(V M^{-1/2})``, with ``M^{-1/2}`` from a symmetric eigensolver."""
    x = check_nodes(nodes)
    n = x.size - 1
    lam, Q = np.linalg.eigh(mass_matrix(n))
    M_inv_sqrt = (Q / np.sqrt(lam)) @ Q.T
    return condition_number_2(bernstein_basis(n, x) @ M_inv_sqrt)


def kappa_bound(nodes) -> float:
    """Upper bound ``(n+1)^{3/2} ||w||_2`` with ``w_j`` the L^2 norms of the Lagrange polynomials."""
    x = check_nodes(nodes)
    return float((x.size) ** 1.5 * np.linalg.norm(lagrange_l2_norms(x)))


@dataclass
class SpectralReport:
    n: int
    eigenvalues: np.ndarray
    Q: np.ndarray
    orthogonality_error: float
    reconstruction_error: float
    tol: float
    failed_columns: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.failed_columns
            and self.orthogonality_error <= self.tol
            and self.reconstruction_error <= self.tol
        )


def spectral_check(n: int, tol: float = 1e-8) -> SpectralReport:
    """Check that ``M^n = Q Lambda Q^T`` with ``Q = T^n diag(sqrt((2j+1) lambda_j))`` orthogonal.

    Column ``j`` of ``T^n`` holds the Bernstein coefficients of ``L^j``. Since
    ``int L_j^2 = 1/(2j+1)``, an eigenvector column must have
    ``lambda_j = 1 / ((2j+1) ||T_j||^2)``; that is what makes ``Q`` orthonormal.
    """
    n = check_degree(n, maximum=20)
    M = mass_matrix(n)
    T = legendre_to_bernstein_matrix(n)
    j = np.arange(n + 1)
    col_norm2 = np.sum(T**2, axis=0)
    lam = 1.0 / ((2 * j + 1) * col_norm2)
    Q = T * np.sqrt((2 * j + 1) * lam)

    gram = Q.T @ Q - np.eye(n + 1)
    recon = Q @ np.diag(lam) @ Q.T - M
    # each column must be an eigenvector: M q_j = lambda_j q_j
    residual = np.max(np.abs(M @ Q - Q * lam), axis=0)
    failed = [int(k) for k in np.flatnonzero((residual > tol) | (np.max(np.abs(gram), axis=0) > tol))]
    return SpectralReport(
        n=n,
        eigenvalues=lam,
        Q=Q,
        orthogonality_error=float(np.max(np.abs(gram))),
        reconstruction_error=float(np.max(np.abs(recon))),
        tol=tol,
        failed_columns=failed,
    )


@dataclass(frozen=True)
class ConditioningRow:
    n: int
    kappa_m_to_2: float
    bound: float
    kappa_2: float


def conditioning_row(nodes) -> ConditioningRow:
    x = check_nodes(nodes)
    return ConditioningRow(
        n=x.size - 1,
        kappa_m_to_2=kappa_m_to_2(x),
        bound=kappa_bound(x),
        kappa_2=condition_number_2(bernstein_basis(x.size - 1, x)),
    )


def conditioning_sweep(n_max: int) -> list[ConditioningRow]:
    """Rows for equispaced nodes, ``n = 1 .. n_max``."""
    n_max = check_degree(n_max, minimum=1, maximum=30)
    return [conditioning_row(equispaced_nodes(n)) for n in range(1, n_max + 1)]
