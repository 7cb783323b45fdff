"""Univariate Bernstein-Vandermonde systems ``V c = b`` with ``V[i, j] = B^n_j(x_i)``.

Three backends: pivoted LU of ``V``, the explicit inverse
``Bez(v, 1) V^T diag(1 / v'(x_j))`` with ``v`` the node polynomial, and a
factored inverse built from Hankel, Toeplitz, diagonal and scaled-transpose
factors whose structured parts are applied by FFT.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb, factorial

import numpy as np

from .bases import (
    bernstein_basis,
    de_casteljau,
    equispaced_nodes,
    node_polynomial_bernstein,
    node_polynomial_derivatives,
)
from .bezout import bezout_recurrence
from .kernels import MAX_STIRLING_N, binom, stirling_numbers
from .structured import DiagonalMatrix, HankelMatrix, ToeplitzMatrix, lu_factor
from .validation import check_degree, check_nodes, check_vector


class Method(str, Enum):
    LU = "lu"
    BEZOUT = "bezout"
    DFT = "dft"
    DFT_EQUISPACED = "dft-equispaced"


def bernstein_vandermonde(nodes, n: int | None = None) -> np.ndarray:
    """Square collocation matrix for ``n + 1`` nodes; ``n`` defaults to ``len(nodes) - 1``."""
    x = check_nodes(nodes, n=n)
    return bernstein_basis(x.size - 1, x)


def bezout_inverse(nodes, w=None) -> np.ndarray:
    """Dense ``V^{-1} = Bez(v, w) V^T diag(1 / (v'(x_j) w(x_j)))``.

    ``w`` holds degree-``n+1`` Bernstein coefficients and must not vanish at a
    node; it defaults to the constant 1 (all coefficients 1).
    """
    x = check_nodes(nodes)
    n = x.size - 1
    v = node_polynomial_bernstein(x)
    if w is None:
        w = np.ones(n + 2)
        w_at_nodes = np.ones(n + 1)
    else:
        w = check_vector(w, n + 2, name="w")
        w_at_nodes = de_casteljau(w, x)
        if np.any(w_at_nodes == 0.0):
            raise ValueError("w vanishes at a node")
    dv = node_polynomial_derivatives(x)
    V = bernstein_basis(n, x)
    return bezout_recurrence(v, w) @ V.T / (dv * w_at_nodes)


def inverse_via_bezout(nodes) -> np.ndarray:
    """Explicit inverse through the Bernstein-Bezout matrix ``Bez(v, 1)``."""
    return bezout_inverse(nodes)


@dataclass(frozen=True)
class FactoredInverse:
    """``V^{-1} = Delta^{-1} [Ht T - H Tt] Vt^T D^{-1}`` kept as separate factors."""

    Htilde: HankelMatrix
    T: ToeplitzMatrix
    H: HankelMatrix
    Ttilde: ToeplitzMatrix
    delta_inv: DiagonalMatrix
    d_inv: DiagonalMatrix
    Vtilde: np.ndarray

    @property
    def shape(self):
        return self.delta_inv.shape

    def apply(self, b) -> np.ndarray:
        b = np.asarray(b, dtype=float)
        z = self.Vtilde.T @ (self.d_inv @ b)
        return self.delta_inv @ (self.Htilde @ (self.T @ z) - self.H @ (self.Ttilde @ z))

    __matmul__ = apply

    def to_dense(self) -> np.ndarray:
        core = self.Htilde.to_dense() @ self.T.to_dense() - self.H.to_dense() @ self.Ttilde.to_dense()
        return self.delta_inv.to_dense() @ core @ self.Vtilde.T @ self.d_inv.to_dense()


def shifted_node_coefficients(nodes) -> np.ndarray:
    """Coefficients ``q_0 .. q_{n+1}`` of ``prod_i ((1 - x_i) - x_i y)``.

    With ``a_k`` the monomial coefficients of the node polynomial,
    ``q_j = sum_k binom(n+1-k, j) a_k``, which are exactly the sums that fill
    the Hankel and Toeplitz factors. Multiplying out the linear factors gives
    each ``q_j`` as a sum of terms of one sign, so no digits cancel, unlike
    the alternating binomial sums over the symmetric functions.
    """
    x = np.asarray(nodes, dtype=float)
    q = np.zeros(x.size + 1)
    q[0] = 1.0
    for count, xi in enumerate(x, start=1):
        nxt = np.zeros_like(q)
        nxt[:count] = (1.0 - xi) * q[:count]
        nxt[1 : count + 1] -= xi * q[:count]
        q = nxt
    return q


def _structured_factors(n: int, q: np.ndarray):
    """Hankel/Toeplitz factors from the shifted coefficients ``q``.

    ``Ht[i, j] = q[n - i - j]`` (zero once ``i + j > n``) and
    ``Tt[i, j] = q[n + 1 - (j - i)]`` for ``j >= i``.
    """
    anti = np.zeros(2 * n + 1)
    anti[: n + 1] = q[n::-1]
    row = q[n + 1 : 0 : -1].copy()
    col = np.zeros(n + 1)
    col[0] = row[0]
    Htilde = HankelMatrix(anti)
    Ttilde = ToeplitzMatrix(first_col=col, first_row=row)

    H = HankelMatrix(np.array([binom(n + 1, s + 1) for s in range(2 * n + 1)]))
    t_row = np.array([binom(n + 1, m) for m in range(n + 1)])
    t_col = np.zeros(n + 1)
    t_col[0] = 1.0
    T = ToeplitzMatrix(first_col=t_col, first_row=t_row)
    delta_inv = DiagonalMatrix(np.array([1.0 / comb(n, j) for j in range(n + 1)]))
    return Htilde, T, H, Ttilde, delta_inv


def factored_inverse(nodes) -> FactoredInverse:
    """Factored inverse for arbitrary distinct nodes."""
    x = check_nodes(nodes)
    n = x.size - 1
    Htilde, T, H, Ttilde, delta_inv = _structured_factors(n, shifted_node_coefficients(x))
    j = np.arange(n + 1)
    Vtilde = x[:, None] ** j * (1.0 - x[:, None]) ** (n - j)
    d_inv = DiagonalMatrix(1.0 / node_polynomial_derivatives(x))
    return FactoredInverse(Htilde, T, H, Ttilde, delta_inv, d_inv, Vtilde)


def factored_inverse_equispaced(n: int) -> FactoredInverse:
    """Factored inverse at ``x_i = i / n`` with integer-valued ``D`` and ``Vt``.

    Node-polynomial coefficients are ``s(n+1, k) / n^(n-k+1)``; the binomial
    sums over them are carried out in integers and divided by ``n^(n+1)``
    once. The ``n^n`` scalings of ``D`` and ``Vt`` cancel.
    """
    n = check_degree(n, minimum=1, maximum=MAX_STIRLING_N - 1)
    N = n + 1
    s = stirling_numbers(N)
    scale = n**N
    q = np.array([sum(comb(N - k, j) * s[k] * n**k for k in range(N + 1)) / scale for j in range(N + 1)])
    Htilde, T, H, Ttilde, delta_inv = _structured_factors(n, q)
    i = np.arange(n + 1, dtype=float)
    Vtilde = i[:, None] ** i[None, :] * (n - i[:, None]) ** (n - i[None, :])
    d = np.array([(-1.0) ** (n - j) * factorial(j) * factorial(n - j) for j in range(n + 1)])
    return FactoredInverse(Htilde, T, H, Ttilde, delta_inv, DiagonalMatrix(1.0 / d), Vtilde)


def solve(method, nodes, b) -> np.ndarray:
    """Solve ``V c = b`` at ``nodes`` with the chosen backend.

    ``"dft-equispaced"`` requires ``nodes`` to be ``i / n`` exactly.
    """
    method = Method(method)
    x = check_nodes(nodes)
    n = x.size - 1
    b = check_vector(b, n + 1)
    if method is Method.LU:
        return lu_factor(bernstein_vandermonde(x)).solve(b)
    if method is Method.BEZOUT:
        return inverse_via_bezout(x) @ b
    if method is Method.DFT:
        return factored_inverse(x).apply(b)
    if n < 1 or not np.array_equal(x, equispaced_nodes(n)):
        raise ValueError("the equispaced DFT variant needs nodes i/n")
    return factored_inverse_equispaced(n).apply(b)
