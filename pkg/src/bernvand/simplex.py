"""Bernstein-Vandermonde matrices on the d-simplex at equispaced lattice nodes.

Multiindices have length ``d + 1``. Lattices are ordered in contiguous blocks of
constant leading entry ``beta_0 = 0, 1, ..., n``; inside a block the same rule
is applied recursively to ``beta' = (beta_1, ..., beta_d)``. With this order the
``d = 1`` matrix is the univariate equispaced matrix indexed by ``beta_0``, and
``V^{d,n,n}`` has block ``(a0, b0)`` equal to ``V^n[a0, b0] V^{d-1, n-a0, n-b0}``.

The lattice node for ``alpha`` has barycentric coordinates ``alpha / m``.
"""

from functools import lru_cache
from math import comb, factorial, prod

import numpy as np
import scipy.sparse as sp

from .kernels import binomial_table
from .structured import lu_factor, lu_factor_nopivot
from .validation import SingularMatrixError, check_degree


@lru_cache(maxsize=None)
def _lattice(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((n,),)
    return tuple((b0,) + rest for b0 in range(n + 1) for rest in _lattice(d - 1, n - b0))


def build_lattice(d: int, n: int) -> list[tuple[int, ...]]:
    """All multiindices of length ``d + 1`` and order ``n``, in block order."""
    d = check_degree(d, minimum=1, name="d")
    n = check_degree(n)
    return list(_lattice(d, n))


@lru_cache(maxsize=None)
def _position(d: int, n: int) -> dict:
    return {beta: k for k, beta in enumerate(_lattice(d, n))}


def lattice_size(d: int, n: int) -> int:
    return comb(n + d, d)


def block_slices(d: int, n: int) -> list[slice]:
    """Row/column ranges of the constant-``beta_0`` blocks, ``beta_0 = 0 .. n``."""
    out, start = [], 0
    for b0 in range(n + 1):
        size = comb(n - b0 + d - 1, d - 1)
        out.append(slice(start, start + size))
        start += size
    return out


def multinomial(beta) -> float:
    """``|beta|! / prod(beta_i!)``."""
    return factorial(sum(beta)) / prod(factorial(b) for b in beta)


@lru_cache(maxsize=None)
def _simplex_vandermonde(d: int, m: int, n: int) -> np.ndarray:
    rows = np.array(_lattice(d, m), dtype=float) / (m if m else 1)
    cols = _lattice(d, n)
    coef = np.array([multinomial(beta) for beta in cols])
    expo = np.array(cols, dtype=float)
    # numpy's 0.0 ** 0 == 1 keeps lattice corners as unit rows
    V = coef * np.prod(rows[:, None, :] ** expo[None, :, :], axis=2)
    V.setflags(write=False)
    return V


def simplex_vandermonde(d: int, m: int, n: int) -> np.ndarray:
    """``V[alpha, beta] = (n!/beta!) prod_i (alpha_i / m)^{beta_i}``, shape ``C(m+d,d) x C(n+d,d)``."""
    d = check_degree(d, minimum=1, name="d")
    m = check_degree(m, name="m")
    n = check_degree(n)
    if m == 0 and n > 0:
        raise ValueError("a degree-0 lattice (m = 0) only supports n = 0")
    return _simplex_vandermonde(d, m, n)


def evaluate(coeffs, d: int, n: int, bary) -> np.ndarray:
    """Evaluate ``sum_beta c_beta B^n_beta`` at barycentric points ``bary`` (shape ``(k, d+1)``)."""
    lam = np.atleast_2d(np.asarray(bary, dtype=float))
    cols = _lattice(d, n)
    coef = np.array([multinomial(beta) for beta in cols])
    expo = np.array(cols, dtype=float)
    B = coef * np.prod(lam[:, None, :] ** expo[None, :, :], axis=2)
    return B @ np.asarray(coeffs, dtype=float)


@lru_cache(maxsize=None)
def _elevation(d: int, n0: int, n: int) -> sp.csr_matrix:
    target = np.array(_lattice(d, n))
    source = np.array(_lattice(d, n0))
    C = binomial_table(n)
    ge = np.all(target[:, None, :] >= source[None, :, :], axis=2)
    ri, ci = np.nonzero(ge)
    vals = np.prod(C[target[ri], source[ci]], axis=1) / comb(n, n0)
    E = sp.csr_matrix((vals, (ri, ci)), shape=(len(target), len(source)))
    return E


def elevation(d: int, n0: int, n: int) -> sp.csr_matrix:
    """Sparse degree-elevation matrix ``E^{d,n0,n}``.

    ``E[gamma, beta] = prod_i binom(gamma_i, beta_i) / binom(n, n0)`` for ``beta <= gamma``.
    """
    d = check_degree(d, minimum=1, name="d")
    n0 = check_degree(n0, name="n0")
    n = check_degree(n)
    if n0 > n:
        raise ValueError(f"cannot elevate from degree {n0} down to {n}")
    return _elevation(d, n0, n)


def elevate_once(c, d: int, n0: int) -> np.ndarray:
    """One elevation step, ``c'_gamma = (1/(n0+1)) sum_i gamma_i c_{gamma - e_i}``."""
    c = np.asarray(c, dtype=float)
    pos = _position(d, n0)
    out = np.zeros(lattice_size(d, n0 + 1))
    for r, gamma in enumerate(_lattice(d, n0 + 1)):
        acc = 0.0
        for i, g in enumerate(gamma):
            if g:
                acc += g * c[pos[gamma[:i] + (g - 1,) + gamma[i + 1 :]]]
        out[r] = acc / (n0 + 1)
    return out


def elevate(c, d: int, n0: int, n: int) -> np.ndarray:
    """Matrix-free elevation by repeated single steps."""
    for k in range(n0, n):
        c = elevate_once(c, d, k)
    return np.asarray(c, dtype=float)


def block_reduction_error(d: int, m: int, n: int, a0: int, b0: int) -> float:
    """Max-entry gap between block ``(a0, b0)`` of ``V^{d,m,n}`` and ``m_{a0 b0} V^{d-1, m-a0, n-b0}``."""
    if d <= 1:
        raise ValueError("block reduction needs d > 1")
    if not (0 <= a0 <= m and 0 <= b0 <= n):
        raise ValueError("block index out of range")
    V = simplex_vandermonde(d, m, n)
    rows = block_slices(d, m)[a0]
    cols = block_slices(d, n)[b0]
    block = V[rows, cols]
    if a0 == m and b0 != n:
        expected = np.zeros_like(block)
    else:
        scal = comb(n, b0) * (a0 / m) ** b0 * (1 - a0 / m) ** (n - b0)
        expected = scal * simplex_vandermonde(d - 1, m - a0, n - b0)
    return float(np.max(np.abs(block - expected)))


@lru_cache(maxsize=None)
def _univariate_lu(n: int):
    L, U = lu_factor_nopivot(_simplex_vandermonde(1, n, n))
    L.setflags(write=False)
    U.setflags(write=False)
    return L, U


def block_lu_factors(d: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Assemble the dense block factors ``L^{d,n}``, ``U^{d,n}`` of ``V^{d,n,n}``.

    Block ``(a0, b0)`` of ``L`` is ``L^n[a0, b0] V^{d-1, n-a0, n-b0}`` and of ``U``
    is ``U^n[a0, b0] E^{d-1, n-b0, n-a0}``, with ``L^n U^n`` the unpivoted LU of
    the univariate equispaced matrix.
    """
    d = check_degree(d, minimum=2, name="d")
    n = check_degree(n, minimum=1)
    Ln, Un = _univariate_lu(n)
    N = lattice_size(d, n)
    L = np.zeros((N, N))
    U = np.zeros((N, N))
    blk = block_slices(d, n)
    for a0 in range(n + 1):
        for b0 in range(a0 + 1):
            if Ln[a0, b0] != 0.0:
                L[blk[a0], blk[b0]] = Ln[a0, b0] * simplex_vandermonde(d - 1, n - a0, n - b0)
        for b0 in range(a0, n + 1):
            U[blk[a0], blk[b0]] = Un[a0, b0] * elevation(d - 1, n - b0, n - a0).toarray()
    return L, U


def block_lu_solve(d: int, n: int, b) -> np.ndarray:
    """Solve ``V^{d,n,n} c = b`` by block forward/back substitution, recursing in ``d``.

    The diagonal blocks of ``U^{d,n}`` are ``U^n[k, k] I`` since ``E^{d-1,k,k} = I``,
    so back substitution needs no inner solves.
    """
    d = check_degree(d, minimum=1, name="d")
    n = check_degree(n)
    b = np.asarray(b, dtype=float)
    if b.shape != (lattice_size(d, n),):
        raise ValueError(f"b must have shape ({lattice_size(d, n)},), got {b.shape}")
    if n == 0:
        return b.copy()
    if d == 1:
        return lu_factor(_simplex_vandermonde(1, n, n)).solve(b)

    Ln, Un = _univariate_lu(n)
    blk = block_slices(d, n)
    y = [None] * (n + 1)
    for a0 in range(n + 1):
        rhs = b[blk[a0]].copy()
        for g in range(a0):
            # block (a0, g) vanishes when the sub-lattice degenerates to a point (a0 = n)
            if Ln[a0, g] != 0.0 and n - a0 > 0:
                rhs -= Ln[a0, g] * (simplex_vandermonde(d - 1, n - a0, n - g) @ y[g])
        if Ln[a0, a0] == 0.0:
            raise SingularMatrixError(a0)
        y[a0] = block_lu_solve(d - 1, n - a0, rhs / Ln[a0, a0])

    c = [None] * (n + 1)
    for b0 in range(n, -1, -1):
        rhs = y[b0].copy()
        for g in range(b0 + 1, n + 1):
            if Un[b0, g] != 0.0:
                rhs -= Un[b0, g] * (elevation(d - 1, n - g, n - b0) @ c[g])
        if Un[b0, b0] == 0.0:
            raise SingularMatrixError(b0)
        c[b0] = rhs / Un[b0, b0]
    return np.concatenate(c)


def simplex_mass_matrix(d: int, n: int) -> np.ndarray:
    """Gram matrix of ``{B^n_beta}`` on the reference simplex (volume ``1/d!``).

    ``M[a, b] = (n!/a!)(n!/b!) (a+b)! / (2n+d)!`` from the Dirichlet integral
    ``int prod lambda_i^{k_i} = k! / (|k| + d)!``.
    """
    d = check_degree(d, minimum=1, name="d")
    n = check_degree(n)
    idx = np.array(_lattice(d, n))
    fact = np.array([float(factorial(k)) for k in range(2 * n + d + 1)])
    coef = np.array([multinomial(beta) for beta in _lattice(d, n)])
    pair = np.prod(fact[idx[:, None, :] + idx[None, :, :]], axis=2)
    return np.outer(coef, coef) * pair / fact[2 * n + d]


def lattice_points(d: int, m: int) -> np.ndarray:
    """Cartesian coordinates ``alpha' / m`` of the lattice on the reference simplex."""
    pts = np.array(_lattice(d, m), dtype=float)[:, 1:]
    return pts / (m if m else 1)

