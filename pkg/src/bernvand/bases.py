"""Univariate polynomial bases on [0, 1] and conversions between them.

Coefficient vectors are plain 1-D arrays, lowest index first. A Bernstein
vector of length ``n + 1`` represents ``sum_j c[j] B^n_j(x)`` with
``B^n_j(x) = binom(n, j) x**j (1 - x)**(n - j)``.
"""

from fractions import Fraction
from math import comb

import numpy as np

from .kernels import binom, node_polynomial_monomial
from .validation import check_degree, check_nodes


def bernstein_eval(n: int, j: int, x):
    """Evaluate ``B^n_j`` at ``x`` (scalar or array).

    Products of powers are used directly, so the endpoints give exact 0/1.
    """
    n = check_degree(n)
    if not 0 <= j <= n:
        raise IndexError(f"Bernstein index {j} out of range for degree {n}")
    x = np.asarray(x, dtype=float)
    return comb(n, j) * x**j * (1.0 - x) ** (n - j)


def bernstein_basis(n: int, x) -> np.ndarray:
    """Collocation matrix ``B[i, j] = B^n_j(x_i)``."""
    n = check_degree(n)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    j = np.arange(n + 1)
    coef = np.array([comb(n, k) for k in j], dtype=float)
    return coef * x[:, None] ** j * (1.0 - x[:, None]) ** (n - j)


def de_casteljau(coeffs, x):
    """Evaluate a Bernstein-form polynomial by de Casteljau's algorithm."""
    c = np.asarray(coeffs, dtype=float)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    work = np.broadcast_to(c, (x.size, c.size)).copy()
    s = x[:, None]
    for m in range(c.size - 1, 0, -1):
        work[:, :m] = (1.0 - s) * work[:, :m] + s * work[:, 1 : m + 1]
    out = work[:, 0]
    return out[0] if scalar else out


def bernstein_derivative(coeffs) -> np.ndarray:
    """Bernstein coefficients (degree ``n - 1``) of the derivative of a degree-``n`` polynomial."""
    c = np.asarray(coeffs, dtype=float)
    n = c.size - 1
    if n == 0:
        return np.zeros(1)
    return n * np.diff(c)


def monomial_to_bernstein(mono, degree: int | None = None):
    """Convert monomial coefficients to Bernstein coefficients of ``degree``.

    ``b_k = binom(N, k)^{-1} sum_{l <= k} binom(N - l, k - l) m_l`` with ``N``
    the target degree, which defaults to ``len(mono) - 1``. An object array of
    ints or Fractions is converted exactly; anything else goes through floats.
    """
    exact = isinstance(mono, np.ndarray) and mono.dtype == object
    m = list(mono) if exact else np.asarray(mono, dtype=float)
    N = len(m) - 1 if degree is None else check_degree(degree, name="degree")
    if len(m) - 1 > N:
        tail = m[N + 1 :]
        if any(t != 0 for t in tail):
            raise ValueError(f"polynomial has degree above target degree {N}")
        m = m[: N + 1]

    if exact:
        out = np.empty(N + 1, dtype=object)
        for k in range(N + 1):
            acc = sum((comb(N - l, k - l) * m[l] for l in range(min(k, len(m) - 1) + 1)), Fraction(0))
            out[k] = Fraction(acc) / comb(N, k)
        return out

    W = np.zeros((N + 1, len(m)))
    for k in range(N + 1):
        for l in range(min(k, len(m) - 1) + 1):
            W[k, l] = binom(N - l, k - l) / binom(N, k)
    return W @ m


def bernstein_to_monomial(coeffs) -> np.ndarray:
    """Inverse of :func:`monomial_to_bernstein` at the same degree."""
    c = np.asarray(coeffs, dtype=float)
    n = c.size - 1
    out = np.zeros(n + 1)
    for j in range(n + 1):
        for k in range(j, n + 1):
            out[k] += c[j] * comb(n, k) * comb(k, j) * (-1) ** (k - j)
    return out


def legendre_shifted_eval(j: int, x):
    """Legendre polynomial of degree ``j`` mapped to [0, 1], normalized to 1 at x = 1."""
    j = check_degree(j, name="j")
    y = 2.0 * np.asarray(x, dtype=float) - 1.0
    p_prev, p = np.ones_like(y), y
    if j == 0:
        return p_prev
    for k in range(1, j):
        p_prev, p = p, ((2 * k + 1) * y * p - k * p_prev) / (k + 1)
    return p


def legendre_shifted_monomial(j: int) -> np.ndarray:
    """Exact monomial coefficients of the shifted Legendre polynomial, as Fractions.

    Bonnet's recurrence on ``P_{k+1} = ((2k+1)(2x-1) P_k - k P_{k-1}) / (k+1)``.
    """
    j = check_degree(j, name="j")
    p_prev = [Fraction(1)]
    if j == 0:
        return np.array(p_prev, dtype=object)
    p = [Fraction(-1), Fraction(2)]
    for k in range(1, j):
        nxt = [Fraction(0)] * (k + 2)
        for i, a in enumerate(p):
            nxt[i] -= (2 * k + 1) * a
            nxt[i + 1] += 2 * (2 * k + 1) * a
        for i, a in enumerate(p_prev):
            nxt[i] -= k * a
        p_prev, p = p, [a / (k + 1) for a in nxt]
    return np.array(p, dtype=object)


def legendre_to_bernstein_matrix(n: int) -> np.ndarray:
    """Matrix ``T^n`` whose column ``j`` holds the degree-``n`` Bernstein coefficients of ``L^j``.

    Conversion is carried out in exact rational arithmetic and rounded once.
    """
    n = check_degree(n, maximum=30)
    T = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        T[:, j] = np.array(monomial_to_bernstein(legendre_shifted_monomial(j), degree=n), dtype=float)
    return T


def equispaced_nodes(n: int) -> np.ndarray:
    n = check_degree(n, minimum=1)
    return np.arange(n + 1) / n


def random_stratified_nodes(n: int, seed=None) -> np.ndarray:
    """Node ``j`` drawn uniformly from ``[j/(n+1), (j+1)/(n+1))``.

    ``seed`` may be anything accepted by :func:`numpy.random.default_rng`,
    including a caller-owned ``Generator``.
    """
    n = check_degree(n, minimum=1)
    rng = np.random.default_rng(seed)
    j = np.arange(n + 1)
    x = (j + rng.random(n + 1)) / (n + 1)
    # guard against (j + u)/(n + 1) rounding up onto the next stratum
    return np.minimum(x, np.nextafter((j + 1) / (n + 1), 0.0))


def node_polynomial_bernstein(nodes, method: str = "product") -> np.ndarray:
    """Degree-``n+1`` Bernstein coefficients of ``prod_i (x - x_i)``.

    ``"product"`` multiplies the linear factors directly in Bernstein form.
    ``"vieta"`` expands in monomials through the symmetric functions and
    converts; the conversion cancels heavily and loses roughly
    ``log10(binom(n+1, n//2)**2)`` digits.
    """
    x = np.asarray(nodes, dtype=float)
    if method == "vieta":
        mono = node_polynomial_monomial(x)
        return monomial_to_bernstein(mono, degree=mono.size - 1)
    if method != "product":
        raise ValueError(f"unknown method {method!r}")
    c = np.ones(1)
    for xi in x:
        c = bernstein_product(c, [-xi, 1.0 - xi])
    return c


def node_polynomial_derivatives(nodes) -> np.ndarray:
    """``prod_{i != j} (x_j - x_i)`` for each node ``x_j``."""
    x = np.asarray(nodes, dtype=float)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return np.prod(diff, axis=1)


def bernstein_product(p, q) -> np.ndarray:
    """Bernstein coefficients of the product of two Bernstein-form polynomials."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    a, b = p.size - 1, q.size - 1
    out = np.zeros(a + b + 1)
    for i in range(a + 1):
        for k in range(b + 1):
            out[i + k] += comb(a, i) * comb(b, k) / comb(a + b, i + k) * p[i] * q[k]
    return out


def lagrange_bernstein_coefficients(nodes) -> np.ndarray:
    """Column ``j`` holds the degree-``n`` Bernstein coefficients of the Lagrange polynomial ``l^{j,n}``."""
    x = check_nodes(nodes)
    n = x.size - 1
    dv = node_polynomial_derivatives(x)
    L = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        c = np.ones(1)
        for i in range(n + 1):
            if i != j:
                # x - x_i in degree-1 Bernstein form
                c = bernstein_product(c, [-x[i], 1.0 - x[i]])
        L[:, j] = c / dv[j]
    return L


def lagrange_l2_norms(nodes) -> np.ndarray:
    """``w_j = ||l^{j,n}||_{L^2(0,1)}`` through the Bernstein mass-matrix quadratic form."""
    from .conditioning import mass_matrix

    L = lagrange_bernstein_coefficients(nodes)
    M = mass_matrix(L.shape[0] - 1)
    return np.sqrt(np.einsum("ij,ik,kj->j", L, M, L))
