"""Combinatorial scalars: binomials, signed Stirling numbers, symmetric functions.

Tables are stored in double precision. Binomials from Pascal's rule are exact
integers up to ``n = 56``; Stirling numbers of the first kind leave the exact
integer range of a double above ``n = 18``.
"""

from math import comb

import numpy as np

MAX_BINOMIAL_N = 64
MAX_STIRLING_N = 32


def binom(n: int, k: int) -> float:
    """Binomial coefficient with the convention ``binom(n, k) = 0`` off the triangle."""
    if k < 0 or n < 0 or k > n:
        return 0.0
    return float(comb(n, k))


def binomial_table(max_n: int) -> np.ndarray:
    """Lower-triangular table ``C[i, j] = binom(i, j)`` built by Pascal's rule.

    Entries with ``j > i`` are zero.
    """
    if not 0 <= max_n <= MAX_BINOMIAL_N:
        raise ValueError(f"max_n must lie in [0, {MAX_BINOMIAL_N}], got {max_n}")
    C = np.zeros((max_n + 1, max_n + 1))
    C[:, 0] = 1.0
    for i in range(1, max_n + 1):
        C[i, 1 : i + 1] = C[i - 1, : i] + C[i - 1, 1 : i + 1]
    return C


def stirling_numbers(n: int) -> list[int]:
    """Exact ``s(n, k)`` for ``k = 0 .. n`` as Python integers."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    row = [1]
    for i in range(n):
        nxt = [0] * (len(row) + 1)
        for k, a in enumerate(row):
            nxt[k + 1] += a
            nxt[k] -= i * a
        row = nxt
    return row


def stirling_table(max_n: int) -> np.ndarray:
    """Signed Stirling numbers of the first kind, ``S[i, k] = s(i, k)``.

    Uses ``s(i+1, k) = s(i, k-1) - i s(i, k)`` so that
    ``x (x-1) ... (x-i+1) = sum_k s(i, k) x**k``. The recurrence runs on
    integers, so entries beyond ``2**53`` are still correctly rounded.
    """
    if not 0 <= max_n <= MAX_STIRLING_N:
        raise ValueError(f"max_n must lie in [0, {MAX_STIRLING_N}], got {max_n}")
    S = np.zeros((max_n + 1, max_n + 1))
    for i in range(max_n + 1):
        S[i, : i + 1] = [float(a) for a in stirling_numbers(i)]
    return S


def elementary_symmetric(nodes) -> np.ndarray:
    """Elementary symmetric functions ``sigma_0, ..., sigma_{n+1}`` of ``n + 1`` nodes.

    Built by multiplying in one linear factor at a time, O(n^2).
    """
    x = np.asarray(nodes, dtype=float).ravel()
    sigma = np.zeros(x.size + 1)
    sigma[0] = 1.0
    for count, xi in enumerate(x, start=1):
        sigma[1 : count + 1] += xi * sigma[:count]
    return sigma


def node_polynomial_monomial(nodes) -> np.ndarray:
    """Monomial coefficients of ``prod_i (x - x_i)``, lowest degree first.

    The coefficient of ``x**k`` is ``(-1)**(n-k+1) * sigma_{n-k+1}``.
    """
    sigma = elementary_symmetric(nodes)
    deg = sigma.size - 1
    k = np.arange(deg + 1)
    return (-1.0) ** (deg - k) * sigma[deg - k]
