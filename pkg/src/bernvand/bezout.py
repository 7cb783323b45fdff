"""Bernstein-Bezout matrices.

For ``v, w`` of degree ``n + 1`` given by Bernstein coefficients, ``Bez(v, w)`` is
the ``(n+1) x (n+1)`` matrix with

    (v(s) w(t) - v(t) w(s)) / (s - t) = sum_ij Bez[i, j] B^n_i(s) B^n_j(t).

Three constructions are provided: an O(n^2) recurrence, the O(n^3) closed form,
and a lazy operator built from Hankel, Toeplitz and diagonal factors.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .bases import bernstein_basis, bernstein_derivative, de_casteljau
from .kernels import binom
from .structured import DiagonalMatrix, HankelMatrix, ToeplitzMatrix


def _check_pair(v, w) -> tuple[np.ndarray, np.ndarray, int]:
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.ndim != 1 or v.shape != w.shape:
        raise ValueError(f"v and w must be 1-D of equal length, got {v.shape} and {w.shape}")
    if v.size < 2:
        raise ValueError("v and w need degree >= 1 (at least two coefficients)")
    return v, w, v.size - 2


def bezout_recurrence(v, w) -> np.ndarray:
    """Build ``Bez(v, w)`` in O(n^2) from

        b[i, j] = (j (n - i) b[i+1, j-1] + (n+1)^2 (v[i+1] w[j] - v[j] w[i+1]))
                  / ((i + 1) (n - j + 1))

    Column 0 and row n need no earlier entries (their first term carries a zero
    weight); each later column reads only the column before it. Only the lower
    triangle is swept and the upper one is copied from it: ``Bez`` is
    symmetric, and above the diagonal the recurrence accumulates generator
    terms that cancel in pairs, losing digits to roundoff.
    """
    v, w, n = _check_pair(v, w)
    B = np.zeros((n + 2, n + 1))  # row n+1 is the zero-weighted out-of-range term
    for j in range(n + 1):
        i = np.arange(j, n + 1)
        gen = (n + 1) ** 2 * (v[i + 1] * w[j] - v[j] * w[i + 1])
        carry = j * (n - i) * B[i + 1, j - 1] if j > 0 else 0.0
        B[i, j] = (carry + gen) / ((i + 1) * (n - j + 1))
    B = B[: n + 1]
    return np.tril(B) + np.tril(B, -1).T


def bezout_closed_form(v, w) -> np.ndarray:
    """Entrywise closed form, O(n^3); an independent check on the recurrence.

    Evaluated on the lower triangle, where the summation range has no pairs of
    cancelling terms, and mirrored.
    """
    v, w, n = _check_pair(v, w)
    B = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        for j in range(i + 1):
            acc = 0.0
            for k in range(min(j, n - i) + 1):
                a, b = i + k + 1, j - k
                acc += comb(n + 1, a) * comb(n + 1, b) * (v[a] * w[b] - v[b] * w[a])
            B[i, j] = B[j, i] = acc / (comb(n, i) * comb(n, j))
    return B


def _hankel_factor(u, n) -> HankelMatrix:
    # H[i, j] = binom(n+1, i+j+1) u[i+j+1], zero once i + j >= n + 1
    a = np.zeros(2 * n + 1)
    for s in range(n + 1):
        a[s] = binom(n + 1, s + 1) * u[s + 1]
    return HankelMatrix(a)


def _toeplitz_factor(u, n) -> ToeplitzMatrix:
    # T[i, j] = binom(n+1, j-i) u[j-i], upper triangular
    row = np.array([binom(n + 1, k) * u[k] for k in range(n + 1)])
    col = np.zeros(n + 1)
    col[0] = row[0]
    return ToeplitzMatrix(first_col=col, first_row=row)


@dataclass(frozen=True)
class BezoutOperator:
    """``Delta^{-1} [H^v T^w - H^w T^v] Delta^{-1}`` applied without forming the product."""

    delta_inv: DiagonalMatrix
    Hv: HankelMatrix
    Tw: ToeplitzMatrix
    Hw: HankelMatrix
    Tv: ToeplitzMatrix

    @property
    def shape(self):
        return self.delta_inv.shape

    def matvec(self, x) -> np.ndarray:
        y = self.delta_inv @ np.asarray(x, dtype=float)
        return self.delta_inv @ (self.Hv @ (self.Tw @ y) - self.Hw @ (self.Tv @ y))

    __matmul__ = matvec

    def to_dense(self) -> np.ndarray:
        Di = self.delta_inv.to_dense()
        core = self.Hv.to_dense() @ self.Tw.to_dense() - self.Hw.to_dense() @ self.Tv.to_dense()
        return Di @ core @ Di


def bezout_factored(v, w) -> BezoutOperator:
    v, w, n = _check_pair(v, w)
    delta = np.array([comb(n, j) for j in range(n + 1)], dtype=float)
    return BezoutOperator(
        delta_inv=DiagonalMatrix(1.0 / delta),
        Hv=_hankel_factor(v, n),
        Tw=_toeplitz_factor(w, n),
        Hw=_hankel_factor(w, n),
        Tv=_toeplitz_factor(v, n),
    )


def bezout_bilinear(bez, s, t) -> float:
    """``b^n(s)^T Bez b^n(t)``."""
    bez = np.asarray(bez)
    n = bez.shape[0] - 1
    return float(bernstein_basis(n, s)[0] @ bez @ bernstein_basis(n, t)[0])


def bezout_kernel(v, w, s, t) -> float:
    """``(v(s) w(t) - v(t) w(s)) / (s - t)`` for ``s != t``, or its diagonal limit."""
    if s == t:
        dv = de_casteljau(bernstein_derivative(v), t)
        dw = de_casteljau(bernstein_derivative(w), t)
        return float(dv * de_casteljau(w, t) - de_casteljau(v, t) * dw)
    vs, vt = de_casteljau(v, s), de_casteljau(v, t)
    ws, wt = de_casteljau(w, s), de_casteljau(w, t)
    return float((vs * wt - vt * ws) / (s - t))
