"""Structured matrices with fast products, plus small dense factorizations.

Toeplitz and Hankel products go through a circulant embedding zero-padded to a
power of two, so a product costs two real FFTs and one inverse FFT.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .validation import SingularMatrixError


def _next_pow2(m: int) -> int:
    return 1 << max(m - 1, 0).bit_length()


def _as_vector(x, size: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[0] != size:
        raise ValueError(f"dimension mismatch: operator has {size} columns, vector has {x.shape[0]} rows")
    return x


@dataclass(frozen=True)
class ToeplitzMatrix:
    """``T[i, j] = first_row[j - i]`` for ``j >= i`` and ``first_col[i - j]`` otherwise."""

    first_col: np.ndarray
    first_row: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.first_col, dtype=float)
        r = np.asarray(self.first_row, dtype=float)
        if c.ndim != 1 or c.shape != r.shape or c.size == 0:
            raise ValueError("first_col and first_row must be non-empty 1-D arrays of equal length")
        if c[0] != r[0]:
            raise ValueError("first_col[0] and first_row[0] must agree")
        object.__setattr__(self, "first_col", c)
        object.__setattr__(self, "first_row", r)

    @property
    def shape(self):
        return (self.first_col.size, self.first_col.size)

    def circulant_symbol(self, length: int) -> np.ndarray:
        N = self.first_col.size
        emb = np.zeros(length)
        emb[:N] = self.first_col
        emb[length - N + 1 :] = self.first_row[:0:-1]
        return np.fft.rfft(emb)

    def matvec(self, x) -> np.ndarray:
        N = self.first_col.size
        x = _as_vector(x, N)
        L = _next_pow2(2 * N - 1)
        sym = self.circulant_symbol(L)
        if x.ndim == 1:
            return np.fft.irfft(sym * np.fft.rfft(x, L), L)[:N]
        return np.fft.irfft(sym[:, None] * np.fft.rfft(x, L, axis=0), L, axis=0)[:N]

    __matmul__ = matvec

    def to_dense(self) -> np.ndarray:
        return scipy.linalg.toeplitz(self.first_col, self.first_row)


@dataclass(frozen=True)
class HankelMatrix:
    """``H[i, j] = anti_diagonals[i + j]``; ``anti_diagonals`` has length ``2N - 1``."""

    anti_diagonals: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.anti_diagonals, dtype=float)
        if a.ndim != 1 or a.size % 2 == 0:
            raise ValueError("anti_diagonals must be a 1-D array of odd length 2N - 1")
        object.__setattr__(self, "anti_diagonals", a)

    @property
    def shape(self):
        N = (self.anti_diagonals.size + 1) // 2
        return (N, N)

    def exchanged_toeplitz(self) -> ToeplitzMatrix:
        """The Toeplitz matrix ``T`` with ``H x = T reverse(x)``."""
        N = self.shape[0]
        a = self.anti_diagonals
        return ToeplitzMatrix(first_col=a[N - 1 :], first_row=a[N - 1 :: -1])

    def matvec(self, x) -> np.ndarray:
        x = _as_vector(x, self.shape[0])
        return self.exchanged_toeplitz().matvec(x[::-1])

    __matmul__ = matvec

    def to_dense(self) -> np.ndarray:
        N = self.shape[0]
        a = self.anti_diagonals
        return scipy.linalg.hankel(a[:N], a[N - 1 :])


@dataclass(frozen=True)
class DiagonalMatrix:
    diag: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag", np.asarray(self.diag, dtype=float))

    @property
    def shape(self):
        return (self.diag.size, self.diag.size)

    def matvec(self, x) -> np.ndarray:
        x = _as_vector(x, self.diag.size)
        return self.diag * x if x.ndim == 1 else self.diag[:, None] * x

    __matmul__ = matvec

    def inverse(self) -> "DiagonalMatrix":
        return DiagonalMatrix(1.0 / self.diag)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag)


def toeplitz_matvec_fft(T: ToeplitzMatrix, x) -> np.ndarray:
    return T.matvec(x)


def hankel_matvec_fft(H: HankelMatrix, x) -> np.ndarray:
    return H.matvec(x)


@dataclass(frozen=True)
class LUFactors:
    """``A[perm] = L @ U`` with ``L`` unit lower triangular."""

    L: np.ndarray
    U: np.ndarray
    perm: np.ndarray

    @property
    def P(self) -> np.ndarray:
        """Permutation matrix with ``P @ A = L @ U``."""
        n = self.perm.size
        P = np.zeros((n, n))
        P[np.arange(n), self.perm] = 1.0
        return P

    def solve(self, b) -> np.ndarray:
        b = np.asarray(b, dtype=float)
        y = scipy.linalg.solve_triangular(self.L, b[self.perm], lower=True, unit_diagonal=True)
        return scipy.linalg.solve_triangular(self.U, y, lower=False)


def _doolittle(A, pivot: bool):
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    perm = np.arange(n)
    for k in range(n):
        if pivot:
            p = k + int(np.argmax(np.abs(A[k:, k])))
            if p != k:
                A[[k, p]] = A[[p, k]]
                perm[[k, p]] = perm[[p, k]]
        if A[k, k] == 0.0:
            raise SingularMatrixError(k)
        A[k + 1 :, k] /= A[k, k]
        A[k + 1 :, k + 1 :] -= np.outer(A[k + 1 :, k], A[k, k + 1 :])
    L = np.tril(A, -1) + np.eye(n)
    U = np.triu(A)
    return L, U, perm


def lu_factor(A) -> LUFactors:
    """LU factorization with partial pivoting."""
    return LUFactors(*_doolittle(A, pivot=True))


def lu_solve(factors: LUFactors, b) -> np.ndarray:
    return factors.solve(b)


def lu_factor_nopivot(A) -> tuple[np.ndarray, np.ndarray]:
    """Doolittle LU without row exchanges; fails on the first zero pivot."""
    L, U, _ = _doolittle(A, pivot=False)
    return L, U


def condition_number_2(A) -> float:
    """Spectral condition number ``sigma_max / sigma_min``; ``inf`` when singular."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] == 0.0:
        return float("inf")
    return float(s[0] / s[-1])
