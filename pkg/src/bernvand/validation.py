"""Input validation shared by the solvers and estimators."""

import numbers

import numpy as np


class SingularMatrixError(np.linalg.LinAlgError):
    """Raised when a factorization meets an exactly zero pivot."""

    def __init__(self, pivot: int, message: str | None = None):
        self.pivot = pivot
        super().__init__(message or f"zero pivot at index {pivot}")


def check_degree(n, *, minimum: int = 0, maximum: int | None = None, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    if maximum is not None and n > maximum:
        raise ValueError(f"{name} must be <= {maximum}, got {n}")
    return n


def check_nodes(nodes, *, n: int | None = None) -> np.ndarray:
    """Validate a univariate node set and return it as a float array.

    Nodes must be finite, lie in ``[0, 1]`` and be strictly increasing.
    If ``n`` is given the set must hold exactly ``n + 1`` nodes.
    """
    x = np.asarray(nodes, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError(f"nodes must be a non-empty 1-D array, got shape {x.shape}")
    if n is not None and x.size != n + 1:
        raise ValueError(f"expected {n + 1} nodes for degree {n}, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValueError("nodes must be finite")
    if x[0] < 0.0 or x[-1] > 1.0 or np.any(x < 0.0) or np.any(x > 1.0):
        raise ValueError("nodes must lie in [0, 1]")
    if np.any(np.diff(x) <= 0.0):
        raise ValueError("nodes must be distinct and strictly increasing")
    return x


def check_vector(b, size: int, name: str = "b") -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if b.shape != (size,):
        raise ValueError(f"{name} must have shape ({size},), got {b.shape}")
    return b
