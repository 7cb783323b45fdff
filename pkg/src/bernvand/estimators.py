"""scikit-learn style wrappers around the interpolation solvers.

``BernsteinInterpolator`` fits the degree-``n`` Bernstein interpolant through
``n + 1`` samples on ``[0, 1]``; ``SimplexBernsteinInterpolator`` does the same
on the equispaced lattice of the reference simplex.
"""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .bases import de_casteljau
from .simplex import block_lu_solve, evaluate, lattice_size, _lattice
from .validation import check_nodes
from .vandermonde import Method, solve


def _check_unit_interval(X, n_features_in=None) -> np.ndarray:
    X = check_array(X, ensure_2d=True, dtype=np.float64)
    if X.shape[1] != 1:
        raise ValueError(f"expected a single feature, got {X.shape[1]}")
    if n_features_in is not None and X.shape[1] != n_features_in:
        raise ValueError("feature count changed since fit")
    return X[:, 0]


class BernsteinInterpolator(RegressorMixin, BaseEstimator):
    """Polynomial interpolation in the Bernstein basis.

    Parameters
    ----------
    method : {"lu", "bezout", "dft", "dft-equispaced"}
        Backend used to solve the Bernstein-Vandermonde system.
    """

    def __init__(self, method="lu"):
        self.method = method

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=np.float64, y_numeric=True)
        if X.shape[1] != 1:
            raise ValueError(f"expected a single feature, got {X.shape[1]}")
        method = Method(self.method)
        order = np.argsort(X[:, 0], kind="stable")
        nodes = check_nodes(X[order, 0])
        self.nodes_ = nodes
        self.degree_ = nodes.size - 1
        self.coef_ = solve(method, nodes, y[order])
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        x = _check_unit_interval(X, self.n_features_in_)
        return np.asarray(de_casteljau(self.coef_, x), dtype=float).reshape(-1)


class SimplexBernsteinInterpolator(RegressorMixin, BaseEstimator):
    """Interpolation on the equispaced lattice of the ``d``-simplex.

    ``X`` holds Cartesian coordinates ``alpha' / n`` of every lattice point, in
    any order; the degree is inferred from the number of samples.
    """

    def __init__(self, d=2, tol=1e-9):
        self.d = d
        self.tol = tol

    def _degree_for(self, count: int) -> int:
        n = 0
        while lattice_size(self.d, n) < count:
            n += 1
        if lattice_size(self.d, n) != count:
            raise ValueError(f"{count} samples do not fill a lattice on the {self.d}-simplex")
        return n

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=np.float64, y_numeric=True)
        if X.shape[1] != self.d:
            raise ValueError(f"expected {self.d} features, got {X.shape[1]}")
        n = self._degree_for(X.shape[0])
        scaled = X * n
        alpha = np.rint(scaled).astype(int)
        if np.max(np.abs(scaled - alpha), initial=0.0) > self.tol * max(n, 1) or np.any(alpha < 0):
            raise ValueError("samples are not on the equispaced lattice")
        pos = {beta[1:]: k for k, beta in enumerate(_lattice(self.d, n))}
        rhs = np.full(X.shape[0], np.nan)
        for row, a in enumerate(map(tuple, alpha)):
            k = pos.get(a)
            if k is None or not np.isnan(rhs[k]):
                raise ValueError(f"sample {row} is off the lattice or duplicated")
            rhs[k] = y[row]
        self.degree_ = n
        self.coef_ = block_lu_solve(self.d, n, rhs)
        self.n_features_in_ = self.d
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        bary = np.column_stack([1.0 - X.sum(axis=1), X])
        return evaluate(self.coef_, self.d, self.degree_, bary)
