"""scikit-learn style wrappers.

RSKTransformer maps contingency tables to tableau pairs and back.
RSKOperator holds the matrix of RSK on one weight space and applies it to
coefficient vectors written in the ordered table basis.  Arithmetic stays
exact: arrays use object dtype holding Python ints.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_table, check_tableau_pair, check_weight_pair
from .exceptions import InvalidInputError
from .operators import build_inverse, build_matrix
from .tableaux import inverse_rsk, rsk


def _tables(X):
    if isinstance(X, np.ndarray) and X.ndim == 2:
        X = [X]
    return [check_table(np.asarray(a).tolist()) for a in X]


class RSKTransformer(TransformerMixin, BaseEstimator):
    """Row-insertion RSK on a batch of nonnegative integer matrices.

    Parameters
    ----------
    n_rows, n_cols : int or None
        Size of the matrices produced by inverse_transform.  When None the
        largest size seen in fit is used.
    """

    def __init__(self, n_rows=None, n_cols=None):
        self.n_rows = n_rows
        self.n_cols = n_cols

    def fit(self, X, y=None):
        tables = _tables(X)
        if not tables:
            raise InvalidInputError("fit needs at least one table")
        self.n_rows_ = self.n_rows or max(len(a) for a in tables)
        self.n_cols_ = self.n_cols or max((len(a[0]) if a else 0) for a in tables)
        self.n_tables_ = len(tables)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_rows_")
        return [rsk(a) for a in _tables(X)]

    def inverse_transform(self, X):
        check_is_fitted(self, "n_rows_")
        out = []
        for pair in X:
            p, q = check_tableau_pair(*pair)
            out.append(np.array(inverse_rsk((p, q), self.n_rows_, self.n_cols_), dtype=object))
        return out


class RSKOperator(TransformerMixin, BaseEstimator):
    """RSK_{sigma,pi} (or its inverse) acting on coefficient vectors.

    transform takes an array of shape (n_samples, dim) whose rows are
    coordinates in basis_ and returns the coordinates of the images.
    predict takes contingency tables and returns the coordinates of
    their images, i.e. columns of the matrix.
    """

    def __init__(self, sigma=(1, 1), pi=(1, 1), inverse=False):
        self.sigma = sigma
        self.pi = pi
        self.inverse = inverse

    def fit(self, X=None, y=None):
        sigma, pi = check_weight_pair(self.sigma, self.pi)
        mat = build_matrix(sigma, pi)
        self.forward_ = mat
        self.basis_ = list(mat.basis)
        self.inverse_ = build_inverse(sigma, pi, matrix=mat)
        chosen = self.inverse_ if self.inverse else mat
        self.matrix_ = np.array(chosen.entries, dtype=object).reshape(mat.dim, mat.dim)
        self._back = np.array((mat if self.inverse else self.inverse_).entries, dtype=object).reshape(mat.dim, mat.dim)
        self.n_features_in_ = mat.dim
        return self

    def _coords(self, X):
        X = np.asarray(X, dtype=object)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.ndim != 2 or X.shape[1] != self.n_features_in_:
            raise InvalidInputError(
                f"expected shape (n_samples, {self.n_features_in_}), got {X.shape}")
        return X

    def transform(self, X):
        check_is_fitted(self, "matrix_")
        return self._coords(X).dot(self.matrix_.T)

    def inverse_transform(self, X):
        check_is_fitted(self, "matrix_")
        return self._coords(X).dot(self._back.T)

    def predict(self, X):
        check_is_fitted(self, "matrix_")
        index = {t: i for i, t in enumerate(self.basis_)}
        cols = []
        for a in _tables(X):
            if a not in index:
                raise InvalidInputError(f"table {a} is not in the weight space")
            cols.append(self.matrix_[:, index[a]])
        return np.array(cols, dtype=object).reshape(len(cols), self.n_features_in_)
