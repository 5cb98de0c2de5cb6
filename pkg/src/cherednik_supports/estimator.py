"""Estimator-style wrapper: rows of multipartitions in, ``(p, q)`` out."""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .charged_fock import FockParam, GenericKappa
from .partitions import Multipartition, PartitionError, make_partition, parse
from .supports import support


def check_param(kappa, charges, h=None) -> FockParam:
    """Build a parameter, accepting strings such as ``"-1/2"`` or ``"generic-neg"``."""
    if isinstance(kappa, str) and kappa.startswith("generic"):
        kappa = GenericKappa(-1 if kappa == "generic-neg" else 1)
    elif isinstance(kappa, str):
        kappa = Fraction(kappa)
    if charges is None:
        if h is None:
            raise ValueError("charges are required")
        charges = (0,) * len(h)
    return FockParam(kappa, tuple(charges), None if h is None else tuple(h))


def check_multipartition(x, ell: int) -> Multipartition:
    if isinstance(x, str):
        mp = parse(x)
    else:
        try:
            mp = tuple(make_partition(part) for part in x)
        except TypeError:
            raise ValueError(f"cannot read {x!r} as a multipartition")
    if len(mp) != ell:
        raise ValueError(f"expected {ell} components, got {len(mp)} in {x!r}")
    return mp


def check_multipartitions(X, ell: int) -> list[Multipartition]:
    """Validate a 1-d batch of labels (strings like ``"1|2"`` or nested sequences)."""
    if isinstance(X, (str, bytes)):
        raise ValueError("expected a sequence of labels, got a single string")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        X = X.tolist()
    out = []
    for row, x in enumerate(X):
        try:
            out.append(check_multipartition(x, ell))
        except (PartitionError, ValueError) as exc:
            raise ValueError(f"row {row}: {exc}") from exc
    return out


class SupportTransformer(TransformerMixin, BaseEstimator):
    """Map each label to its support invariants.

    ``transform`` returns an integer array with columns ``p, q``;
    ``predict`` returns whether the simple module is finite-dimensional.
    """

    def __init__(self, kappa="-1/2", charges=(0, -4), h=None):
        self.kappa = kappa
        self.charges = charges
        self.h = h

    def fit(self, X=None, y=None):
        self.param_ = check_param(self.kappa, self.charges, self.h)
        self.n_components_ = self.param_.ell
        if X is not None:
            check_multipartitions(X, self.n_components_)
        return self

    def _supports(self, X):
        check_is_fitted(self, "param_")
        return [support(mp, self.param_) for mp in check_multipartitions(X, self.n_components_)]

    def transform(self, X):
        rows = [(r.p, r.q) for r in self._supports(X)]
        return np.array(rows, dtype=np.int64).reshape(len(rows), 2)

    def predict(self, X):
        return np.array([r.finite_dim for r in self._supports(X)], dtype=bool)

    def get_feature_names_out(self, input_features=None):
        return np.array(["p", "q"], dtype=object)
