"""scikit-learn style wrappers so flattening composes with pipelines.

Inputs may be :class:`Diagram` objects, PD / Gauss / JSON text, or JSON-like
dicts; :func:`check_diagrams` normalizes them.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .diagram import Diagram, from_json, load_diagram
from .flatten import flatten
from .invariants import writhe
from .seifert import analyze

__all__ = ["FEATURES", "SeifertAnalyzer", "SeifertFlattener", "check_diagram", "check_diagrams"]


def check_diagram(x) -> Diagram:
    if isinstance(x, Diagram):
        return x
    if isinstance(x, str):
        return load_diagram(x)
    if isinstance(x, Mapping):
        return from_json(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a knot diagram")


def check_diagrams(X) -> list[Diagram]:
    """Validate a batch; a single diagram or string is rejected to avoid silent iteration."""
    if isinstance(X, (Diagram, str, Mapping)):
        raise ValueError("expected a sequence of diagrams, got a single diagram")
    if isinstance(X, np.ndarray):
        X = X.ravel().tolist()
    if not isinstance(X, Iterable):
        raise TypeError("expected an iterable of diagrams")
    out = [check_diagram(x) for x in X]
    if not out:
        raise ValueError("found 0 diagrams; at least 1 is required")
    return out


class SeifertFlattener(TransformerMixin, BaseEstimator):
    """Transform diagrams into equivalent ones with pairwise disjoint Seifert disks.

    Parameters
    ----------
    keep_intermediates : bool
        Keep every intermediate diagram in the reports.
    return_reports : bool
        If true, ``transform`` returns ``(diagram, FlattenReport)`` pairs.
    """

    def __init__(self, keep_intermediates=False, return_reports=False):
        self.keep_intermediates = keep_intermediates
        self.return_reports = return_reports

    def fit(self, X, y=None):
        check_diagrams(X)
        self.n_features_in_ = 1
        self.is_fitted_ = True
        return self

    def transform(self, X):
        check_is_fitted(self, "is_fitted_")
        out = []
        for d in check_diagrams(X):
            final, report = flatten(d, keep_intermediates=self.keep_intermediates)
            out.append((final, report) if self.return_reports else final)
        return out


FEATURES = ("crossings", "circuits", "genus", "nested_circuits", "nested_crossings",
            "max_depth", "writhe", "disjoint_disks")


class SeifertAnalyzer(TransformerMixin, BaseEstimator):
    """Map diagrams to a numeric feature matrix of Seifert data (columns: ``FEATURES``)."""

    def fit(self, X, y=None):
        check_diagrams(X)
        self.n_features_in_ = 1
        self.feature_names_out_ = np.array(FEATURES, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        rows = []
        for d in check_diagrams(X):
            an = analyze(d)
            rows.append([
                d.n_crossings,
                len(an.circuits),
                an.genus,
                len(an.nested),
                an.nested_sum,
                max(an.forest.depth.values()),
                writhe(d),
                int(an.disjoint),
            ])
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_
