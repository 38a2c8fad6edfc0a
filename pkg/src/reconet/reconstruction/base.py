"""Shared machinery for network reconstructors.

Reconstructors follow the scikit-learn estimator protocol: construct with
hyperparameters, call ``fit`` with an (n_nodes, n_timesteps) matrix (rows
are nodes), then read the fitted ``weights_`` / ``result_`` attributes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, ClassVar

import numpy as np
from sklearn.base import BaseEstimator

from ..dynamics import TimeSeriesMatrix
from ..errors import InsufficientDataError, ParameterError

MIN_TIMESTEPS = 10


@dataclass(frozen=True)
class ReconstructionResult:
    """Pairwise edge scores inferred from a time series.

    ``weights[i][j]`` scores the influence i -> j for directed methods;
    symmetric methods fill both triangles identically.  The diagonal is
    zero and all entries are finite.
    """

    method: str
    weights: np.ndarray
    directed: bool
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ParameterError(f"weights must be square, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ParameterError("weights contain non-finite entries")
        if np.any(np.diag(w) != 0.0):
            raise ParameterError("weights must have a zero diagonal")
        if not self.directed and w.size and np.max(np.abs(w - w.T)) > 1e-10:
            raise ParameterError("undirected weights must be symmetric within 1e-10")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "params", dict(self.params))

    @property
    def n(self) -> int:
        return self.weights.shape[0]


def validate_time_series(ts, min_steps: int = MIN_TIMESTEPS) -> np.ndarray:
    """Coerce a TimeSeriesMatrix or array into a validated (N, L) float matrix."""
    values = ts.values if isinstance(ts, TimeSeriesMatrix) else np.asarray(ts, dtype=float)
    if values.ndim != 2 or values.shape[0] < 1:
        raise ParameterError(f"time series must be a 2-d (nodes, timesteps) matrix, "
                             f"got shape {values.shape}")
    if not np.all(np.isfinite(values)):
        raise ParameterError("time series contains non-finite entries")
    if values.shape[1] < min_steps:
        raise InsufficientDataError(
            f"need at least {min_steps} timesteps, got {values.shape[1]}")
    return np.array(values, dtype=float)


def population_covariance(values: np.ndarray) -> np.ndarray:
    """Empirical covariance with 1/L normalization, symmetrized exactly."""
    centered = values - values.mean(axis=1, keepdims=True)
    cov = (centered @ centered.T) / values.shape[1]
    return (cov + cov.T) / 2.0


def precision_to_partial_weights(theta: np.ndarray) -> np.ndarray:
    """Map a precision matrix to partial-correlation-style edge weights.

    weights[i][j] = -theta_ij / sqrt(theta_ii * theta_jj), with 0 whenever
    the diagonal product is not positive (degenerate guard).
    """
    d = np.diag(theta)
    dd = np.outer(d, d)
    safe = dd > 0.0
    w = np.where(safe, -theta / np.sqrt(np.where(safe, dd, 1.0)), 0.0)
    np.fill_diagonal(w, 0.0)
    return (w + w.T) / 2.0


class BaseReconstructor(BaseEstimator):
    """Base class; subclasses implement ``_reconstruct`` and set the class tags."""

    method_name: ClassVar[str] = ""
    directed: ClassVar[bool] = False

    def fit(self, ts, y=None):
        """Infer pairwise edge scores from an (n_nodes, n_timesteps) matrix."""
        values = validate_time_series(ts)
        weights, extras = self._reconstruct(values)
        params: dict[str, Any] = dict(self.get_params())
        params.update(extras)
        self.result_ = ReconstructionResult(
            method=self.method_name, weights=weights,
            directed=self.directed, params=params)
        self.weights_ = self.result_.weights
        self.n_nodes_ = self.result_.n
        return self

    def fit_result(self, ts) -> ReconstructionResult:
        """Convenience: fit and return the ReconstructionResult."""
        return self.fit(ts).result_

    def _reconstruct(self, values: np.ndarray) -> tuple[np.ndarray, dict[str, Any]]:
        raise NotImplementedError
