"""Correlation-family reconstructors."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from ..graph import pseudoinverse
from .base import BaseReconstructor, population_covariance, precision_to_partial_weights


class CorrelationReconstructor(BaseReconstructor):
    """Score node pairs by the Pearson correlation of their time series.

    Parameters
    ----------
    mode : {"absolute", "signed"}
        Whether to report |r| or the signed correlation.  Zero-variance
        rows score 0 against every partner.
    """

    method_name = "correlation"
    directed = False

    def __init__(self, mode: str = "absolute"):
        self.mode = mode

    def _reconstruct(self, values):
        if self.mode not in ("absolute", "signed"):
            raise ParameterError(f"mode must be 'absolute' or 'signed', got {self.mode!r}")
        cov = population_covariance(values)
        std = np.sqrt(np.diag(cov))
        w = np.zeros_like(cov)
        live = np.flatnonzero(std > 0.0)
        if live.size:
            block = cov[np.ix_(live, live)] / np.outer(std[live], std[live])
            w[np.ix_(live, live)] = np.clip(block, -1.0, 1.0)
        w = (w + w.T) / 2.0
        np.fill_diagonal(w, 0.0)
        if self.mode == "absolute":
            w = np.abs(w)
        return w, {}


class PartialCorrelationReconstructor(BaseReconstructor):
    """Score node pairs by partial correlation via the precision matrix.

    The precision matrix is the pseudoinverse of the population covariance,
    so rank-deficient covariances degrade gracefully instead of erroring.
    """

    method_name = "partial_correlation"
    directed = False

    def _reconstruct(self, values):
        theta = pseudoinverse(population_covariance(values))
        return precision_to_partial_weights(theta), {}
