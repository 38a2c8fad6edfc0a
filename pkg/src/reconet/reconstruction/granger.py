"""Pairwise Granger causality scores from autoregressive fits."""

from __future__ import annotations

import numpy as np

from ..errors import InsufficientDataError, ParameterError
from .base import BaseReconstructor

_RSS_FLOOR = 1e-300


def _lag_block(row: np.ndarray, order: int) -> np.ndarray:
    """Design block of lagged values; column k-1 holds lag k."""
    length = row.size
    return np.column_stack([row[order - k: length - k] for k in range(1, order + 1)])


def _fit_rss(design: np.ndarray, target: np.ndarray) -> tuple[float, bool]:
    """Least-squares residual sum of squares and a full-rank flag."""
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    resid = target - design @ coef
    return float(resid @ resid), rank == design.shape[1]


class GrangerCausalityReconstructor(BaseReconstructor):
    """Directed log-likelihood-ratio scores from nested AR regressions.

    For each ordered pair (i, j), row j is regressed on its own ``order``
    lags (restricted) and additionally on row i's lags (full), both with
    an intercept, over timesteps t = order .. L-1.  The score is
    max(0, ln(RSS_restricted / RSS_full)); rank-deficient designs score 0.
    """

    method_name = "granger"
    directed = True

    def __init__(self, order: int = 1):
        self.order = order

    def _reconstruct(self, values):
        order = int(self.order)
        if order < 1:
            raise ParameterError(f"lag order must be >= 1, got {self.order}")
        n, length = values.shape
        if length <= 3 * order + 3:
            raise InsufficientDataError(
                f"granger with order {order} needs more than {3 * order + 3} "
                f"timesteps, got {length}")
        rows = np.arange(order, length)
        intercept = np.ones((rows.size, 1))
        lag_blocks = [_lag_block(values[i], order) for i in range(n)]
        targets = [values[j, order:] for j in range(n)]

        restricted_rss = np.empty(n)
        restricted_ok = np.empty(n, dtype=bool)
        restricted_designs = []
        for j in range(n):
            design = np.hstack([intercept, lag_blocks[j]])
            restricted_designs.append(design)
            restricted_rss[j], restricted_ok[j] = _fit_rss(design, targets[j])

        w = np.zeros((n, n))
        for j in range(n):
            if not restricted_ok[j]:
                continue
            for i in range(n):
                if i == j:
                    continue
                full = np.hstack([restricted_designs[j], lag_blocks[i]])
                rss_full, ok = _fit_rss(full, targets[j])
                if not ok:
                    continue
                ratio = max(restricted_rss[j], _RSS_FLOOR) / max(rss_full, _RSS_FLOOR)
                w[i, j] = max(0.0, float(np.log(ratio)))
        return w, {}
