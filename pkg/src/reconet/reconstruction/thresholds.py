"""Turn pairwise edge scores into a graph by thresholding."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError, UnknownMethodError
from ..graph import Graph
from .base import ReconstructionResult

__all__ = [
    "ThresholdSpec",
    "parse_threshold_spec",
    "threshold_top_k",
    "threshold_quantile",
    "threshold_absolute",
    "threshold_target_degree",
    "apply_threshold",
]

_KINDS = ("quantile", "abs", "degree")


@dataclass(frozen=True)
class ThresholdSpec:
    """A thresholding rule: kind in {"quantile", "abs", "degree"} plus its value."""

    kind: str
    value: float

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnknownMethodError(
                f"unknown threshold kind {self.kind!r}; valid kinds: {', '.join(_KINDS)}")
        if not math.isfinite(self.value):
            raise ParameterError("threshold value must be finite")


def parse_threshold_spec(text: str) -> ThresholdSpec:
    """Parse "quantile:q", "abs:tau", or "degree:k"."""
    kind, sep, raw = text.partition(":")
    if not sep or not raw:
        raise ParameterError(
            f"threshold spec must look like kind:value, got {text!r}")
    if kind not in _KINDS:
        raise UnknownMethodError(
            f"unknown threshold kind {kind!r}; valid kinds: {', '.join(_KINDS)}")
    try:
        value = float(raw)
    except ValueError:
        raise ParameterError(f"threshold value must be numeric, got {raw!r}") from None
    return ThresholdSpec(kind, value)


def _candidate_pairs(result: ReconstructionResult) -> tuple[np.ndarray, np.ndarray]:
    n = result.n
    if result.directed:
        rows, cols = np.nonzero(~np.eye(n, dtype=bool))
    else:
        rows, cols = np.triu_indices(n, k=1)
    return rows, cols


def _graph_from_pairs(result: ReconstructionResult,
                      rows: np.ndarray, cols: np.ndarray) -> Graph:
    w = np.zeros((result.n, result.n))
    w[rows, cols] = 1.0
    if not result.directed:
        w[cols, rows] = 1.0
    return Graph(w, directed=result.directed)


def _top_pairs(result: ReconstructionResult, keep: int) -> tuple[np.ndarray, np.ndarray]:
    """The ``keep`` strongest candidate pairs, zero-weight pairs excluded.

    Ties at the cut magnitude break by (row, col) lexicographic order,
    keeping earlier pairs.
    """
    rows, cols = _candidate_pairs(result)
    strength = np.abs(result.weights[rows, cols])
    order = np.lexsort((cols, rows, -strength))
    chosen = order[:keep]
    chosen = chosen[strength[chosen] > 0.0]
    return rows[chosen], cols[chosen]


def threshold_top_k(result: ReconstructionResult, k: int) -> Graph:
    """Keep exactly the k strongest pairs (fewer if some of them weigh zero)."""
    if k < 0:
        raise ParameterError(f"kept pair count must be >= 0, got {k}")
    return _graph_from_pairs(result, *_top_pairs(result, int(k)))


def threshold_quantile(result: ReconstructionResult, q: float) -> Graph:
    """Keep the ceil(q * P) largest |weight| pairs among the P candidates."""
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"kept fraction must lie in [0, 1], got {q}")
    n_candidates = _candidate_pairs(result)[0].size
    keep = math.ceil(q * n_candidates)
    return _graph_from_pairs(result, *_top_pairs(result, keep))


def threshold_absolute(result: ReconstructionResult, tau: float) -> Graph:
    """Keep pairs with |weight| strictly above tau."""
    if not (math.isfinite(tau) and tau >= 0.0):
        raise ParameterError(f"cutoff must be >= 0, got {tau}")
    rows, cols = _candidate_pairs(result)
    hit = np.abs(result.weights[rows, cols]) > tau
    return _graph_from_pairs(result, rows[hit], cols[hit])


def threshold_target_degree(result: ReconstructionResult, k_avg: float) -> Graph:
    """Keep the strongest pairs so the mean degree approaches k_avg."""
    if not (math.isfinite(k_avg) and k_avg > 0.0):
        raise ParameterError(f"target mean degree must be > 0, got {k_avg}")
    n_candidates = _candidate_pairs(result)[0].size
    wanted = k_avg * result.n / (2.0 if not result.directed else 1.0)
    q = min(1.0, wanted / n_candidates)
    keep = min(math.ceil(q * n_candidates), n_candidates)
    return _graph_from_pairs(result, *_top_pairs(result, keep))


def apply_threshold(result: ReconstructionResult, spec: ThresholdSpec) -> Graph:
    """Dispatch a ThresholdSpec onto the matching threshold function."""
    if spec.kind == "quantile":
        return threshold_quantile(result, spec.value)
    if spec.kind == "abs":
        return threshold_absolute(result, spec.value)
    return threshold_target_degree(result, spec.value)
