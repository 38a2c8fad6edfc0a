"""Information-theoretic reconstructors: mutual information and transfer entropy."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from .base import BaseReconstructor

_LOG2 = np.log(2.0)


def _discretize_rows(values: np.ndarray, bins: int) -> np.ndarray:
    """Per-row equal-width binning over each row's own [min, max] range.

    Constant rows collapse to a single symbol.
    """
    n, length = values.shape
    symbols = np.zeros((n, length), dtype=np.int64)
    for i in range(n):
        row = values[i]
        lo, hi = row.min(), row.max()
        if hi > lo:
            scaled = (row - lo) * (bins / (hi - lo))
            symbols[i] = np.clip(scaled.astype(np.int64), 0, bins - 1)
    return symbols


def _entropy_bits(counts: np.ndarray) -> float:
    total = counts.sum()
    probs = counts[counts > 0] / total
    return float(-(probs * np.log(probs)).sum() / _LOG2)


def _pair_mi_bits(sym_a: np.ndarray, sym_b: np.ndarray, bins: int) -> float:
    joint = np.bincount(sym_a * bins + sym_b, minlength=bins * bins)
    joint = joint.reshape(bins, bins)
    h_a = _entropy_bits(joint.sum(axis=1))
    h_b = _entropy_bits(joint.sum(axis=0))
    h_ab = _entropy_bits(joint.ravel())
    return max(h_a + h_b - h_ab, 0.0)


class MutualInformationReconstructor(BaseReconstructor):
    """Plug-in mutual information (bits) between per-row discretized series.

    Each row is discretized independently into ``bins`` equal-width bins
    over its own range, so the scores are invariant under per-row affine
    maps with positive slope.
    """

    method_name = "mutual_information"
    directed = False

    def __init__(self, bins: int = 8):
        self.bins = bins

    def _reconstruct(self, values):
        bins = int(self.bins)
        if bins < 2:
            raise ParameterError(f"bins must be >= 2, got {self.bins}")
        n = values.shape[0]
        symbols = _discretize_rows(values, bins)
        w = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                mi = _pair_mi_bits(symbols[i], symbols[j], bins)
                w[i, j] = mi
                w[j, i] = mi
        return w, {}


class TransferEntropyReconstructor(BaseReconstructor):
    """Pairwise transfer entropy (bits) on median-binarized series, history 1.

    Rows are binarized at their own median (strictly above -> 1; constant
    rows -> all 0).  weights[i][j] estimates how much node i's present
    state reduces the uncertainty of node j's next state beyond node j's
    own present state.
    """

    method_name = "transfer_entropy"
    directed = True

    def _reconstruct(self, values):
        n = values.shape[0]
        binary = np.empty_like(values, dtype=np.int64)
        for i in range(n):
            binary[i] = values[i] > np.median(values[i])
        w = np.zeros((n, n))
        for j in range(n):
            target_next = binary[j, 1:]
            target_now = binary[j, :-1]
            base = 4 * target_next + 2 * target_now
            for i in range(n):
                if i == j:
                    continue
                w[i, j] = self._te_bits(base + binary[i, :-1])
        return w, {}

    @staticmethod
    def _te_bits(cells: np.ndarray) -> float:
        # cells encode (target_next, target_now, source_now) as 4a + 2b + c
        joint = np.bincount(cells, minlength=8).reshape(2, 2, 2).astype(float)
        p_abc = joint / joint.sum()
        p_bc = p_abc.sum(axis=0)
        p_ab = p_abc.sum(axis=2)
        p_b = p_abc.sum(axis=(0, 2))
        # term-by-term so zero-count cells (and their marginals) stay silent
        te = 0.0
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    pj = p_abc[a, b, c]
                    if pj > 0:
                        te += pj * np.log((pj * p_b[b]) / (p_bc[b, c] * p_ab[a, b]))
        return max(float(te / _LOG2), 0.0)
