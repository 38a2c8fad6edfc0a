"""Score reconstructed edge weights against a ground-truth graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.stats import rankdata

from .errors import PreconditionError, SizeMismatchError
from .graph import Graph
from .reconstruction import (
    ReconstructionResult,
    ThresholdSpec,
    apply_threshold,
    threshold_top_k,
)

__all__ = [
    "EdgeScoreReport",
    "AucScore",
    "symmetrize_result",
    "auc_score",
    "confusion_at_threshold",
    "score_reconstruction",
]


@dataclass(frozen=True)
class EdgeScoreReport:
    """Confusion counts, threshold metrics, and ranking AUC for one method.

    Counts partition the C(N, 2) unordered candidate pairs.  Ratios use the
    0/0 -> 0 convention.  ``auc_degenerate`` marks truths with zero or all
    edges, where the AUC defaults to 0.5.
    """

    tp: int
    fp: int
    fn: int
    tn: int
    precision: float
    recall: float
    f1: float
    auc: float
    auc_degenerate: bool = False
    notes: tuple[str, ...] = ()


class AucScore(NamedTuple):
    value: float
    degenerate: bool


def _safe_ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def symmetrize_result(result: ReconstructionResult) -> ReconstructionResult:
    """Collapse a directed score matrix to undirected by max(|w_ij|, |w_ji|)."""
    if not result.directed:
        return result
    w = np.maximum(np.abs(result.weights), np.abs(result.weights.T))
    np.fill_diagonal(w, 0.0)
    return ReconstructionResult(method=result.method, weights=w,
                                directed=False, params=result.params)


def _check_truth(truth: Graph) -> None:
    if truth.directed:
        raise PreconditionError("evaluation expects an undirected ground truth")


def auc_score(truth: Graph, result: ReconstructionResult) -> AucScore:
    """Rank-based AUC of symmetrized |weights| over unordered node pairs.

    Mann-Whitney with average ranks for ties, so constant weights score
    exactly 0.5.  Degenerate truths (no positives or no negatives) return
    0.5 with the degenerate flag set.
    """
    _check_truth(truth)
    if truth.n != result.n:
        raise SizeMismatchError(
            f"truth has {truth.n} nodes but weights have {result.n}")
    iu = np.triu_indices(truth.n, k=1)
    scores = np.maximum(np.abs(result.weights), np.abs(result.weights.T))[iu]
    positives = truth.weights[iu] != 0.0
    n_pos = int(positives.sum())
    n_neg = positives.size - n_pos
    if n_pos == 0 or n_neg == 0:
        return AucScore(0.5, True)
    ranks = rankdata(scores)
    u_stat = ranks[positives].sum() - n_pos * (n_pos + 1) / 2.0
    return AucScore(float(u_stat / (n_pos * n_neg)), False)


def confusion_at_threshold(truth: Graph, result: ReconstructionResult,
                           thresholded: Graph) -> EdgeScoreReport:
    """Compare the unordered edge sets of a thresholded graph and the truth."""
    _check_truth(truth)
    if thresholded.directed:
        raise PreconditionError(
            "confusion expects an undirected thresholded graph; symmetrize first")
    if truth.n != result.n or truth.n != thresholded.n:
        raise SizeMismatchError("truth, weights, and thresholded graph must share "
                                f"a node count, got {truth.n}/{result.n}/{thresholded.n}")
    true_edges = truth.edge_set()
    pred_edges = thresholded.edge_set()
    n_pairs = truth.n * (truth.n - 1) // 2
    tp = len(true_edges & pred_edges)
    fp = len(pred_edges - true_edges)
    fn = len(true_edges - pred_edges)
    tn = n_pairs - tp - fp - fn
    precision = _safe_ratio(tp, tp + fp)
    recall = _safe_ratio(tp, tp + fn)
    f1 = _safe_ratio(2 * precision * recall, precision + recall)
    auc = auc_score(truth, result)
    return EdgeScoreReport(tp=tp, fp=fp, fn=fn, tn=tn,
                           precision=precision, recall=recall, f1=f1,
                           auc=auc.value, auc_degenerate=auc.degenerate)


def score_reconstruction(truth: Graph, result: ReconstructionResult,
                         threshold: ThresholdSpec | None = None) -> EdgeScoreReport:
    """Symmetrize, threshold, and score a reconstruction in one call.

    Without an explicit threshold the kept-edge count matches the truth's
    density (quantile thresholding at the true edge count).
    """
    _check_truth(truth)
    if truth.n != result.n:
        raise SizeMismatchError(
            f"truth has {truth.n} nodes but weights have {result.n}")
    sym = symmetrize_result(result)
    notes: list[str] = []
    keep: int | None = None
    if threshold is None:
        keep = truth.n_edges
        thresholded = threshold_top_k(sym, keep)
        notes.append("threshold defaulted to the true edge density")
    else:
        if threshold.kind == "quantile":
            n_pairs = truth.n * (truth.n - 1) // 2
            keep = int(np.ceil(threshold.value * n_pairs))
        thresholded = apply_threshold(sym, threshold)
    if keep is not None:
        iu = np.triu_indices(sym.n, k=1)
        strength = np.sort(np.abs(sym.weights[iu]))[::-1]
        if 0 < keep < strength.size and strength[keep - 1] == strength[keep]:
            notes.append("ties at the quantile cut broken by (row, col) order")
    report = confusion_at_threshold(truth, sym, thresholded)
    if notes:
        report = EdgeScoreReport(
            tp=report.tp, fp=report.fp, fn=report.fn, tn=report.tn,
            precision=report.precision, recall=report.recall, f1=report.f1,
            auc=report.auc, auc_degenerate=report.auc_degenerate,
            notes=tuple(notes))
    return report
