"""Network reconstruction: estimators mapping time series to edge scores."""

from __future__ import annotations

from .base import BaseReconstructor, ReconstructionResult, validate_time_series
from .correlation import CorrelationReconstructor, PartialCorrelationReconstructor
from .glasso import GraphicalLassoReconstructor
from .granger import GrangerCausalityReconstructor
from .info_theory import MutualInformationReconstructor, TransferEntropyReconstructor
from .ising import MeanFieldIsingReconstructor
from .thresholds import (
    ThresholdSpec,
    apply_threshold,
    parse_threshold_spec,
    threshold_absolute,
    threshold_quantile,
    threshold_target_degree,
    threshold_top_k,
)

# Registry used by the CLI and pipeline; keys are the public method names.
RECONSTRUCTORS = {
    "correlation": CorrelationReconstructor,
    "partial_correlation": PartialCorrelationReconstructor,
    "graphical_lasso": GraphicalLassoReconstructor,
    "mutual_information": MutualInformationReconstructor,
    "granger": GrangerCausalityReconstructor,
    "transfer_entropy": TransferEntropyReconstructor,
    "mean_field_ising": MeanFieldIsingReconstructor,
}

__all__ = [
    "BaseReconstructor",
    "ReconstructionResult",
    "validate_time_series",
    "CorrelationReconstructor",
    "PartialCorrelationReconstructor",
    "GraphicalLassoReconstructor",
    "MutualInformationReconstructor",
    "GrangerCausalityReconstructor",
    "TransferEntropyReconstructor",
    "MeanFieldIsingReconstructor",
    "RECONSTRUCTORS",
    "ThresholdSpec",
    "parse_threshold_spec",
    "threshold_top_k",
    "threshold_quantile",
    "threshold_absolute",
    "threshold_target_degree",
    "apply_threshold",
]
