"""End-to-end experiment pipeline: generate, simulate, reconstruct, score.

A JSON config drives the run; all randomness flows from the seeds it
declares, so a rerun with the same config produces numerically identical
outputs regardless of worker-thread count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from ._params import validate_kwargs
from ._version import __version__
from .dynamics import DYNAMICS, TimeSeriesMatrix
from .errors import ParameterError, ParseError, UnknownMethodError
from .evaluation import score_reconstruction, symmetrize_result
from .generators import GENERATORS
from .graph import Graph
from .io import read_edgelist, write_edgelist, write_matrix_csv
from .reconstruction import (
    RECONSTRUCTORS,
    ThresholdSpec,
    apply_threshold,
    threshold_top_k,
)

__all__ = [
    "GraphSource",
    "DynamicsSpec",
    "ReconstructorSpec",
    "PipelineConfig",
    "load_pipeline_config",
    "run_pipeline",
    "validate_report",
    "resolve_threads",
    "THREADS_ENV_VAR",
]

THREADS_ENV_VAR = "RECONET_THREADS"


def resolve_threads(override: int | None = None) -> int:
    """Worker count: explicit override, else RECONET_THREADS, else a default."""
    if override is not None:
        if override < 1:
            raise ParameterError(f"thread count must be >= 1, got {override}")
        return int(override)
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return min(os.cpu_count() or 1, 8)
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(
            f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ParameterError(
            f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class GraphSource:
    """Ground-truth source: either a generator spec or an edge-list path."""

    model: str | None = None
    n: int | None = None
    params: dict[str, Any] | None = None
    seed: int | None = None
    path: str | None = None


@dataclass(frozen=True)
class DynamicsSpec:
    model: str
    steps: int
    seed: int
    params: dict[str, Any]


@dataclass(frozen=True)
class ReconstructorSpec:
    method: str
    params: dict[str, Any]


@dataclass(frozen=True)
class PipelineConfig:
    graph: GraphSource
    dynamics: DynamicsSpec
    reconstructors: tuple[ReconstructorSpec, ...]
    threshold: ThresholdSpec | None


def _require_keys(obj: dict, required: set[str], optional: set[str],
                  where: str, path: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be a JSON object", path=path)
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{where} is missing key(s): {', '.join(sorted(missing))}",
                         path=path)
    unknown = set(obj) - required - optional
    if unknown:
        raise ParseError(f"{where} has unknown key(s): {', '.join(sorted(unknown))}",
                         path=path)


def _load_graph_source(obj: dict, path: str) -> GraphSource:
    if "path" in obj:
        _require_keys(obj, {"path"}, set(), "config.graph", path)
        return GraphSource(path=str(obj["path"]))
    _require_keys(obj, {"model", "n"}, {"params", "seed"}, "config.graph", path)
    model = str(obj["model"])
    if model not in GENERATORS:
        raise UnknownMethodError(
            f"unknown graph model {model!r}; valid models: {', '.join(sorted(GENERATORS))}")
    _, _, seeded = GENERATORS[model]
    seed = obj.get("seed")
    if seeded and seed is None:
        raise ParseError(f"config.graph needs a seed for model {model!r}", path=path)
    return GraphSource(model=model, n=int(obj["n"]),
                       params=dict(obj.get("params", {})),
                       seed=None if seed is None else int(seed))


def load_pipeline_config(path) -> PipelineConfig:
    """Parse and validate a pipeline config file."""
    path = Path(path)
    name = str(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", path=name) from exc
    _require_keys(raw, {"graph", "dynamics", "reconstructors"}, {"threshold"},
                  "config", name)

    graph = _load_graph_source(raw["graph"], name)

    dyn = raw["dynamics"]
    _require_keys(dyn, {"model", "steps", "seed"}, {"params"}, "config.dynamics", name)
    model = str(dyn["model"])
    if model not in DYNAMICS:
        raise UnknownMethodError(
            f"unknown dynamics model {model!r}; valid models: {', '.join(sorted(DYNAMICS))}")
    steps = int(dyn["steps"])
    if steps < 2:
        raise ParseError(f"config.dynamics.steps must be >= 2, got {steps}", path=name)
    dynamics = DynamicsSpec(model=model, steps=steps, seed=int(dyn["seed"]),
                            params=dict(dyn.get("params", {})))

    recon_raw = raw["reconstructors"]
    if not isinstance(recon_raw, list) or not recon_raw:
        raise ParseError("config.reconstructors must be a nonempty list", path=name)
    reconstructors = []
    seen = set()
    for item in recon_raw:
        _require_keys(item, {"method"}, {"params"}, "config.reconstructors[]", name)
        method = str(item["method"])
        if method not in RECONSTRUCTORS:
            raise UnknownMethodError(
                f"unknown reconstruction method {method!r}; valid methods: "
                f"{', '.join(sorted(RECONSTRUCTORS))}")
        if method in seen:
            raise ParseError(f"method {method!r} configured twice "
                             "(output files would collide)", path=name)
        seen.add(method)
        reconstructors.append(ReconstructorSpec(method=method,
                                                params=dict(item.get("params", {}))))

    threshold = None
    if "threshold" in raw:
        thr = raw["threshold"]
        _require_keys(thr, {"kind", "value"}, set(), "config.threshold", name)
        threshold = ThresholdSpec(str(thr["kind"]), float(thr["value"]))

    return PipelineConfig(graph=graph, dynamics=dynamics,
                          reconstructors=tuple(reconstructors), threshold=threshold)


def _build_truth(source: GraphSource) -> Graph:
    if source.path is not None:
        return read_edgelist(source.path)
    fn, _, seeded = GENERATORS[source.model]
    params = validate_kwargs(fn, source.params or {},
                             skip=("n", "seed"), what=f"graph model {source.model!r}")
    if seeded:
        return fn(source.n, seed=source.seed, **params)
    return fn(source.n, **params)


def _simulate(graph: Graph, spec: DynamicsSpec) -> TimeSeriesMatrix:
    fn = DYNAMICS[spec.model]
    params = validate_kwargs(fn, spec.params, skip=("g", "steps", "seed"),
                             what=f"dynamics model {spec.model!r}")
    return fn(graph, spec.steps, spec.seed, **params)


def _run_method(spec: ReconstructorSpec, ts: TimeSeriesMatrix, truth: Graph,
                threshold: ThresholdSpec | None, out_dir: Path) -> dict[str, Any]:
    cls = RECONSTRUCTORS[spec.method]
    validate_kwargs(cls.__init__, spec.params, skip=(),
                    what=f"reconstruction method {spec.method!r}")
    estimator = cls(**spec.params)
    result = estimator.fit_result(ts)
    write_matrix_csv(result.weights, out_dir / f"weights_{spec.method}.csv")

    symmetric = symmetrize_result(result)
    if threshold is not None:
        thresholded = apply_threshold(symmetric, threshold)
    else:
        # match score_reconstruction's default: keep the true edge count
        thresholded = threshold_top_k(symmetric, truth.n_edges)
    write_edgelist(thresholded, out_dir / f"graph_{spec.method}.txt")
    report = score_reconstruction(truth, result, threshold)

    params = dict(result.params)
    converged = bool(params.get("converged", True))
    return {
        "method": spec.method,
        "params": params,
        "converged": converged,
        "scores": {
            "tp": report.tp, "fp": report.fp, "fn": report.fn, "tn": report.tn,
            "precision": report.precision, "recall": report.recall,
            "f1": report.f1, "auc": report.auc,
        },
    }


def validate_report(report: dict) -> None:
    """Check a report against the published schema (unknown fields forbidden)."""
    schema = json.loads(
        resources.files("reconet.schemas").joinpath("report.schema.json").read_text())
    jsonschema.validate(report, schema)


def run_pipeline(config: PipelineConfig, out_dir, threads: int | None = None) -> dict:
    """Execute a configured experiment and write its artifacts into out_dir.

    Writes the ground truth (graph.txt), the simulated series (ts.csv), one
    weight matrix and thresholded graph per method, and report.json.
    Returns the report dict.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    workers = resolve_threads(threads)

    truth = _build_truth(config.graph)
    write_edgelist(truth, out_dir / "graph.txt")
    ts = _simulate(truth, config.dynamics)
    write_matrix_csv(ts.values, out_dir / "ts.csv")

    entries: list[dict[str, Any]] = []
    if workers == 1 or len(config.reconstructors) == 1:
        for spec in config.reconstructors:
            entries.append(_run_method(spec, ts, truth, config.threshold, out_dir))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_method, spec, ts, truth,
                                   config.threshold, out_dir)
                       for spec in config.reconstructors]
            entries = [f.result() for f in futures]

    report = {
        "entries": entries,
        "environment": {
            "tool_version": __version__,
            "seed": config.dynamics.seed,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        },
    }
    validate_report(report)
    (out_dir / "report.json").write_text(
        json.dumps(report, indent=2, sort_keys=True) + "\n")
    return report
