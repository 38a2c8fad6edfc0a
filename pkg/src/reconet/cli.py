"""Command-line surface.

Exit codes: 0 success, 2 parse/format errors, 3 precondition or parameter
violations, 4 numerical failures, 5 unknown methods/models/measures/flags.
Diagnostics go to stderr; data goes to files or stdout only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from ._params import coerce_value, validate_kwargs
from ._version import __version__
from .distances import (
    MEASURE_NAMES,
    DistanceConfig,
    MeasureOutcome,
    compute_distance,
    distance_all,
)
from .dynamics import DYNAMICS, TimeSeriesMatrix
from .errors import ParameterError, ParseError, ReconetError, UnknownMethodError
from .evaluation import symmetrize_result
from .generators import GENERATORS
from .io import read_edgelist, read_matrix_csv, write_edgelist, write_matrix_csv
from .pipeline import load_pipeline_config, resolve_threads, run_pipeline
from .reconstruction import RECONSTRUCTORS, apply_threshold, parse_threshold_spec

_USAGE_EXIT = 5


class _Parser(argparse.ArgumentParser):
    """argparse that exits with the unknown-flag status on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_param_list(pairs: list[str] | None) -> dict:
    params = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ParameterError(f"--param expects key=value, got {pair!r}")
        params[key] = coerce_value(raw)
    return params


def _distance_config(params: dict) -> DistanceConfig:
    validate_kwargs(DistanceConfig.__init__, params, what="distance configuration")
    return DistanceConfig(**params)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_generate(args) -> int:
    if args.model not in GENERATORS:
        raise UnknownMethodError(
            f"unknown graph model {args.model!r}; valid models: "
            f"{', '.join(sorted(GENERATORS))}")
    fn, _, seeded = GENERATORS[args.model]
    params = _parse_param_list(args.param)
    validate_kwargs(fn, params, skip=("n", "seed"), what=f"graph model {args.model!r}")
    if seeded:
        if args.seed is None:
            raise ParameterError(f"graph model {args.model!r} requires --seed")
        graph = fn(args.nodes, seed=args.seed, **params)
    else:
        graph = fn(args.nodes, **params)
    write_edgelist(graph, args.out)
    return 0


def _cmd_simulate(args) -> int:
    if args.dynamics not in DYNAMICS:
        raise UnknownMethodError(
            f"unknown dynamics model {args.dynamics!r}; valid models: "
            f"{', '.join(sorted(DYNAMICS))}")
    fn = DYNAMICS[args.dynamics]
    params = _parse_param_list(args.param)
    validate_kwargs(fn, params, skip=("g", "steps", "seed"),
                    what=f"dynamics model {args.dynamics!r}")
    graph = read_edgelist(args.graph)
    ts = fn(graph, args.steps, args.seed, **params)
    write_matrix_csv(ts.values, args.out)
    return 0


def _cmd_reconstruct(args) -> int:
    if args.method not in RECONSTRUCTORS:
        raise UnknownMethodError(
            f"unknown reconstruction method {args.method!r}; valid methods: "
            f"{', '.join(sorted(RECONSTRUCTORS))}")
    cls = RECONSTRUCTORS[args.method]
    params = _parse_param_list(args.param)
    validate_kwargs(cls.__init__, params, what=f"reconstruction method {args.method!r}")
    ts = TimeSeriesMatrix(read_matrix_csv(args.ts))
    result = cls(**params).fit_result(ts)
    write_matrix_csv(result.weights, args.out)
    if args.graph_out:
        if not args.threshold:
            raise ParameterError("--graph-out requires --threshold")
        spec = parse_threshold_spec(args.threshold)
        write_edgelist(apply_threshold(symmetrize_result(result), spec), args.graph_out)
    return 0


def _outcome_dict(outcome: MeasureOutcome) -> dict:
    entry = {"measure": outcome.measure, "status": outcome.status}
    if outcome.value is not None:
        entry["value"] = outcome.value
    if outcome.detail:
        entry["detail"] = outcome.detail
    return entry


def _emit_outcomes(outcomes: list[MeasureOutcome], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([_outcome_dict(o) for o in outcomes], indent=2))
    else:
        for o in outcomes:
            shown = format(o.value, ".17g") if o.value is not None else o.status
            print(f"{o.measure}\t{shown}")


def _cmd_distance(args) -> int:
    cfg = _distance_config(_parse_param_list(args.param))
    g1 = read_edgelist(args.g1)
    g2 = read_edgelist(args.g2)
    requested = args.measure or "all"
    if requested == "all":
        outcomes = distance_all(g1, g2, cfg)
    else:
        names = [m.strip() for m in requested.split(",") if m.strip()]
        unknown = [m for m in names if m not in MEASURE_NAMES]
        if unknown:
            raise UnknownMethodError(
                f"unknown distance measure(s) {', '.join(unknown)}; valid measures: "
                f"{', '.join(MEASURE_NAMES)}")
        outcomes = [MeasureOutcome(name, "ok",
                                   value=compute_distance(name, g1, g2, cfg).value)
                    for name in names]
    _emit_outcomes(outcomes, args.format)
    return 0


def _cmd_distance_matrix(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise ParseError(f"not a directory: {directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file())
    if not files:
        raise ParseError(f"no graph files found in {directory}")
    if args.measure not in MEASURE_NAMES:
        raise UnknownMethodError(
            f"unknown distance measure {args.measure!r}; valid measures: "
            f"{', '.join(MEASURE_NAMES)}")
    cfg = _distance_config(_parse_param_list(args.param))
    graphs = [read_edgelist(p) for p in files]
    k = len(graphs)
    matrix = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            try:
                value = compute_distance(args.measure, graphs[i], graphs[j], cfg).value
            except ReconetError as exc:
                print(f"warning: {files[i].name} vs {files[j].name}: {exc}",
                      file=sys.stderr)
                value = math.nan
            matrix[i, j] = value
            matrix[j, i] = value
    write_matrix_csv(matrix, args.out)
    index_path = Path(str(args.out) + ".index")
    index_path.write_text(
        "".join(f"{i}\t{p.name}\n" for i, p in enumerate(files)))
    return 0


def _cmd_pipeline(args) -> int:
    config = load_pipeline_config(args.config)
    run_pipeline(config, args.out_dir, threads=resolve_threads())
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reconet",
                     description="Simulate dynamics on networks, reconstruct networks "
                                 "from time series, and compare graphs.")
    parser.add_argument("--version", action="version", version=f"reconet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a ground-truth graph")
    p.add_argument("--model", required=True, help="er | ba | ring")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--param", action="append", metavar="K=V",
                   help="model parameter, repeatable (er: p, ba: m, ring: k)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("simulate", help="simulate node dynamics on a graph")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--dynamics", required=True,
                   help=" | ".join(sorted(DYNAMICS)))
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output time-series CSV (N x L)")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("reconstruct", help="score edges from a time-series CSV")
    p.add_argument("--ts", required=True, help="N x L matrix CSV, rows are nodes")
    p.add_argument("--method", required=True,
                   help=" | ".join(sorted(RECONSTRUCTORS)))
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--out", required=True, help="output weight-matrix CSV")
    p.add_argument("--threshold", metavar="KIND:VALUE",
                   help="quantile:q | abs:tau | degree:k")
    p.add_argument("--graph-out", help="edge-list output for the thresholded graph")
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("distance", help="compare two graphs")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--measure", default="all",
                   help="comma-separated measure names or 'all'")
    p.add_argument("--param", action="append", metavar="K=V",
                   help="distance configuration (gamma, xi, p, grid_points)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(handler=_cmd_distance)

    p = sub.add_parser("distance-matrix",
                       help="pairwise distances for every edge list in a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--measure", required=True)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--out", required=True,
                   help="output CSV; the filename index goes to OUT.index")
    p.set_defaults(handler=_cmd_distance_matrix)

    p = sub.add_parser("pipeline", help="run a configured experiment end to end")
    p.add_argument("--config", required=True, help="pipeline JSON config")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(handler=_cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ReconetError as exc:
        print(f"reconet: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"reconet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
