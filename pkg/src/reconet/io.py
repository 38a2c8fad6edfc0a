"""Text formats: edge-list graphs and CSV matrices.

Edge lists are whitespace-separated ``u v [w]`` lines with 0-based integer
node ids and an optional ``# nodes=N directed={0|1}`` header; ``#`` lines
are otherwise comments.  Matrices are headerless comma-separated decimal
floats written with 17 significant digits, which round-trips float64
exactly.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import ParseError
from .graph import Graph

__all__ = ["read_edgelist", "write_edgelist", "read_matrix_csv", "write_matrix_csv"]

_HEADER_RE = re.compile(r"^#\s*nodes\s*=\s*(\d+)\s+directed\s*=\s*([01])\s*$")
_MAX_NODE_ID = 2 ** 31 - 1


def _parse_node_id(token: str, path: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"node id must be an integer, got {token!r}",
                         path=path, line=line_no) from None
    if value < 0:
        raise ParseError(f"node id must be nonnegative, got {value}",
                         path=path, line=line_no)
    if value > _MAX_NODE_ID:
        raise ParseError(f"node id {value} overflows the supported range",
                         path=path, line=line_no)
    return value


def read_edgelist(path) -> Graph:
    """Read a graph from an edge-list text file."""
    path = Path(path)
    text = path.read_text()
    name = str(path)

    header: tuple[int, int] | None = None
    edges: dict[tuple[int, int], tuple[float, int]] = {}
    max_id = -1
    seen_data = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER_RE.match(line)
            if match and header is None and not seen_data:
                header = (int(match.group(1)), int(match.group(2)))
            continue
        seen_data = True
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected 'u v [w]', got {len(tokens)} fields",
                             path=name, line=line_no)
        u = _parse_node_id(tokens[0], name, line_no)
        v = _parse_node_id(tokens[1], name, line_no)
        if u == v:
            raise ParseError(f"self-loop on node {u} is not allowed",
                             path=name, line=line_no)
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(f"edge weight must be numeric, got {tokens[2]!r}",
                                 path=name, line=line_no) from None
            if not np.isfinite(weight) or weight == 0.0:
                raise ParseError(f"edge weight must be finite and nonzero, got {tokens[2]}",
                                 path=name, line=line_no)
        else:
            weight = 1.0
        max_id = max(max_id, u, v)
        directed = bool(header[1]) if header else False
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in edges:
            old_weight, old_line = edges[key]
            if old_weight != weight:
                raise ParseError(
                    f"edge {key} repeats line {old_line} with a conflicting weight",
                    path=name, line=line_no)
        else:
            edges[key] = (weight, line_no)

    if header is not None:
        n, directed_flag = header
        directed = bool(directed_flag)
        if max_id >= n:
            raise ParseError(f"node id {max_id} exceeds declared nodes={n}", path=name)
    else:
        directed = False
        n = max_id + 1
    if n < 1:
        raise ParseError("file declares no nodes and contains no edges", path=name)

    w = np.zeros((n, n))
    for (u, v), (weight, _) in edges.items():
        w[u, v] = weight
        if not directed:
            w[v, u] = weight
    return Graph(w, directed=directed)


def write_edgelist(g: Graph, path) -> None:
    """Write a graph as an edge-list file that reads back identically."""
    lines = [f"# nodes={g.n} directed={1 if g.directed else 0}"]
    rows, cols = np.nonzero(g.weights)
    for u, v in zip(rows.tolist(), cols.tolist()):
        if not g.directed and u > v:
            continue
        lines.append(f"{u} {v} {format(g.weights[u, v], '.17g')}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_csv(path) -> np.ndarray:
    """Read a rectangular matrix of comma-separated floats."""
    path = Path(path)
    name = str(path)
    rows: list[list[float]] = []
    width: int | None = None
    for row_no, raw in enumerate(path.read_text().splitlines(), start=1):
        if raw.strip() == "":
            raise ParseError("blank row in matrix file", path=name, line=row_no)
        tokens = raw.split(",")
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise ParseError(
                f"ragged row: expected {width} columns, got {len(tokens)}",
                path=name, line=row_no)
        values = []
        for col_no, token in enumerate(tokens, start=1):
            try:
                values.append(float(token))
            except ValueError:
                raise ParseError(f"non-numeric entry {token.strip()!r}",
                                 path=name, line=row_no, column=col_no) from None
        rows.append(values)
    if not rows:
        raise ParseError("matrix file is empty", path=name)
    return np.array(rows, dtype=float)


def write_matrix_csv(matrix: np.ndarray, path) -> None:
    """Write a matrix with 17 significant digits per entry (exact round-trip)."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    lines = [",".join(format(v, ".17g") for v in row) for row in matrix]
    Path(path).write_text("\n".join(lines) + "\n")
