"""Graph data model and shared numerical kernels.

Graphs are dense-matrix backed and immutable.  The kernels here (Laplacian,
symmetric eigendecomposition, pseudoinverse) are the substrate for the
spectral distance measures and the precision-matrix reconstructors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, NumericalInputError, ParameterError, PreconditionError

__all__ = [
    "Graph",
    "SpectralDecomposition",
    "degrees",
    "laplacian",
    "symmetric_eigen",
    "pseudoinverse",
    "is_connected",
]


@dataclass(frozen=True)
class Graph:
    """An n-node graph stored as an n x n weight matrix.

    Parameters
    ----------
    weights : ndarray
        Square matrix; entry (i, j) is the weight of the edge i -> j and
        0 means no edge.  The diagonal must be zero (no self-loops) and
        undirected graphs must be exactly symmetric.
    directed : bool
        Whether entries are interpreted as directed edges.
    """

    weights: np.ndarray
    directed: bool = False

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ParameterError(f"weight matrix must be square, got shape {w.shape}")
        if w.shape[0] < 1:
            raise ParameterError("a graph needs at least one node")
        if not np.all(np.isfinite(w)):
            raise ParameterError("weight matrix contains non-finite entries")
        if np.any(np.diag(w) != 0.0):
            raise ParameterError("self-loops are not allowed (nonzero diagonal)")
        if not self.directed and np.any(w != w.T):
            raise ParameterError("undirected graph requires an exactly symmetric weight matrix")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        """Node count."""
        return self.weights.shape[0]

    @property
    def n_edges(self) -> int:
        """Edge count on the binarized adjacency (pairs for undirected)."""
        nonzero = int(np.count_nonzero(self.weights))
        return nonzero if self.directed else nonzero // 2

    def adjacency(self) -> np.ndarray:
        """Binarized adjacency matrix (0/1 floats)."""
        return (self.weights != 0.0).astype(float)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        """Edges as (i, j) pairs; i < j for undirected graphs."""
        rows, cols = np.nonzero(self.weights)
        if self.directed:
            return frozenset(zip(rows.tolist(), cols.tolist()))
        return frozenset((int(i), int(j)) for i, j in zip(rows, cols) if i < j)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless undirected graph on n nodes."""
        if n < 1:
            raise ParameterError("a graph needs at least one node")
        return cls(np.zeros((n, n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """Complete undirected graph on n nodes with unit weights."""
        if n < 1:
            raise ParameterError("a graph needs at least one node")
        w = np.ones((n, n)) - np.eye(n)
        return cls(w)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix.

    ``eigenvalues`` are sorted ascending; column k of ``eigenvectors``
    pairs with eigenvalue k and the columns are orthonormal.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def degrees(g: Graph) -> np.ndarray:
    """Binarized degree of every node (out-degree for directed graphs)."""
    return np.count_nonzero(g.weights, axis=1)


def laplacian(g: Graph, weighted: bool = False) -> np.ndarray:
    """Combinatorial Laplacian L = D - A of an undirected graph.

    Uses the binarized adjacency unless ``weighted`` is set.  Row sums of
    the result are exactly zero for integer-weight graphs.
    """
    if g.directed:
        raise PreconditionError("laplacian is defined for undirected graphs only")
    a = g.weights if weighted else g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def symmetric_eigen(a: np.ndarray) -> SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix with a residual guarantee.

    The matrix must be symmetric within 1e-10 elementwise and finite.  The
    returned factors satisfy ``||a - Q diag(w) Q^T||_F <= 1e-8 * max(1, ||a||_F)``;
    a decomposition that misses that bound raises ``NumericalError``.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NumericalInputError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalInputError("matrix contains non-finite entries")
    if a.size and np.max(np.abs(a - a.T)) > 1e-10:
        raise NumericalInputError("matrix is not symmetric within 1e-10")
    sym = (a + a.T) / 2.0
    try:
        vals, vecs = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    residual = np.linalg.norm(a - (vecs * vals) @ vecs.T)
    if residual > 1e-8 * max(1.0, np.linalg.norm(a)):
        raise NumericalError("eigendecomposition residual exceeds tolerance")
    return SpectralDecomposition(eigenvalues=vals, eigenvectors=vecs)


def pseudoinverse(a: np.ndarray, rcond: float = 1e-10) -> np.ndarray:
    """Moore-Penrose pseudoinverse of a symmetric matrix.

    Eigenvalues with ``|lam| <= rcond * max|lam|`` are treated as zero.
    """
    dec = symmetric_eigen(a)
    vals, vecs = dec.eigenvalues, dec.eigenvectors
    scale = np.max(np.abs(vals)) if vals.size else 0.0
    if scale == 0.0:
        return np.zeros_like(np.asarray(a, dtype=float))
    keep = np.abs(vals) > rcond * scale
    inv_vals = np.where(keep, 1.0 / np.where(keep, vals, 1.0), 0.0)
    out = (vecs * inv_vals) @ vecs.T
    return (out + out.T) / 2.0


def is_connected(g: Graph) -> bool:
    """Whether the graph is connected (weak connectivity for directed)."""
    n = g.n
    if n == 1:
        return True
    adj = g.weights != 0.0
    if g.directed:
        adj = adj | adj.T
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        node = stack.pop()
        for nb in np.flatnonzero(adj[node]):
            if not seen[nb]:
                seen[nb] = True
                stack.append(int(nb))
    return bool(seen.all())
