"""Random and deterministic graph generators used as ground truths."""

from __future__ import annotations

import numpy as np

from . import _rng
from .errors import ParameterError
from .graph import Graph

__all__ = ["erdos_renyi", "barabasi_albert", "ring_lattice", "GENERATORS"]


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) graph: each unordered pair is an edge independently with probability p."""
    n = int(n)
    if n < 1:
        raise ParameterError("node count must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    rng = _rng.generator(seed, _rng.STREAM_ER)
    w = np.zeros((n, n))
    iu = np.triu_indices(n, k=1)
    hit = rng.random(iu[0].size) < p
    w[iu[0][hit], iu[1][hit]] = 1.0
    return Graph(w + w.T)


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Preferential-attachment graph grown from a complete nucleus.

    The nucleus is a complete graph on the first m nodes.  Each later node
    attaches m edges to distinct existing nodes, chosen with probability
    proportional to their degree at the start of that node's round (uniform
    whenever all candidate degrees are zero, as in the m = 1 nucleus).  The
    edge count is always C(m, 2) + (n - m) * m.
    """
    n, m = int(n), int(m)
    if not 1 <= m < n:
        raise ParameterError(f"edges per new node must satisfy 1 <= m < n, got m={m}, n={n}")
    rng = _rng.generator(seed, _rng.STREAM_BA)
    w = np.zeros((n, n))
    w[:m, :m] = 1.0
    np.fill_diagonal(w, 0.0)
    deg = np.count_nonzero(w, axis=1).astype(float)
    for new in range(m, n):
        weights_snapshot = deg[:new].copy()
        avail = np.ones(new, dtype=bool)
        targets = []
        for _ in range(m):
            pool = np.where(avail, weights_snapshot, 0.0)
            total = pool.sum()
            if total > 0.0:
                probs = pool / total
            else:
                probs = avail / avail.sum()
            pick = int(rng.choice(new, p=probs))
            avail[pick] = False
            targets.append(pick)
        for t in targets:
            w[new, t] = 1.0
            w[t, new] = 1.0
            deg[t] += 1.0
        deg[new] = float(m)
    return Graph(w)


def ring_lattice(n: int, k: int) -> Graph:
    """Ring lattice: node i is adjacent to i +- 1, ..., i +- k/2 modulo n."""
    n, k = int(n), int(k)
    if k % 2 != 0:
        raise ParameterError(f"neighbor count must be even, got {k}")
    if not 2 <= k < n:
        raise ParameterError(f"neighbor count must satisfy 2 <= k < n, got k={k}, n={n}")
    w = np.zeros((n, n))
    idx = np.arange(n)
    for d in range(1, k // 2 + 1):
        w[idx, (idx + d) % n] = 1.0
        w[(idx + d) % n, idx] = 1.0
    return Graph(w)


# name -> (callable, model parameter names, whether a seed is consumed)
GENERATORS = {
    "er": (erdos_renyi, ("p",), True),
    "ba": (barabasi_albert, ("m",), True),
    "ring": (ring_lattice, ("k",), False),
}
