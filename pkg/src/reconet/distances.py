"""Graph distance measures.

Ten measures quantifying how different two undirected simple graphs are.
All operate on the binarized adjacency except the Frobenius distance,
which compares weight matrices directly.  None of these are guaranteed to
satisfy the triangle inequality; they are nonnegative and symmetric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson

from .errors import (
    NumericalError,
    ParameterError,
    PreconditionError,
    ReconetError,
    SizeMismatchError,
    UnknownMethodError,
)
from .graph import Graph, degrees, is_connected, laplacian, pseudoinverse, symmetric_eigen

__all__ = [
    "DistanceConfig",
    "DistanceValue",
    "MeasureOutcome",
    "dist_hamming",
    "dist_jaccard",
    "dist_frobenius",
    "dist_degree_jsd",
    "dist_laplacian_spectrum",
    "dist_ipsen_mikhailov",
    "dist_him",
    "dist_deltacon",
    "dist_resistance_perturbation",
    "dist_netsimile",
    "distance_all",
    "MEASURES",
    "im_omega_grid",
    "im_spectral_density",
    "netsimile_signature",
]


@dataclass(frozen=True)
class DistanceConfig:
    """Tunable parameters shared by the distance measures.

    gamma : Lorentzian half-width for the spectral density comparison.
    xi : mixing weight between edit and spectral terms in the combined measure.
    p : norm exponent (1 or 2) for the resistance comparison.
    grid_points : number of quadrature intervals for the spectral density.
    """

    gamma: float = 0.08
    xi: float = 1.0
    p: int = 1
    grid_points: int = 2 ** 14

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise ParameterError(f"gamma must be > 0, got {self.gamma}")
        if not (math.isfinite(self.xi) and self.xi >= 0):
            raise ParameterError(f"xi must be >= 0, got {self.xi}")
        if self.p not in (1, 2):
            raise ParameterError(f"p must be 1 or 2, got {self.p}")
        if int(self.grid_points) < 2 ** 10:
            raise ParameterError(f"grid_points must be >= {2**10}, got {self.grid_points}")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "grid_points", int(self.grid_points))


@dataclass(frozen=True)
class DistanceValue:
    """A named nonnegative distance between two graphs."""

    measure: str
    value: float

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 0):
            raise NumericalError(
                f"distance {self.measure} produced an invalid value {self.value}")


@dataclass(frozen=True)
class MeasureOutcome:
    """Per-measure entry in a batch comparison; failed preconditions carry a status."""

    measure: str
    status: str
    value: float | None = None
    detail: str = ""


def _require_undirected(*graphs: Graph) -> None:
    for g in graphs:
        if g.directed:
            raise PreconditionError("distance measures require undirected graphs")


def _require_same_n(g1: Graph, g2: Graph) -> None:
    if g1.n != g2.n:
        raise SizeMismatchError(
            f"measure requires equal node counts, got {g1.n} and {g2.n}")


# ---------------------------------------------------------------------------
# Edit-style measures
# ---------------------------------------------------------------------------

def dist_hamming(g1: Graph, g2: Graph) -> DistanceValue:
    """Fraction of differing off-diagonal entries of the binarized adjacencies."""
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    n = g1.n
    if n == 1:
        return DistanceValue("hamming", 0.0)
    diff = np.abs(g1.adjacency() - g2.adjacency()).sum()
    return DistanceValue("hamming", float(diff / (n * (n - 1))))


def dist_jaccard(g1: Graph, g2: Graph) -> DistanceValue:
    """One minus the Jaccard similarity of the edge sets (0 when both empty)."""
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    e1, e2 = g1.edge_set(), g2.edge_set()
    union = len(e1 | e2)
    if union == 0:
        return DistanceValue("jaccard", 0.0)
    return DistanceValue("jaccard", 1.0 - len(e1 & e2) / union)


def dist_frobenius(g1: Graph, g2: Graph) -> DistanceValue:
    """Frobenius norm of the difference of the weight matrices."""
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    return DistanceValue("frobenius", float(np.linalg.norm(g1.weights - g2.weights)))


# ---------------------------------------------------------------------------
# Distribution and spectrum measures (node counts may differ)
# ---------------------------------------------------------------------------

def _entropy_bits(p: np.ndarray) -> float:
    live = p[p > 0]
    return float(-(live * np.log2(live)).sum())


def dist_degree_jsd(g1: Graph, g2: Graph) -> DistanceValue:
    """Jensen-Shannon divergence (base 2) between the degree distributions."""
    _require_undirected(g1, g2)
    d1, d2 = degrees(g1), degrees(g2)
    top = int(max(d1.max(), d2.max()))
    p = np.bincount(d1, minlength=top + 1) / g1.n
    q = np.bincount(d2, minlength=top + 1) / g2.n
    m = (p + q) / 2.0
    jsd = _entropy_bits(m) - (_entropy_bits(p) + _entropy_bits(q)) / 2.0
    return DistanceValue("degree_jsd", max(jsd, 0.0))


def _laplacian_spectrum(g: Graph) -> np.ndarray:
    return symmetric_eigen(laplacian(g)).eigenvalues


def dist_laplacian_spectrum(g1: Graph, g2: Graph) -> DistanceValue:
    """Euclidean distance between descending Laplacian spectra, zero-padded."""
    _require_undirected(g1, g2)
    s1 = np.sort(_laplacian_spectrum(g1))[::-1]
    s2 = np.sort(_laplacian_spectrum(g2))[::-1]
    size = max(s1.size, s2.size)
    a = np.zeros(size)
    b = np.zeros(size)
    a[: s1.size] = s1
    b[: s2.size] = s2
    return DistanceValue("laplacian_spectrum", float(np.linalg.norm(a - b)))


# ---------------------------------------------------------------------------
# Lorentzian spectral density comparison
# ---------------------------------------------------------------------------

def _vibration_modes(g: Graph) -> np.ndarray:
    """sqrt of the N-1 largest Laplacian eigenvalues (clipped at zero)."""
    lams = _laplacian_spectrum(g)
    return np.sqrt(np.clip(lams[1:], 0.0, None))


def im_omega_grid(g1: Graph, g2: Graph, cfg: DistanceConfig) -> np.ndarray:
    """Shared quadrature grid on [0, Omega], Omega = max mode over both graphs + 3."""
    top = max(_vibration_modes(g1).max(), _vibration_modes(g2).max())
    return np.linspace(0.0, float(top) + 3.0, cfg.grid_points + 1)


def _density_on_grid(modes: np.ndarray, gamma: float, grid: np.ndarray) -> np.ndarray:
    omega_max = grid[-1]
    # closed-form normalization over the truncated domain [0, Omega]
    norm = np.sum(np.arctan((omega_max - modes) / gamma) + np.arctan(modes / gamma))
    rho = np.zeros_like(grid)
    for start in range(0, modes.size, 256):
        block = modes[start: start + 256, None]
        rho += (gamma / ((grid[None, :] - block) ** 2 + gamma**2)).sum(axis=0)
    return rho / norm


def im_spectral_density(g: Graph, cfg: DistanceConfig,
                        grid: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Lorentzian spectral density of a graph on a quadrature grid.

    Returns (grid, density).  The density integrates to 1 over the grid's
    domain up to quadrature error.
    """
    if g.n < 2:
        raise PreconditionError("spectral density needs at least 2 nodes")
    if grid is None:
        grid = im_omega_grid(g, g, cfg)
    return grid, _density_on_grid(_vibration_modes(g), cfg.gamma, grid)


def dist_ipsen_mikhailov(g1: Graph, g2: Graph, cfg: DistanceConfig | None = None) -> DistanceValue:
    """L2 distance between Lorentzian spectral densities of the two graphs.

    Each Laplacian mode contributes a Lorentzian of half-width gamma
    centered at the mode's vibration frequency; densities are normalized
    in closed form and compared by composite Simpson quadrature on the
    shared truncated domain.
    """
    cfg = cfg or DistanceConfig()
    _require_undirected(g1, g2)
    if g1.n < 2 or g2.n < 2:
        raise PreconditionError("spectral density comparison needs at least 2 nodes")
    grid = im_omega_grid(g1, g2, cfg)
    rho1 = _density_on_grid(_vibration_modes(g1), cfg.gamma, grid)
    rho2 = _density_on_grid(_vibration_modes(g2), cfg.gamma, grid)
    value = simpson((rho1 - rho2) ** 2, x=grid)
    return DistanceValue("ipsen_mikhailov", math.sqrt(max(float(value), 0.0)))


@lru_cache(maxsize=None)
def _im_extreme_value(n: int, gamma: float, grid_points: int) -> float:
    """Spectral-density distance between the empty and complete graphs on n nodes.

    Cached per (n, gamma, grid_points); concurrent recomputation is safe
    because the value is deterministic.
    """
    cfg = DistanceConfig(gamma=gamma, grid_points=grid_points)
    return dist_ipsen_mikhailov(Graph.empty(n), Graph.complete(n), cfg).value


def dist_him(g1: Graph, g2: Graph, cfg: DistanceConfig | None = None) -> DistanceValue:
    """Mix of the Hamming and normalized spectral-density distances.

    value = sqrt(H^2 + xi * IMn^2) / sqrt(1 + xi) where IMn is the
    spectral-density distance divided by its empty-vs-complete value at
    the same node count, so the empty/complete pair scores exactly 1.
    """
    cfg = cfg or DistanceConfig()
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    ham = dist_hamming(g1, g2).value
    if cfg.xi == 0.0:
        return DistanceValue("him", ham)
    im = dist_ipsen_mikhailov(g1, g2, cfg).value
    norm = _im_extreme_value(g1.n, cfg.gamma, cfg.grid_points)
    im_normalized = im / norm if norm > 0 else 0.0
    value = math.sqrt(ham**2 + cfg.xi * im_normalized**2) / math.sqrt(1.0 + cfg.xi)
    return DistanceValue("him", value)


# ---------------------------------------------------------------------------
# Affinity and resistance measures
# ---------------------------------------------------------------------------

def _deltacon_affinity(adj: np.ndarray, eps: float) -> np.ndarray:
    deg = np.diag(adj.sum(axis=1))
    system = np.eye(adj.shape[0]) + eps**2 * deg - eps * adj
    affinity = np.linalg.inv(system)
    lowest = affinity.min()
    if lowest < -1e-12:
        raise NumericalError(
            f"affinity matrix has a significantly negative entry ({lowest:.3e})")
    return np.clip(affinity, 0.0, None)


def dist_deltacon(g1: Graph, g2: Graph) -> DistanceValue:
    """Root Euclidean distance between belief-propagation affinity matrices.

    Exact (non-sampled) variant.  Both graphs share the attenuation
    eps = 1 / (1 + max degree over both), which makes the measure
    symmetric by construction.
    """
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    a1, a2 = g1.adjacency(), g2.adjacency()
    dmax = max(a1.sum(axis=1).max(), a2.sum(axis=1).max())
    eps = 1.0 / (1.0 + dmax)
    s1 = _deltacon_affinity(a1, eps)
    s2 = _deltacon_affinity(a2, eps)
    value = math.sqrt(float(((np.sqrt(s1) - np.sqrt(s2)) ** 2).sum()))
    return DistanceValue("deltacon", value)


def _effective_resistances(g: Graph) -> np.ndarray:
    lplus = pseudoinverse(laplacian(g))
    diag = np.diag(lplus)
    return diag[:, None] + diag[None, :] - 2.0 * lplus


def dist_resistance_perturbation(g1: Graph, g2: Graph,
                                 cfg: DistanceConfig | None = None) -> DistanceValue:
    """p-norm of the change in pairwise effective resistances.

    Both graphs must be connected; the sum runs over ordered node pairs.
    """
    cfg = cfg or DistanceConfig()
    _require_undirected(g1, g2)
    _require_same_n(g1, g2)
    for g in (g1, g2):
        if not is_connected(g):
            raise PreconditionError(
                "resistance comparison requires connected graphs")
    off = ~np.eye(g1.n, dtype=bool)
    gap = np.abs(_effective_resistances(g1) - _effective_resistances(g2))[off]
    if cfg.p == 1:
        return DistanceValue("resistance_perturbation", float(gap.sum()))
    return DistanceValue("resistance_perturbation", float(np.sqrt((gap**2).sum())))


# ---------------------------------------------------------------------------
# Local-feature signature comparison
# ---------------------------------------------------------------------------

def _node_features(adj: np.ndarray) -> np.ndarray:
    """Seven per-node features: degree, clustering, mean neighbor degree,
    mean neighbor clustering, ego-net internal / outgoing edge counts, and
    the number of distinct neighbors outside the ego net."""
    n = adj.shape[0]
    deg = adj.sum(axis=1)
    paths2 = adj @ adj
    triangles = (paths2 * adj).sum(axis=1) / 2.0
    denom = deg * (deg - 1.0)
    clustering = np.where(denom > 0, 2.0 * triangles / np.where(denom > 0, denom, 1.0), 0.0)
    mean_nbr_deg = np.where(deg > 0, (adj @ deg) / np.where(deg > 0, deg, 1.0), 0.0)
    mean_nbr_clu = np.where(deg > 0, (adj @ clustering) / np.where(deg > 0, deg, 1.0), 0.0)

    ego_internal = np.empty(n)
    ego_outgoing = np.empty(n)
    ego_out_nbrs = np.empty(n)
    bool_adj = adj.astype(bool)
    for i in range(n):
        ego = bool_adj[i].copy()
        ego[i] = True
        outside = ~ego
        ego_internal[i] = adj[np.ix_(ego, ego)].sum() / 2.0
        crossing = adj[np.ix_(ego, outside)]
        ego_outgoing[i] = crossing.sum()
        ego_out_nbrs[i] = np.count_nonzero(crossing.any(axis=0))
    return np.column_stack([deg, clustering, mean_nbr_deg, mean_nbr_clu,
                            ego_internal, ego_outgoing, ego_out_nbrs])


def _aggregate(feature: np.ndarray) -> np.ndarray:
    """Mean, median, population std, skewness, excess kurtosis of a feature.

    Moment ratios use population moments with the 0/0 -> 0 convention.
    """
    mean = feature.mean()
    centered = feature - mean
    m2 = (centered**2).mean()
    m3 = (centered**3).mean()
    m4 = (centered**4).mean()
    skew = m3 / m2**1.5 if m2 > 0 else 0.0
    kurt = (m4 / m2**2 if m2 > 0 else 0.0) - 3.0
    return np.array([mean, float(np.median(feature)), math.sqrt(m2), skew, kurt])


def netsimile_signature(g: Graph) -> np.ndarray:
    """35-entry signature: five aggregates of each of seven node features."""
    _require_undirected(g)
    features = _node_features(g.adjacency())
    return np.concatenate([_aggregate(features[:, k]) for k in range(features.shape[1])])


def _canberra(x: np.ndarray, y: np.ndarray) -> float:
    scale = np.abs(x) + np.abs(y)
    live = scale > 0
    return float((np.abs(x - y)[live] / scale[live]).sum())


def dist_netsimile(g1: Graph, g2: Graph) -> DistanceValue:
    """Canberra distance between 35-entry local-feature signatures."""
    _require_undirected(g1, g2)
    return DistanceValue("netsimile",
                         _canberra(netsimile_signature(g1), netsimile_signature(g2)))


# ---------------------------------------------------------------------------
# Batch evaluation
# ---------------------------------------------------------------------------

MEASURES: tuple[tuple[str, object], ...] = (
    ("hamming", lambda g1, g2, cfg: dist_hamming(g1, g2)),
    ("jaccard", lambda g1, g2, cfg: dist_jaccard(g1, g2)),
    ("frobenius", lambda g1, g2, cfg: dist_frobenius(g1, g2)),
    ("degree_jsd", lambda g1, g2, cfg: dist_degree_jsd(g1, g2)),
    ("laplacian_spectrum", lambda g1, g2, cfg: dist_laplacian_spectrum(g1, g2)),
    ("ipsen_mikhailov", dist_ipsen_mikhailov),
    ("him", dist_him),
    ("deltacon", lambda g1, g2, cfg: dist_deltacon(g1, g2)),
    ("resistance_perturbation", dist_resistance_perturbation),
    ("netsimile", lambda g1, g2, cfg: dist_netsimile(g1, g2)),
)

MEASURE_NAMES = tuple(name for name, _ in MEASURES)


def compute_distance(name: str, g1: Graph, g2: Graph,
                     cfg: DistanceConfig | None = None) -> DistanceValue:
    """Run one measure by registry name (raises on unknown names)."""
    cfg = cfg or DistanceConfig()
    for reg_name, fn in MEASURES:
        if reg_name == name:
            return fn(g1, g2, cfg)
    raise UnknownMethodError(
        f"unknown distance measure {name!r}; valid measures: {', '.join(MEASURE_NAMES)}")


def distance_all(g1: Graph, g2: Graph,
                 cfg: DistanceConfig | None = None) -> list[MeasureOutcome]:
    """Run every measure; precondition failures become status flags, not errors."""
    cfg = cfg or DistanceConfig()
    outcomes = []
    for name, fn in MEASURES:
        try:
            value = fn(g1, g2, cfg).value
        except PreconditionError as exc:
            outcomes.append(MeasureOutcome(name, "precondition_failed", detail=str(exc)))
        except NumericalError as exc:
            outcomes.append(MeasureOutcome(name, "numerical_failure", detail=str(exc)))
        except ReconetError as exc:
            outcomes.append(MeasureOutcome(name, "error", detail=str(exc)))
        else:
            outcomes.append(MeasureOutcome(name, "ok", value=value))
    return outcomes
