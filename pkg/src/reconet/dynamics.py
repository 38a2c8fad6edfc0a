"""Node-level dynamics simulated on a ground-truth graph.

Every simulator returns an N x L matrix whose row i is the activity of node
i; column 0 is the initial condition drawn inside the simulator from the
seed.  Trajectories are deterministic given (graph, parameters, seed).

Update schemes: the SIS, voter, and walker models update synchronously from
the state at time t.  The Ising model performs one sequential heat-bath
sweep (sites 0..N-1 in order) per recorded step, so that its stationary
law is the Gibbs distribution of the Ising energy; this is what makes the
couplings recoverable from equal-time statistics downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _rng
from .errors import ParameterError, PreconditionError
from .graph import Graph, degrees, laplacian, symmetric_eigen

__all__ = [
    "TimeSeriesMatrix",
    "simulate_ising_glauber",
    "simulate_sis",
    "simulate_voter",
    "simulate_random_walker",
    "simulate_kuramoto",
    "simulate_diffusion",
    "kuramoto_update",
    "DYNAMICS",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TimeSeriesMatrix:
    """N x L activity matrix: row i is node i, column t is timestep t."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 2:
            raise ParameterError(f"time series must be a 2-d matrix, got shape {v.shape}")
        if v.shape[0] < 1 or v.shape[1] < 2:
            raise ParameterError(f"need at least 1 node and 2 timesteps, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ParameterError("time series contains non-finite entries")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n_nodes(self) -> int:
        return self.values.shape[0]

    @property
    def n_steps(self) -> int:
        return self.values.shape[1]


def _check_common(g: Graph, steps: int) -> int:
    if g.directed:
        raise PreconditionError("simulators require an undirected graph")
    steps = int(steps)
    if steps < 2:
        raise ParameterError(f"steps must be >= 2, got {steps}")
    return steps


def _neighbor_table(adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Padded neighbor index table and degree vector for fast row lookups."""
    deg = np.count_nonzero(adj, axis=1)
    table = np.zeros((adj.shape[0], max(int(deg.max()), 1)), dtype=int)
    for i in range(adj.shape[0]):
        nbrs = np.flatnonzero(adj[i])
        table[i, : nbrs.size] = nbrs
    return table, deg


def simulate_ising_glauber(g: Graph, steps: int, seed: int, *,
                           beta: float, coupling: float = 1.0) -> TimeSeriesMatrix:
    """Glauber spin dynamics: heat-bath single-site updates, one sweep per step.

    Spins live in {-1, +1} and start i.i.d. uniform.  A site update flips
    spin i with probability 1 / (1 + exp(2 * beta * s_i * h_i)) where
    h_i = coupling * sum_j w_ij s_j is the instantaneous local field.
    """
    steps = _check_common(g, steps)
    if not math.isfinite(beta) or beta < 0:
        raise ParameterError(f"inverse temperature must be >= 0, got {beta}")
    if not math.isfinite(coupling):
        raise ParameterError("coupling must be finite")
    rng = _rng.generator(seed, _rng.STREAM_ISING)
    n = g.n
    w = g.weights
    s = rng.integers(0, 2, size=n).astype(float) * 2.0 - 1.0
    out = np.empty((n, steps))
    out[:, 0] = s
    h = coupling * (w @ s)
    for t in range(1, steps):
        u = rng.random(n)
        for i in range(n):
            arg = 2.0 * beta * s[i] * h[i]
            if arg > 700.0:
                p_flip = 0.0
            elif arg < -700.0:
                p_flip = 1.0
            else:
                p_flip = 1.0 / (1.0 + math.exp(arg))
            if u[i] < p_flip:
                s[i] = -s[i]
                h += coupling * w[:, i] * (2.0 * s[i])
        out[:, t] = s
    return TimeSeriesMatrix(out)


def simulate_sis(g: Graph, steps: int, seed: int, *,
                 beta_inf: float, mu: float, init_frac: float) -> TimeSeriesMatrix:
    """Susceptible-infected-susceptible contagion with synchronous updates.

    Per step, evaluated from the state at time t: each infected node
    recovers with probability mu; each susceptible node is infected with
    probability 1 - (1 - beta_inf) ** (number of infected neighbors).
    round(init_frac * N) nodes are infected at t = 0.
    """
    steps = _check_common(g, steps)
    for name, value in (("beta_inf", beta_inf), ("mu", mu), ("init_frac", init_frac)):
        if not (math.isfinite(value) and 0.0 <= value <= 1.0):
            raise ParameterError(f"{name} must lie in [0, 1], got {value}")
    rng = _rng.generator(seed, _rng.STREAM_SIS)
    n = g.n
    adj = g.adjacency()
    x = np.zeros(n)
    k = int(round(init_frac * n))
    if k > 0:
        x[rng.choice(n, size=k, replace=False)] = 1.0
    out = np.empty((n, steps))
    out[:, 0] = x
    for t in range(1, steps):
        n_inf = adj @ x
        p_inf = 1.0 - (1.0 - beta_inf) ** n_inf
        infect = rng.random(n) < p_inf
        recover = rng.random(n) < mu
        x = np.where(x == 1.0,
                     np.where(recover, 0.0, 1.0),
                     np.where(infect, 1.0, 0.0))
        out[:, t] = x
    return TimeSeriesMatrix(out)


def simulate_voter(g: Graph, steps: int, seed: int) -> TimeSeriesMatrix:
    """Voter model: each node copies the time-t state of a random neighbor.

    States live in {-1, +1} and start i.i.d. uniform; isolated nodes keep
    their state.  Consensus is absorbing.
    """
    steps = _check_common(g, steps)
    rng = _rng.generator(seed, _rng.STREAM_VOTER)
    n = g.n
    table, deg = _neighbor_table(g.adjacency())
    s = rng.integers(0, 2, size=n).astype(float) * 2.0 - 1.0
    out = np.empty((n, steps))
    out[:, 0] = s
    rows = np.arange(n)
    high = np.maximum(deg, 1)
    for t in range(1, steps):
        pick = rng.integers(0, high)
        s = np.where(deg > 0, s[table[rows, pick]], s)
        out[:, t] = s
    return TimeSeriesMatrix(out)


def simulate_random_walker(g: Graph, steps: int, seed: int) -> TimeSeriesMatrix:
    """Single random walker; row i holds the indicator of the walker at node i.

    The walker starts at a uniformly random node and moves to a uniformly
    random neighbor each step (staying put on an isolated node).  On a
    disconnected graph the walk stays inside its start component.
    """
    steps = _check_common(g, steps)
    rng = _rng.generator(seed, _rng.STREAM_WALKER)
    n = g.n
    neighbors = [np.flatnonzero(row) for row in g.adjacency()]
    pos = int(rng.integers(0, n))
    out = np.zeros((n, steps))
    out[pos, 0] = 1.0
    for t in range(1, steps):
        nbrs = neighbors[pos]
        if nbrs.size:
            pos = int(nbrs[rng.integers(0, nbrs.size)])
        out[pos, t] = 1.0
    return TimeSeriesMatrix(out)


def kuramoto_update(theta: np.ndarray, omega: np.ndarray, weights: np.ndarray,
                    coupling: float, dt: float) -> np.ndarray:
    """One explicit-Euler step of the coupled phase dynamics, wrapped to [0, 2*pi).

    d(theta_i)/dt = omega_i + coupling * sum_j w_ij * sin(theta_j - theta_i)
    """
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    interaction = cos_t * (weights @ sin_t) - sin_t * (weights @ cos_t)
    theta_new = np.mod(theta + dt * (omega + coupling * interaction), _TWO_PI)
    # np.mod of a tiny negative can round up to the modulus itself
    return np.where(theta_new >= _TWO_PI, 0.0, theta_new)


def simulate_kuramoto(g: Graph, steps: int, seed: int, *, coupling: float = 1.0,
                      dt: float = 0.05, omega_spread: float = 0.5) -> TimeSeriesMatrix:
    """Kuramoto phase oscillators integrated with explicit Euler steps.

    Phases start i.i.d. uniform on [0, 2*pi); natural frequencies are
    i.i.d. uniform on [-omega_spread, +omega_spread].  The matrix stores
    raw phases.  Euler integration is adequate at dt <= 0.05; larger steps
    trade fidelity for speed.
    """
    steps = _check_common(g, steps)
    if not (math.isfinite(dt) and dt > 0):
        raise ParameterError(f"dt must be > 0, got {dt}")
    if not math.isfinite(coupling):
        raise ParameterError("coupling must be finite")
    if not (math.isfinite(omega_spread) and omega_spread >= 0):
        raise ParameterError(f"omega_spread must be >= 0, got {omega_spread}")
    rng = _rng.generator(seed, _rng.STREAM_KURAMOTO)
    n = g.n
    theta = rng.uniform(0.0, _TWO_PI, size=n)
    omega = rng.uniform(-omega_spread, omega_spread, size=n)
    out = np.empty((n, steps))
    out[:, 0] = theta
    w = g.weights
    for t in range(1, steps):
        theta = kuramoto_update(theta, omega, w, coupling, dt)
        out[:, t] = theta
    return TimeSeriesMatrix(out)


def simulate_diffusion(g: Graph, steps: int, seed: int, *, eps: float | None = None,
                       noise_sigma: float = 0.0) -> TimeSeriesMatrix:
    """Discrete Laplacian diffusion x(t+1) = (I - eps * L) x(t) + noise.

    The initial state is i.i.d. standard normal.  The default step gain
    eps = 1 / (2 * max_degree) is always stable since the largest
    Laplacian eigenvalue is at most twice the maximum degree.  Noise-free
    runs conserve the node mean exactly up to roundoff.
    """
    steps = _check_common(g, steps)
    if not (math.isfinite(noise_sigma) and noise_sigma >= 0):
        raise ParameterError(f"noise_sigma must be >= 0, got {noise_sigma}")
    lap = laplacian(g)
    if eps is None:
        dmax = int(degrees(g).max())
        eps = 1.0 / (2.0 * dmax) if dmax > 0 else 0.5
    if not (math.isfinite(eps) and eps > 0):
        raise ParameterError(f"eps must be > 0, got {eps}")
    lam_max = symmetric_eigen(lap).eigenvalues[-1]
    if eps * lam_max >= 2.0:
        raise ParameterError(
            f"unstable step gain: eps * lambda_max = {eps * lam_max:.3g} >= 2")
    rng = _rng.generator(seed, _rng.STREAM_DIFFUSION)
    n = g.n
    x = rng.standard_normal(n)
    out = np.empty((n, steps))
    out[:, 0] = x
    step_matrix = np.eye(n) - eps * lap
    for t in range(1, steps):
        x = step_matrix @ x
        if noise_sigma > 0:
            x = x + noise_sigma * rng.standard_normal(n)
        out[:, t] = x
    return TimeSeriesMatrix(out)


# name -> simulator; model parameters are the keyword-only arguments.
DYNAMICS = {
    "ising_glauber": simulate_ising_glauber,
    "sis": simulate_sis,
    "voter": simulate_voter,
    "random_walker": simulate_random_walker,
    "kuramoto": simulate_kuramoto,
    "diffusion": simulate_diffusion,
}
