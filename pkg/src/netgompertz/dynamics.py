"""Time integration of the networked SIS model and its transforms.

Three per-node quantities are produced here:

  * the exact SIS infection probabilities x_i(t), integrated with
    classical fixed-step RK4,
  * the same dynamics rewritten in surprisal variables
    I_i = -log(1 - x_i), integrated directly as a consistency route,
  * the solution of the linearization around zero,
    exp[(beta*A - gamma*I) t] x0, evaluated spectrally because it grows
    exponentially and stepping it would be pointless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IntegrationError, ValidationError
from .graphs import Graph
from .params import EpidemicParams
from .spectral import SpectralData

MODELS = ("sis", "icsis", "bound", "linearized", "gompertz")

DEFAULT_T_MAX = 150.0
DEFAULT_DT = 0.01

SIS_RANGE_SLACK = 1e-9


@dataclass(frozen=True)
class Trajectory:
    """Per-node values on a uniform time grid.

    values[k, i] is node i at time t[k].  For the sis, bound, and
    gompertz models these are infection probabilities; for icsis they
    are surprisals (nonnegative, unbounded); for linearized they may
    exceed 1 by design.
    """

    model: str
    t: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValidationError(f"unknown model {self.model!r}, expected one of {MODELS}")
        if self.t.ndim != 1 or self.values.ndim != 2 or self.values.shape[0] != self.t.shape[0]:
            raise ValidationError("trajectory arrays have inconsistent shapes")
        if self.t.shape[0] >= 2:
            steps = np.diff(self.t)
            if np.any(steps <= 0.0):
                raise ValidationError("time grid must be strictly increasing")
            tol = 1e-12 * max(1.0, abs(float(self.t[-1])))
            if float(np.abs(steps - steps[0]).max()) > tol:
                raise ValidationError("time grid must be uniform")
        self.t.setflags(write=False)
        self.values.setflags(write=False)

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])

    @property
    def n_nodes(self) -> int:
        return self.values.shape[1]


def time_grid(t_max: float, dt: float) -> np.ndarray:
    """Uniform grid 0, dt, ..., ~t_max."""
    if dt <= 0.0 or t_max <= 0.0:
        raise ValidationError(f"need dt > 0 and t_max > 0, got dt={dt}, t_max={t_max}")
    n_steps = int(round(t_max / dt))
    if n_steps < 1:
        raise ValidationError(f"t_max={t_max} is below one step of dt={dt}")
    return np.arange(n_steps + 1) * dt


def surprisal(x):
    """Information content -log(1 - x) of infection probability x in [0, 1)."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0) or np.any(arr >= 1.0):
        raise ValidationError("surprisal requires 0 <= x < 1")
    out = -np.log1p(-arr)
    return float(out) if np.isscalar(x) else out


def from_surprisal(value):
    """Inverse transform, x = 1 - exp(-I) for I >= 0."""
    arr = np.asarray(value, dtype=float)
    if np.any(arr < 0.0):
        raise ValidationError("surprisal values are nonnegative")
    out = -np.expm1(-arr)
    return float(out) if np.isscalar(value) else out


def _rk4(deriv, y0: np.ndarray, grid: np.ndarray, check) -> np.ndarray:
    dt = float(grid[1] - grid[0])
    out = np.empty((grid.shape[0], y0.shape[0]))
    y = y0.astype(float, copy=True)
    out[0] = y
    check(y, float(grid[0]))
    for k in range(1, grid.shape[0]):
        k1 = deriv(y)
        k2 = deriv(y + 0.5 * dt * k1)
        k3 = deriv(y + 0.5 * dt * k2)
        k4 = deriv(y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        check(y, float(grid[k]))
        out[k] = y
    return out


def integrate_sis(
    graph: Graph,
    params: EpidemicParams,
    t_max: float = DEFAULT_T_MAX,
    dt: float = DEFAULT_DT,
    x0: np.ndarray | None = None,
) -> Trajectory:
    """Fixed-step RK4 for dx_i/dt = beta*(1 - x_i)*sum_j A_ij x_j - gamma*x_i.

    Starts from the uniform state x(0) = p unless x0 is given (test hook).
    Values are never clipped; leaving [0, 1] beyond a 1e-9 slack raises.

    Raises:
        IntegrationError: values left [0, 1]; reduce dt.
    """
    a = graph.adjacency
    beta, gamma = params.beta, params.gamma
    grid = time_grid(t_max, dt)
    start = np.full(graph.n, params.p) if x0 is None else np.asarray(x0, dtype=float)
    if start.shape != (graph.n,):
        raise ValidationError(f"x0 must have shape ({graph.n},)")

    def deriv(x: np.ndarray) -> np.ndarray:
        return beta * (1.0 - x) * (a @ x) - gamma * x

    def check(x: np.ndarray, t: float) -> None:
        if float(x.min()) < -SIS_RANGE_SLACK or float(x.max()) > 1.0 + SIS_RANGE_SLACK:
            raise IntegrationError(f"integrator instability at t={t:g}: reduce dt")

    return Trajectory("sis", grid, _rk4(deriv, start, grid, check))


def integrate_icsis(
    graph: Graph,
    params: EpidemicParams,
    t_max: float = DEFAULT_T_MAX,
    dt: float = DEFAULT_DT,
) -> Trajectory:
    """Fixed-step RK4 for the surprisal form of the SIS dynamics.

    dI_i/dt = beta * sum_j A_ij (1 - exp(-I_j)) - gamma * (exp(I_i) - 1),
    starting from I(0) = -log(q) everywhere.  The returned trajectory
    carries surprisal values.

    Raises:
        IntegrationError: exp(I) overflowed; reduce dt.
    """
    a = graph.adjacency
    beta, gamma = params.beta, params.gamma
    grid = time_grid(t_max, dt)
    start = np.full(graph.n, -np.log(params.q))

    def deriv(i_values: np.ndarray) -> np.ndarray:
        return beta * (a @ (-np.expm1(-i_values))) - gamma * np.expm1(i_values)

    def check(i_values: np.ndarray, t: float) -> None:
        if not np.all(np.isfinite(i_values)):
            raise IntegrationError(f"integrator instability (overflow) at t={t:g}: reduce dt")

    return Trajectory("icsis", grid, _rk4(deriv, start, grid, check))


def linearized_solution(
    spectral: SpectralData,
    params: EpidemicParams,
    t_grid: np.ndarray,
) -> Trajectory:
    """Solution of the linearization around zero, evaluated per mode.

    x(t) = M diag(exp[(beta*lambda_nu - gamma) t]) M^T (p * ones).  No
    clipping: exponential divergence above threshold is the expected
    behavior of this reference solution.
    """
    grid = np.asarray(t_grid, dtype=float)
    rates = params.beta * spectral.eigenvalues - params.gamma
    ones_coeffs = spectral.eigenvectors.sum(axis=0)
    growth = np.exp(np.outer(rates, grid)) * (params.p * ones_coeffs)[:, None]
    values = (spectral.eigenvectors @ growth).T
    return Trajectory("linearized", grid, values)
