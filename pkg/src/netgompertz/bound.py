"""Closed-form worst-case bound on the SIS dynamics.

Tangent-line bounding of the surprisal ODE's nonlinearities yields an
affine system dI/dt = S I + f whose solution dominates the exact
surprisal at every node and time.  The system matrix shares the
adjacency eigenbasis, so all evaluations here are per-mode: each mode nu
contributes amplitude_nu * (exp(rate_nu * t) - 1), with

    rate_nu      = q*beta*lambda_nu - gamma/q
    amplitude_nu = p*(1 - q*beta_e*lambda_nu) / (1 - q^2*beta_e*lambda_nu)

(amplitude_nu -> p/q in the no-recovery limit gamma = 0).  Matrix
exponentials are always evaluated spectrally, never by series.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import Trajectory
from .errors import NumericalError, SingularModeError, ValidationError
from .graphs import Graph
from .params import EpidemicParams
from .spectral import SpectralData, katz_centrality

RESONANCE_TOL = 1e-12


@dataclass(frozen=True)
class BoundSystem:
    """Assembled affine system for the worst-case surprisal bound.

    Attributes:
        params, spectral: the inputs.
        system_matrix: q*beta*A - (gamma/q)*I (symmetric).
        forcing: [(p + q*log q)*beta*A - (p + log q)*(gamma/q)*I] @ ones.
        resolvent_matrix: I - q^2*beta_e*A; None in the gamma = 0 limit
            where beta_e is undefined.
        mode_rates: eigenvalues of system_matrix, aligned with
            spectral.eigenvalues.
        ones_coeffs: the all-ones vector in the eigenbasis.
    """

    params: EpidemicParams
    spectral: SpectralData
    system_matrix: np.ndarray
    forcing: np.ndarray
    resolvent_matrix: np.ndarray | None
    mode_rates: np.ndarray
    ones_coeffs: np.ndarray

    @property
    def n(self) -> int:
        return self.spectral.n


def build_system(spectral: SpectralData, params: EpidemicParams) -> BoundSystem:
    """Assemble the bound system for one graph spectrum and parameter set."""
    lam = spectral.eigenvalues
    vectors = spectral.eigenvectors
    p, q, beta, gamma = params.p, params.q, params.beta, params.gamma
    log_q = np.log(q)

    adjacency = (vectors * lam) @ vectors.T
    identity = np.eye(spectral.n)
    degree_vector = adjacency @ np.ones(spectral.n)

    system_matrix = q * beta * adjacency - (gamma / q) * identity
    forcing = (p + q * log_q) * beta * degree_vector - (p + log_q) * (gamma / q) * np.ones(spectral.n)
    resolvent_matrix = None
    if gamma > 0.0:
        resolvent_matrix = identity - q**2 * params.beta_e * adjacency

    mode_rates = q * beta * lam - gamma / q
    ones_coeffs = vectors.sum(axis=0)
    return BoundSystem(
        params=params,
        spectral=spectral,
        system_matrix=system_matrix,
        forcing=forcing,
        resolvent_matrix=resolvent_matrix,
        mode_rates=mode_rates,
        ones_coeffs=ones_coeffs,
    )


def mode_amplitudes(spectral: SpectralData, params: EpidemicParams) -> np.ndarray:
    """Per-mode amplitude of the bound's exponential response.

    Raises:
        SingularModeError: some mode satisfies q^2*beta_e*lambda_nu = 1
            (within 1e-12), where the affine system is not invertible.
            No limit formula is substituted.
    """
    lam = spectral.eigenvalues
    p, q = params.p, params.q
    if params.gamma == 0.0:
        return np.full(spectral.n, p / q)
    beta_e = params.beta_e
    denominator = 1.0 - q**2 * beta_e * lam
    resonant = np.flatnonzero(np.abs(denominator) < RESONANCE_TOL)
    if resonant.size:
        nu = int(resonant[0])
        raise SingularModeError(
            f"singular mode {nu}: q^2*beta_e*lambda = 1 for lambda={lam[nu]:.12g}"
        )
    return p * (1.0 - q * beta_e * lam) / denominator


def _surprisal_grid(system: BoundSystem, t_grid: np.ndarray) -> np.ndarray:
    """Bound surprisal on a grid, shape (n_times, n_nodes)."""
    amplitudes = mode_amplitudes(system.spectral, system.params)
    response = np.expm1(np.outer(system.mode_rates, t_grid))
    coeffs = (amplitudes * system.ones_coeffs)[:, None] * response
    if not np.all(np.isfinite(coeffs)):
        raise NumericalError("bound evaluation overflowed; reduce t")
    return (system.spectral.eigenvectors @ coeffs).T - np.log(system.params.q)


def bound_surprisal(system: BoundSystem, t: float) -> np.ndarray:
    """Worst-case surprisal at time t, per-mode evaluation.

    Exactly -log(q) everywhere at t = 0.  In the no-recovery limit the
    same evaluation reduces to (p/q)*exp(q*beta*A*t) @ ones
    - (p/q + log q), and with beta = 0 to p*(exp(-gamma*t/q) - 1)
    - log q.
    """
    if t < 0.0:
        raise ValidationError(f"time must be nonnegative, got {t}")
    return _surprisal_grid(system, np.array([float(t)]))[0]


def bound_surprisal_affine(system: BoundSystem, t: float) -> np.ndarray:
    """Homogeneous-plus-particular evaluation of the same bound.

    exp(S t) I0 + (exp(S t) - I) S^-1 f, with S^-1 f computed by
    per-mode division.  Requires an invertible system matrix; agrees
    with bound_surprisal wherever both are defined.

    Raises:
        SingularModeError: a zero mode rate makes S^-1 undefined.
    """
    if t < 0.0:
        raise ValidationError(f"time must be nonnegative, got {t}")
    vectors = system.spectral.eigenvectors
    rates = system.mode_rates
    rate_scale = float(np.abs(rates).max())
    zero_modes = np.flatnonzero(np.abs(rates) < RESONANCE_TOL * max(1.0, rate_scale))
    if zero_modes.size:
        nu = int(zero_modes[0])
        raise SingularModeError(f"singular mode {nu}: system matrix has a zero eigenvalue")
    forcing_coeffs = vectors.T @ system.forcing
    particular = forcing_coeffs / rates
    initial_coeffs = -np.log(system.params.q) * system.ones_coeffs
    coeffs = np.exp(rates * t) * initial_coeffs + np.expm1(rates * t) * particular
    return vectors @ coeffs


def bound_surprisal_katz(system: BoundSystem, graph: Graph, t: float) -> np.ndarray:
    """Bound surprisal expressed through Katz centralities.

    p * [exp(-(gamma/q) D t) - I] @ (ones - (p/q) c) - log(q), where D is
    the resolvent matrix and c the Katz vector at attenuation
    q^2*beta_e.  Only valid below threshold, 0 < q^2*beta_e < 1/lambda_1,
    where the resolvent series converges.
    """
    if t < 0.0:
        raise ValidationError(f"time must be nonnegative, got {t}")
    params = system.params
    if params.gamma == 0.0:
        raise ValidationError("Katz form requires gamma > 0")
    centrality = katz_centrality(graph, params.q**2 * params.beta_e)
    direction = np.ones(system.n) - (params.p / params.q) * centrality
    vectors = system.spectral.eigenvectors
    coeffs = np.expm1(system.mode_rates * t) * (vectors.T @ direction)
    return params.p * (vectors @ coeffs) - np.log(params.q)


def bound_probability(system: BoundSystem, t_grid: np.ndarray) -> Trajectory:
    """Worst-case infection probabilities 1 - exp(-surprisal) on a grid."""
    grid = np.asarray(t_grid, dtype=float)
    if grid.size and float(grid[0]) < 0.0:
        raise ValidationError("time grid must be nonnegative")
    values = -np.expm1(-_surprisal_grid(system, grid))
    return Trajectory("bound", grid, values)


def decay_limit_probability(params: EpidemicParams) -> float:
    """Long-time infection probability of the bound when beta = 0.

    Returns 1 - q*exp(p), which lies strictly between 0 and p and
    vanishes quadratically as p -> 0.
    """
    if params.beta != 0.0:
        raise ValidationError("decay limit applies to beta = 0 only")
    return float(-np.expm1(params.p + np.log1p(-params.p)))
