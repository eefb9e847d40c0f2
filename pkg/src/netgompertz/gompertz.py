"""Gompertz growth curves, scalar and networked.

The scalar curve P*exp(-Q*exp(-R*t)) is the classical asymmetric growth
law with inflection at (log(Q)/R, P/e); the logistic solution of the
scalar SIS reduction is provided alongside as the symmetric reference.

The networked version arises as the large-time limit of the worst-case
SIS bound below the Gompertz-regime boundary beta_e < q*tau: per node,
the susceptible probability tends to

    s_i(t) ~ P_i * exp(-Q_i * exp(-R*t))

with P_i = q*exp(sum_nu amplitude_nu * weight_nu(i)),
Q_i = amplitude_1 * weight_1(i), and a single global rate
R = (gamma/q)*(1 - q^2*beta_e*lambda_1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bound import mode_amplitudes
from .dynamics import Trajectory
from .errors import ValidationError
from .params import EpidemicParams
from .spectral import Regime, SpectralData, classify_regime, threshold_tau


@dataclass(frozen=True)
class ScalarGompertz:
    """One scalar Gompertz curve asymptote*exp(-shape*exp(-rate*t))."""

    asymptote: float
    shape: float
    rate: float

    def __post_init__(self) -> None:
        if self.asymptote <= 0.0 or self.shape <= 0.0 or self.rate <= 0.0:
            raise ValidationError("Gompertz parameters must all be positive")

    def value(self, t):
        return self.asymptote * np.exp(-self.shape * np.exp(-self.rate * np.asarray(t, dtype=float)))

    def density(self, t):
        decay = self.shape * self.rate * np.exp(-self.rate * np.asarray(t, dtype=float))
        return self.value(t) * decay

    @property
    def inflection_time(self) -> float:
        return math.log(self.shape) / self.rate

    @property
    def inflection_value(self) -> float:
        return self.asymptote / math.e


def scalar_gompertz(asymptote: float, shape: float, rate: float, t):
    """Curve value P*exp(-Q*exp(-R*t))."""
    return ScalarGompertz(asymptote, shape, rate).value(t)


def scalar_gompertz_density(asymptote: float, shape: float, rate: float, t):
    """Time derivative, value * Q * R * exp(-R*t)."""
    return ScalarGompertz(asymptote, shape, rate).density(t)


def scalar_logistic(n0: float, n_inf: float, rate: float, t):
    """Logistic solution of dN/dt = rate*N*(1 - N/n_inf) with N(0) = n0."""
    if not 0.0 < n0 < n_inf:
        raise ValidationError(f"logistic requires 0 < n0 < n_inf, got n0={n0}, n_inf={n_inf}")
    if rate <= 0.0:
        raise ValidationError(f"logistic rate must be positive, got {rate}")
    ratio = n_inf / n0 - 1.0
    return n_inf / (1.0 + ratio * np.exp(-rate * np.asarray(t, dtype=float)))


def logistic_inflection(n0: float, n_inf: float, rate: float) -> tuple[float, float]:
    """Inflection point (time, value) of the logistic curve."""
    if not 0.0 < n0 < n_inf:
        raise ValidationError(f"logistic requires 0 < n0 < n_inf, got n0={n0}, n_inf={n_inf}")
    return math.log(n_inf / n0 - 1.0) / rate, n_inf / 2.0


@dataclass(frozen=True)
class NetGompertzParams:
    """Per-node Gompertz parameters induced by a graph spectrum.

    Attributes:
        plateau: per-node asymptotic susceptible probability P_i.
        shape: per-node shape Q_i (positive iff the instance is in the
            Gompertz regime, given positive Perron weights).
        rate: global rate R; positive below threshold, negative above.
        amplitudes: per-mode amplitudes entering plateau and shape.
        perron_weights: first-mode weights, proportional to eigenvector
            centrality.
        tau, q_tau: the spectral thresholds for this instance.
        regime: regime classification of the parameter point.
    """

    plateau: np.ndarray
    shape: np.ndarray
    rate: float
    amplitudes: np.ndarray
    perron_weights: np.ndarray
    tau: float
    q_tau: float
    regime: Regime

    @property
    def susceptible_limit(self) -> np.ndarray:
        """Alias for plateau: the t -> infinity susceptible probability."""
        return self.plateau


def net_gompertz_params(spectral: SpectralData, params: EpidemicParams) -> NetGompertzParams:
    """Networked Gompertz parameters for one spectrum and parameter set.

    Computed in every regime for diagnostics; only the Gompertz regime
    certifies shape > 0 and a positive rate.  Requires gamma > 0.
    """
    if params.gamma <= 0.0:
        raise ValidationError("networked Gompertz parameters require gamma > 0")
    amplitudes = mode_amplitudes(spectral, params)
    weights = spectral.mode_weights
    q = params.q
    rate = (params.gamma / q) * (1.0 - q**2 * params.beta_e * spectral.spectral_radius)
    plateau = q * np.exp(amplitudes @ weights)
    shape = amplitudes[0] * weights[0]
    thresholds = threshold_tau(spectral, params)
    regime = classify_regime(spectral, params)
    return NetGompertzParams(
        plateau=plateau,
        shape=shape,
        rate=rate,
        amplitudes=amplitudes,
        perron_weights=weights[0].copy(),
        tau=thresholds.tau,
        q_tau=thresholds.q_tau,
        regime=regime,
    )


def net_gompertz_susceptible(ngp: NetGompertzParams, t_grid: np.ndarray) -> np.ndarray:
    """Susceptible probabilities plateau*exp(-shape*exp(-rate*t)).

    Shape (n_times, n_nodes).  Refuses outside the Gompertz regime,
    where the shape parameter changes sign and the curve is no longer a
    Gompertz function.
    """
    if ngp.regime is not Regime.GOMPERTZ:
        raise ValidationError(
            f"Gompertz curve is only defined in the Gompertz regime, regime is {ngp.regime.value}"
        )
    grid = np.asarray(t_grid, dtype=float)
    decay = np.exp(-ngp.rate * grid)
    return ngp.plateau[None, :] * np.exp(-ngp.shape[None, :] * decay[:, None])


def net_gompertz_trajectory(ngp: NetGompertzParams, t_grid: np.ndarray) -> Trajectory:
    """Infected-probability trajectory 1 - susceptible, Gompertz regime only."""
    grid = np.asarray(t_grid, dtype=float)
    return Trajectory("gompertz", grid, 1.0 - net_gompertz_susceptible(ngp, grid))


def supercritical_asymptote(spectral: SpectralData, params: EpidemicParams, t: float) -> np.ndarray:
    """Single-mode approximation of the bound's susceptible probability
    above threshold: q*exp(-amplitude_1*weight_1(i)*exp(-R*t)) with R < 0.

    Tends to zero entrywise; the corresponding infection probabilities
    tend to one.
    """
    regime = classify_regime(spectral, params)
    if regime is not Regime.SUPERCRITICAL:
        raise ValidationError(f"supercritical asymptote requires the supercritical regime, got {regime.value}")
    q = params.q
    lam1 = spectral.spectral_radius
    denominator = 1.0 - q**2 * params.beta_e * lam1
    amplitude_1 = params.p * (1.0 - q * params.beta_e * lam1) / denominator
    rate = (params.gamma / q) * denominator
    return q * np.exp(-amplitude_1 * spectral.mode_weights[0] * math.exp(-rate * t))


def inflection_times(ngp: NetGompertzParams) -> np.ndarray:
    """Per-node inflection time log(shape_i)/rate of the Gompertz curve.

    This is where each node's infection density is extremal; it grows
    with the node's Perron weight, so more central nodes peak later.
    Negative times are legal (the curve is already past its inflection
    at t = 0).
    """
    if ngp.regime is not Regime.GOMPERTZ:
        raise ValidationError(
            f"inflection times require the Gompertz regime, regime is {ngp.regime.value}"
        )
    if np.any(ngp.shape <= 0.0):
        raise ValidationError("inflection times require positive shape parameters")
    return np.log(ngp.shape) / ngp.rate
