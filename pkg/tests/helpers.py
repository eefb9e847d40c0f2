"""Shared numeric helpers for the test suite (not collected by pytest)."""

from __future__ import annotations

import numpy as np

from netgompertz import (
    EpidemicParams,
    bound_surprisal,
    net_gompertz_susceptible,
    threshold_tau,
)


def bound_susceptible(system, t: float) -> np.ndarray:
    return np.exp(-bound_surprisal(system, t))


def gompertz_susceptible_at(ngp, t: float) -> np.ndarray:
    return net_gompertz_susceptible(ngp, np.array([t]))[0]


def asymptotic_onset(system, ngp, tol: float = 1e-6, t0: float = 10.0, cap: float = 1e4):
    """Smallest doubling time from t0 at which the bound's susceptible
    probabilities match the Gompertz curve within tol, ratio-wise.

    Returns None if the cap is hit (a test failure with diagnostics).
    """
    t = t0
    while t <= cap:
        ratio = bound_susceptible(system, t) / gompertz_susceptible_at(ngp, t)
        if np.abs(ratio - 1.0).max() < tol:
            return t
        t *= 2.0
    return None


def gompertz_regime_params(rng, spectral, p_range=(0.03, 0.15)) -> EpidemicParams:
    """Parameters strictly inside the Gompertz regime, beta_e = half of q*tau."""
    p = float(rng.uniform(*p_range))
    gamma = float(rng.uniform(0.05, 0.3))
    probe = EpidemicParams(beta=gamma, gamma=gamma, p=p)
    q_tau = threshold_tau(spectral, probe).q_tau
    beta_e = 0.5 * q_tau
    return EpidemicParams(beta=beta_e * gamma, gamma=gamma, p=p)


def supercritical_params(rng, spectral, factor_range=(1.2, 1.6), p=0.01) -> EpidemicParams:
    """Mildly supercritical parameters with a small seed probability."""
    gamma = float(rng.uniform(0.02, 0.1))
    probe = EpidemicParams(beta=gamma, gamma=gamma, p=p)
    tau = threshold_tau(spectral, probe).tau
    beta_e = float(rng.uniform(*factor_range)) * tau
    return EpidemicParams(beta=beta_e * gamma, gamma=gamma, p=p)
