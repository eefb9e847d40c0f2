"""Adjacency spectrum and spectrum-derived epidemic quantities.

Everything downstream (the worst-case bound, the network Gompertz curve,
the linearized solution) is evaluated in the orthonormal eigenbasis of
the adjacency matrix, so the decomposition here is full and validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateThresholdError, NumericalError, ValidationError
from .graphs import Graph
from .params import EpidemicParams

ORTHONORMALITY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-8
MODE_WEIGHT_TOL = 1e-10
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class SpectralData:
    """Full symmetric eigendecomposition of an adjacency matrix.

    Attributes:
        eigenvalues: sorted descending, shape (n,).
        eigenvectors: orthonormal columns matching eigenvalue order,
            shape (n, n).  Column 0 is the nonnegative Perron vector;
            later columns have their first nonzero component positive.
        mode_weights: mode_weights[nu, i] = psi_nu(i) * sum_j psi_nu(j).
            Invariant under per-column sign flips; sums to 1 over nu for
            every node, and row 0 is strictly positive on connected
            graphs.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    mode_weights: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def spectral_radius(self) -> float:
        return float(self.eigenvalues[0])


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Deterministic sign convention, column by column."""
    vectors = vectors.copy()
    if vectors[:, 0].sum() < 0.0:
        vectors[:, 0] = -vectors[:, 0]
    for nu in range(1, vectors.shape[1]):
        col = vectors[:, nu]
        support = np.flatnonzero(np.abs(col) > 1e-12 * np.abs(col).max())
        if support.size and col[support[0]] < 0.0:
            vectors[:, nu] = -col
    return vectors


def decompose(graph: Graph) -> SpectralData:
    """Eigendecompose the adjacency matrix, validating the result.

    Raises:
        NumericalError: solver non-convergence or residuals beyond
            tolerance (the message carries the residual norm).
    """
    a = graph.adjacency
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver did not converge: {exc}") from None

    order = np.argsort(values)[::-1]
    values = values[order]
    vectors = _fix_signs(vectors[:, order])

    identity = np.eye(graph.n)
    ortho_residual = float(np.abs(vectors.T @ vectors - identity).max())
    if ortho_residual >= ORTHONORMALITY_TOL:
        raise NumericalError(f"eigenvectors not orthonormal, residual {ortho_residual:.3e}")
    recon_residual = float(np.abs(a - (vectors * values) @ vectors.T).max())
    if recon_residual >= RECONSTRUCTION_TOL:
        raise NumericalError(f"spectral reconstruction failed, residual {recon_residual:.3e}")

    column_sums = vectors.sum(axis=0)
    weights = (vectors * column_sums).T
    weight_residual = float(np.abs(weights.sum(axis=0) - 1.0).max())
    if weight_residual >= MODE_WEIGHT_TOL:
        raise NumericalError(f"mode weights do not resolve unity, residual {weight_residual:.3e}")

    values.setflags(write=False)
    vectors.setflags(write=False)
    weights.setflags(write=False)
    return SpectralData(values, vectors, weights)


@dataclass(frozen=True)
class Thresholds:
    """Epidemic threshold tau = 1/(q^2 lambda_1) and the stricter
    Gompertz-regime boundary q*tau."""

    tau: float
    q_tau: float


def threshold_tau(spectral: SpectralData, params: EpidemicParams) -> Thresholds:
    """Threshold of the worst-case bound; requires gamma > 0."""
    if params.gamma <= 0.0:
        raise ValidationError("threshold requires gamma > 0")
    lam1 = spectral.spectral_radius
    assert lam1 > 0.0, "connected graph on >= 2 nodes has positive spectral radius"
    tau = 1.0 / (params.q**2 * lam1)
    return Thresholds(tau=tau, q_tau=params.q * tau)


class Regime(Enum):
    """Long-time behavior class of the worst-case bound."""

    GOMPERTZ = "gompertz"
    BOUNDED_NON_GOMPERTZ = "bounded_non_gompertz"
    SUPERCRITICAL = "supercritical"
    SI_LIMIT = "si_limit"
    DECAY_LIMIT = "decay_limit"


def classify_regime(spectral: SpectralData, params: EpidemicParams) -> Regime:
    """Classify the parameter point against the spectral thresholds.

    Raises:
        DegenerateThresholdError: beta_e within 1e-12 of either boundary;
            classification there would not be robust.
    """
    if params.gamma == 0.0:
        return Regime.SI_LIMIT
    if params.beta == 0.0:
        return Regime.DECAY_LIMIT
    thresholds = threshold_tau(spectral, params)
    beta_e = params.beta_e
    if abs(beta_e - thresholds.q_tau) < BOUNDARY_TOL or abs(beta_e - thresholds.tau) < BOUNDARY_TOL:
        raise DegenerateThresholdError(
            f"degenerate: at threshold (beta_e={beta_e}, q_tau={thresholds.q_tau}, tau={thresholds.tau})"
        )
    if beta_e < thresholds.q_tau:
        return Regime.GOMPERTZ
    if beta_e < thresholds.tau:
        return Regime.BOUNDED_NON_GOMPERTZ
    return Regime.SUPERCRITICAL


def katz_centrality(graph: Graph, alpha: float) -> np.ndarray:
    """Walk-counting centrality c = [(I - alpha*A)^-1 - I] @ ones.

    Solved as a linear system with partial pivoting; no explicit inverse.
    Entries are strictly positive for 0 < alpha < 1/lambda_1.

    Raises:
        ValidationError: alpha outside (0, 1/lambda_1 - 1e-12), where the
            resolvent series does not converge.
    """
    a = graph.adjacency
    lam1 = float(np.linalg.eigvalsh(a)[-1])
    if alpha <= 0.0:
        raise ValidationError(f"attenuation must be positive, got {alpha}")
    if alpha >= 1.0 / lam1 - 1e-12:
        raise ValidationError(
            f"resolvent out of convergence region: alpha={alpha} >= 1/lambda_1={1.0 / lam1}"
        )
    ones = np.ones(graph.n)
    resolvent_ones = np.linalg.solve(np.eye(graph.n) - alpha * a, ones)
    return resolvent_ones - ones
