"""Epidemic rate parameters shared by every model."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class EpidemicParams:
    """Infection rate, recovery rate, and uniform initial infection probability.

    Attributes:
        beta: per-contact infection rate (1/time), >= 0.
        gamma: recovery rate (1/time), >= 0.  beta and gamma may not both
            be zero.
        p: initial probability that any node is infected, 0 < p < 1.
    """

    beta: float
    gamma: float
    p: float

    def __post_init__(self) -> None:
        if not 0.0 < self.p < 1.0:
            raise ValidationError(f"initial probability must satisfy 0 < p < 1, got p={self.p}")
        if self.beta < 0.0 or self.gamma < 0.0:
            raise ValidationError(f"rates must be nonnegative, got beta={self.beta}, gamma={self.gamma}")
        if self.beta == 0.0 and self.gamma == 0.0:
            raise ValidationError("beta and gamma may not both be zero")

    @property
    def q(self) -> float:
        """Initial probability of being susceptible, 1 - p."""
        return 1.0 - self.p

    @property
    def beta_e(self) -> float:
        """Effective infectivity beta/gamma; defined only when gamma > 0."""
        if self.gamma == 0.0:
            raise ValidationError("effective infectivity beta/gamma is undefined for gamma = 0")
        return self.beta / self.gamma
