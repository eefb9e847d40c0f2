"""Exception hierarchy.

The CLI maps ValidationError to exit code 1 and NumericalError to exit
code 2; everything else is a bug and propagates.
"""


class NetGompertzError(Exception):
    """Base class for all package errors."""


class ValidationError(NetGompertzError):
    """Bad input: files, parameters, or preconditions."""


class LoadError(ValidationError):
    """Malformed edge list or attribute file."""


class NumericalError(NetGompertzError):
    """A computation failed or is numerically meaningless."""


class IntegrationError(NumericalError):
    """ODE integration left its admissible range."""


class SingularModeError(NumericalError):
    """A spectral mode makes the linear bound system non-invertible."""


class DegenerateThresholdError(NumericalError):
    """Effective infectivity sits exactly on a regime boundary."""
