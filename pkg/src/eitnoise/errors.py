"""Exception types raised by the simulation pipeline."""


class EITError(Exception):
    """Base class for all errors raised by :mod:`eitnoise`."""


class UndefinedStateError(EITError):
    """No unique stationary atomic state exists for the requested drive."""


class InconsistentStateError(EITError):
    """Mean values are not stationary under the supplied drive."""


class UnsupportedFeatureError(EITError):
    """A parameter outside the modelled regime was requested (e.g. complex squeezing)."""


class ConsistencyError(EITError):
    """A derived quantity violated an internal consistency check."""


class IntegrationError(EITError):
    """Covariance propagation produced non-finite values.

    Attributes
    ----------
    position : float
        Position (in units of gamma/C) at which the failure was detected.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class LimitEvaluationWarning(UserWarning):
    """The atomic response was singular and the generator was evaluated as a limit."""
