"""
Exception hierarchy for springer_gln.

Every domain error derives from SpringerError, itself a ValueError, so callers
that only know about ValueError keep working.
"""


class SpringerError(ValueError):
    """Base class for all domain errors."""


class PartitionError(SpringerError):
    """Invalid partition input or a partition operation that cannot be performed."""


class LabelError(SpringerError):
    """Base class for label grammar errors."""


class LabelSyntaxError(LabelError):
    """Label text does not conform to the grammar."""

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position}: {text!r}")


class LabelSemanticError(LabelError):
    """Label text parses but names no valid orbit or local system."""


class GammaError(SpringerError):
    """A partition mu does not label an element of the requested series."""


class ProcedureError(SpringerError):
    """A diagram procedure was used where it does not apply."""


class NotNilpotentError(SpringerError):
    """A matrix expected to be nilpotent is not."""


class ConfigError(SpringerError):
    """Settings file is unreadable or contains unknown keys."""


class VerificationError(SpringerError):
    """An internal consistency check failed.

    Attributes:
        failures: List of offending items, in the order they were found
    """

    def __init__(self, message, failures=None):
        self.failures = list(failures or [])
        super().__init__(message)
