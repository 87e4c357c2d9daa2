"""Exception hierarchy.

The CLI maps `ParseError` and `LimitExceeded` to exit code 2 and
`TheoremViolation` to exit code 3.
"""


class OMError(Exception):
    """Base class for all package errors."""


class ParseError(OMError, ValueError):
    pass


class PreconditionError(OMError, ValueError):
    pass


class LimitExceeded(OMError):
    """An enumeration would exceed the configured size limits."""


class TheoremViolation(OMError):
    """A search that a theorem guarantees to succeed came back empty.

    `instance` holds a replayable text dump of the offending input.
    """

    def __init__(self, message: str, instance: str = ""):
        super().__init__(message)
        self.instance = instance


class ConnectivityError(OMError):
    """A complex family fails the homological connectivity hypothesis."""

    def __init__(self, message: str, subset=None, obstruction=None):
        super().__init__(message)
        self.subset = subset
        self.obstruction = obstruction
