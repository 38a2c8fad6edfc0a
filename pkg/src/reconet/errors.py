"""Exception hierarchy shared across the package.

Every error carries an ``exit_code`` so the command line surface can map
failures to its documented exit statuses:

* 2 -- parse / format errors (files, configs)
* 3 -- precondition or parameter violations
* 4 -- numerical failures
* 5 -- unknown methods, models, measures, or flags
"""

from __future__ import annotations


class ReconetError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParseError(ReconetError):
    """A file or config could not be parsed; carries a location when known."""

    exit_code = 2

    def __init__(self, message: str, *, path: str | None = None,
                 line: int | None = None, column: int | None = None):
        loc = ""
        if path is not None:
            loc += str(path)
        if line is not None:
            loc += f":{line}"
        if column is not None:
            loc += f":{column}"
        if loc:
            message = f"{loc}: {message}"
        super().__init__(message)
        self.path = path
        self.line = line
        self.column = column


class ParameterError(ReconetError, ValueError):
    """An argument value is outside its documented domain."""

    exit_code = 3


class PreconditionError(ReconetError):
    """An operation's precondition on its inputs does not hold."""

    exit_code = 3


class SizeMismatchError(PreconditionError):
    """Two graphs that must share a node count do not."""


class InsufficientDataError(PreconditionError):
    """A time series is too short for the requested estimator."""


class NumericalInputError(PreconditionError):
    """A numerical kernel received input it is not defined for."""


class NumericalError(ReconetError):
    """A numerical routine failed to produce a trustworthy result."""

    exit_code = 4


class UnknownMethodError(ReconetError):
    """A name does not appear in the relevant registry."""

    exit_code = 5
