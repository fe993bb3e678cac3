"""Exception types shared across the package.

The command line front end maps these onto exit codes: malformed input is a
usage problem, a missing mathematical object is a negative verdict, and blown
enumeration budgets are resource failures.
"""


class LogCentreError(Exception):
    """Base class for all package-specific errors."""


class InputError(LogCentreError):
    """Malformed input document, unparsable value, or unknown named object."""


class PreconditionViolation(LogCentreError):
    """An operation was invoked on data outside its stated contract."""


class NotApplicable(LogCentreError):
    """The requested quantity does not exist for this input."""


class NonStandardBoundary(NotApplicable):
    """Cover constructions require boundary coefficients of the form (e-1)/e."""


class ResourceLimit(LogCentreError):
    """A desk-scale enumeration limit was exceeded."""


class RepresentationOverflow(LogCentreError):
    """An exact product left the single-monomial representation."""


class NonterminationSuspected(LogCentreError):
    """Rewriting exceeded the configured step cap."""
