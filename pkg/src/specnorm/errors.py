"""Exception types raised across the package.

``DomainError`` subclasses signal inputs outside a function's mathematical
domain (the CLI maps them to exit status 3). ``InconsistencyError`` means an
internal identity failed and indicates a bug, not bad input.
"""


class SpecnormError(Exception):
    pass


class DomainError(SpecnormError, ValueError):
    pass


class NotHermitianError(DomainError):
    pass


class DimensionMismatchError(DomainError):
    pass


# Same condition for vectors; kept as an alias so callers can use either name.
LengthMismatchError = DimensionMismatchError


class OutOfRangeError(DomainError):
    pass


class EmptyWordError(DomainError):
    pass


class OddExponentError(DomainError):
    pass


class MomentDoesNotExistError(DomainError):
    pass


class MgfUnavailableError(DomainError):
    pass


class AlphaTooSmallError(DomainError):
    pass


class TooFewSamplesError(DomainError):
    pass


class NotMajorizedError(DomainError):
    pass


class NoConvergenceError(SpecnormError):
    pass


class NoPerfectMatchingError(SpecnormError):
    pass


class InconsistencyError(SpecnormError):
    pass


class UnknownSuiteError(SpecnormError, KeyError):
    pass
