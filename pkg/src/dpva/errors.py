"""Exception types raised across the package."""


class DpvaError(Exception):
    """Base class for all package errors."""


class ArityError(DpvaError):
    pass


class NonIntegrableExponent(DpvaError):
    pass


class NonInvertibleSubstitution(DpvaError):
    pass


class DegreeError(DpvaError):
    pass


class NotSkewError(DpvaError):
    pass


class NotPointTransform(DpvaError):
    pass


class DependencyError(DpvaError):
    pass


class FiltrationError(DpvaError):
    pass


class NotClosed(DpvaError):
    pass


class NotFound(DpvaError, KeyError):
    pass


class ParseError(DpvaError, ValueError):
    pass


class IncompatibleError(DpvaError):
    """The target of a trivialisation is not a cocycle of the base bracket."""
