"""Exception types raised by the library."""


class DoubleWellError(Exception):
    """Base class for all library errors."""


class DomainError(DoubleWellError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class QuadratureError(DoubleWellError, ArithmeticError):
    """Non-finite samples were handed to a quadrature routine."""


class GridMismatch(DoubleWellError, ValueError):
    """Two grid functions that must share a grid do not."""


class CertificateError(DoubleWellError):
    """The sup-norm local-maximum certificate cannot be built."""


class ConfigError(DoubleWellError, ValueError):
    """A JSON run configuration is malformed."""
