"""Exception hierarchy shared by every cfhyp module."""


class CfhypError(Exception):
    """Base class for all library errors."""


class DomainError(CfhypError, ValueError):
    """An argument lies outside the region where the requested quantity is defined."""


class PoleError(CfhypError, ValueError):
    """A lower Pochhammer factor vanished before the series terminated."""


class NoConvergence(CfhypError, ArithmeticError):
    """A series did not meet its stopping rule within the term cap."""


class DegenerateRoot(CfhypError, ValueError):
    """Indicial exponents differ by an integer; no non-logarithmic second solution."""


class NonFinite(CfhypError, ArithmeticError):
    """A probed function returned inf or nan."""


class QuadFailure(CfhypError, ArithmeticError):
    """A quadrature rule missed its requested tolerance."""


class TailTooFat(QuadFailure):
    """The truncated tail of a Laplace integral could not be bounded."""


class InsufficientSamples(CfhypError, RuntimeError):
    """Too few random draws satisfied a relation's validity predicate."""
