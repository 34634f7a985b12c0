"""Exception types raised by the kernel."""


class GwaError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(GwaError, ZeroDivisionError):
    pass


class ZeroCoefficient(GwaError, ValueError):
    pass


class ZeroPolynomial(GwaError, ValueError):
    pass


class NotDivisible(GwaError, ValueError):
    pass


class NotAntisymmetric(GwaError, ValueError):
    pass


class AlgebraMismatch(GwaError, ValueError):
    pass


class UnknownPreset(GwaError, KeyError):
    pass


class NotQuantum(GwaError, ValueError):
    pass


class NotInvolution(GwaError, ValueError):
    pass


class NotTorus(GwaError, ValueError):
    pass


class MonomialA(GwaError, ValueError):
    """Raised when an operation needs a non-monomial defining polynomial."""


class InvalidDerivation(GwaError, ValueError):
    pass


class NotValidated(GwaError, ValueError):
    pass


class NotCentral(GwaError, ValueError):
    pass


class PullbackFailure(GwaError, ValueError):
    """An element of a localization does not come from the algebra."""


class RootOfUnityUnsupported(GwaError, ValueError):
    pass


class ParseError(GwaError, ValueError):
    """Syntax error in an expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExponentError(ParseError):
    pass
