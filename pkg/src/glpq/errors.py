"""Exception hierarchy shared by all algebra layers."""


class AlgebraError(Exception):
    """Base class for errors raised by the kernel."""


class SymbolSetMismatch(AlgebraError):
    """Operands live over different symbol sets."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Exact division by a zero scalar."""


class TruncationUnderflow(AlgebraError):
    """Truncated-series divisor is indistinguishable from zero at its order."""


class MissingSymbol(AlgebraError):
    """Numeric evaluation with an incomplete assignment."""


class NearPoleEvaluation(AlgebraError):
    """Numeric evaluation too close to a denominator zero."""


class UnknownGenerator(AlgebraError):
    """Word references a generator the presentation does not declare."""


class NonInvertibleNegativePower(AlgebraError):
    """Negative exponent on a generator that is not invertible."""


class PresentationMismatch(AlgebraError):
    """Elements of different presentations combined."""


class NotAUnit(AlgebraError):
    """Inversion requested for an element that is not an even unit."""


class InvalidRay(AlgebraError):
    """Series configuration with a degenerate ray."""


class UnknownIdentifier(AlgebraError):
    """Expression references a name the active context does not define."""


class DslSyntaxError(AlgebraError):
    """Parse failure; carries position and the expected token kinds."""

    def __init__(self, message, pos, expected=()):
        super().__init__(f"{message} at position {pos}" +
                         (f" (expected {', '.join(expected)})" if expected else ""))
        self.pos = pos
        self.expected = tuple(expected)


class UnsupportedNegativeN(AlgebraError):
    """Closed power-block forms are defined for positive exponents only."""
