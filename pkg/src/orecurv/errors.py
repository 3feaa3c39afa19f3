"""Exception types shared across the package.

Every failure mode that callers are expected to branch on has its own
class; everything derives from OreError so a blanket `except OreError`
still works at the CLI boundary.
"""


class OreError(ValueError):
    """Base class for all errors raised by this package."""


class AllZeroError(OreError):
    """All inputs to a gcd/content computation were zero."""


class ZeroInputError(OreError):
    """A nonzero operand was required."""


class DivisionByZeroError(OreError):
    """Right division by the zero operator."""


class FieldMismatchError(OreError):
    """Operands live over different coefficient fields."""


class NotIntegralError(OreError):
    """An operator with polynomial coefficients was required."""


class NotPrimitiveError(OreError):
    """A primitive operator (coefficient gcd 1) was required."""


class OrderZeroError(OreError):
    """An operator of positive order was required."""


class ZeroTrailingError(OreError):
    """The trailing coefficient at index 0 vanishes."""


class NeedsPositiveCharacteristicError(OreError):
    """The operation is only defined over F_p with p > 0."""


class NotCentralError(OreError):
    """A value expected to be invariant under the shift x -> x+1 is not."""


class NotAUnitError(OreError):
    """Series inversion of an element with zero constant term."""


class FieldTooSmallError(OreError):
    """Not enough field elements to draw the requested random constants."""


class DegenerateReductionError(OreError):
    """Reduction mod p killed every coefficient of the operator."""


class PrimeTooLargeError(OreError):
    """The characteristic exceeds the configured work cap."""


class PrecisionContractError(OreError):
    """Internal precision bookkeeping of the reduced-precision pipeline failed."""


class ParseError(OreError):
    """Malformed operator text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class OrderDroppedWarning(UserWarning):
    """Reduction mod p lowered the order of the operator."""
