"""Exception hierarchy shared by every module of the package."""


class HModularError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(HModularError, ValueError):
    pass


class ContextMismatch(HModularError, ValueError):
    pass


class NotInvertibleInGamma(HModularError, ArithmeticError):
    pass


class NotInvertible(HModularError, ArithmeticError):
    pass


class NonIntegral(HModularError, ValueError):
    """A value left the order lattice where an integral one was required."""


class NotAMember(HModularError, ValueError):
    pass


class ReductionStalled(HModularError, RuntimeError):
    """The Euclidean reduction failed to shrink the upper-right entry.

    Supported inputs never reach this; the offending matrix is attached.
    """

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class PartitionNotDisjoint(HModularError, ValueError):
    pass


class RelatorCrossesFactors(HModularError, ValueError):
    def __init__(self, message, relator=None):
        super().__init__(message)
        self.relator = relator


class MissingModel(HModularError, ValueError):
    pass


class ParseError(HModularError, ValueError):
    """Syntax error with the character offset where parsing failed."""

    def __init__(self, message, offset=0, text=""):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.text = text
        self.reason = message


class UnsupportedContext(HModularError, ValueError):
    """The operation is not available for this context (e.g. decompose for n >= 5)."""
