"""Exception types raised across the package."""


class AxialError(Exception):
    """Base class for every error raised by axialjordan."""


class DivisionByZero(AxialError, ZeroDivisionError):
    pass


class NestedRadical(AxialError, ValueError):
    """A square root of an irrational field element was requested."""


class ParseError(AxialError, ValueError):
    pass


class DimensionMismatch(AxialError, ValueError):
    pass


class NotAnIdeal(AxialError, ValueError):
    pass


class NotAnAxis(AxialError, ValueError):
    pass


class DecompositionIncomplete(AxialError, ValueError):
    """The 0, 1 and 1/2 eigenspaces of an idempotent do not span the algebra."""


class NoSolution(AxialError, ValueError):
    pass


class NonUnique(AxialError, ValueError):
    pass


class KernelNotIdeal(AxialError, ValueError):
    pass


class Unclassifiable(AxialError, ValueError):
    pass


class DegenerateParameters(AxialError, ValueError):
    pass


class BranchRootMissing(DegenerateParameters):
    pass


class NoRationalSolution(DegenerateParameters):
    pass


class RowMismatch(AxialError, ValueError):
    pass


class ModelUnrealizable(AxialError, ValueError):
    pass


class CheckFailed(AxialError, AssertionError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
