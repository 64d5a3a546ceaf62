class ModuliLabError(ValueError):
    """Base class for every error raised on bad input or a failed exact computation."""


class RingMismatchError(ModuliLabError):
    pass


class UnknownVariableError(ModuliLabError):
    pass


class UnboundVariableError(ModuliLabError):
    pass


class DivisionByZeroPolynomialError(ModuliLabError, ZeroDivisionError):
    pass


class NonSquareMatrixError(ModuliLabError):
    pass


class DegenerateInputError(ModuliLabError):
    """Zero vectors, c0^2 = c2^2 line data, degenerate cones and similar."""


class WeightMismatchError(ModuliLabError):
    pass


class GroupClosureError(ModuliLabError):
    """Raised when a generated group overruns the closure bound or a generator is singular."""


class InternalInconsistencyError(ModuliLabError):
    pass


class NoCatalogueError(ModuliLabError):
    """The input is not in a normal form for which singular points are catalogued."""


class PrimeError(ModuliLabError):
    pass


class InvalidProfileError(ModuliLabError):
    pass
