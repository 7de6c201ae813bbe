"""Exception types shared across the package."""


class PowitError(Exception):
    """Base class for every error this package raises on purpose."""


class DimensionError(PowitError, ValueError):
    """Input has the wrong shape, an inconsistent size, or an empty dimension."""


class SymmetryError(PowitError, ValueError):
    """Input matrix is not self-adjoint where self-adjointness is required."""


class DegenerateInputError(PowitError, ValueError):
    """Input is degenerate for the requested operation, e.g. a zero matrix
    or a starting vector that the iteration collapses to zero."""


class NumericOverflowError(PowitError, ArithmeticError):
    """A computation produced non-finite matrix entries."""


class ConvergenceError(PowitError, RuntimeError):
    """An iterative routine hit its sweep cap without converging and has no
    meaningful result to return."""


class EmptyDataError(PowitError, ValueError):
    """No usable data for the requested computation."""
