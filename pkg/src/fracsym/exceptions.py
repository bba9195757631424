"""Exception hierarchy shared by all fracsym modules."""


class FracsymError(Exception):
    """Base class for every error raised by fracsym."""


class DomainError(FracsymError, ValueError):
    """An input lies outside the mathematical domain of an operator."""


class UnsupportedFieldError(DomainError):
    """The requested prolongation path does not support this vector field."""


class GridSizeError(FracsymError, ValueError):
    """A grid is too small for a stencil, or samples do not match the grid."""


class NumericalError(FracsymError, ArithmeticError):
    """A numerical procedure produced non-finite values or failed outright."""


class ReducedSolverError(NumericalError):
    def __init__(self, message: str, condition_number: float) -> None:
        super().__init__(f"{message} (Jacobian condition number {condition_number:.3e})")
        self.condition_number = condition_number


class ExpressionError(FracsymError, ValueError):
    """A power-sum expression could not be parsed."""


class ConfigError(FracsymError, ValueError):
    """An environment setting could not be parsed."""


class InputFormatError(FracsymError, ValueError):
    """An input file does not have the expected layout."""
