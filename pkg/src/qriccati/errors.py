class QDomainError(ValueError):
    """Argument outside the domain of a q-operation (bad q, x = 0, ...)."""


class ConvergenceError(ArithmeticError):
    """A series or product did not meet its truncation policy."""


class SingularityError(ZeroDivisionError):
    """A lower parameter or denominator hit a lattice pole."""


class UnsupportedOperation(NotImplementedError):
    """The requested relation is not defined for this family."""


class CatalogError(ValueError):
    """An identity case was instantiated with parameters violating its constraints."""
