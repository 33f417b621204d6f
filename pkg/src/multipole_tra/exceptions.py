"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where a quantity is defined."""


class NotPositiveDefiniteError(DomainError):
    """Cholesky factorization met a non-positive pivot."""

    def __init__(self, index, pivot):
        super().__init__(f"matrix is not positive definite (pivot {index} = {pivot!r})")
        self.index = index
        self.pivot = pivot


class ConvergenceError(ArithmeticError):
    """An iterative procedure or a truncation check did not converge."""
