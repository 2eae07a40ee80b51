"""Exception types shared across the solver library."""


class RankDeficientBlock(Exception):
    """A block gram matrix was not positive definite at lambda == 0.

    Raised by the factorization path when an unregularized gram matrix has a
    non-positive pivot. Callers that need a pseudo-inverse behaviour should
    retry with lambda > 0 (e.g. the documented jitter 1e-12 * ||block||_F^2).
    """


class DivergenceDetected(Exception):
    """An iterate picked up non-finite entries."""

    def __init__(self, iteration: int, message: str | None = None):
        self.iteration = iteration
        super().__init__(message or f"non-finite iterate at outer iteration {iteration}")


class MatrixMarketError(ValueError):
    """Malformed or unsupported Matrix Market input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
