"""Errors raised by the curvature layer."""


class NotIntegrableError(ValueError):
    """Raised when an operation requires both integrability obstructions
    to vanish and at least one does not."""

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(
            "system is not integrable: obstructions (%s, %s)" % (a, b)
        )


class ScreenInapplicableError(ValueError):
    """Raised when the quadratic-degree screen meets a system that is not
    polynomial in the derivative variables."""
