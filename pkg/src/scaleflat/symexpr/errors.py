"""Errors raised by the symbolic layer."""


class SymExprError(Exception):
    pass


class DomainError(SymExprError):
    """Structurally invalid operation: zero denominator, unknown variable,
    chart mismatch, evaluation at a pole."""


class ParseError(SymExprError):
    """Syntax or name error in expression text, with a character offset."""

    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.message = message
        self.position = position
