"""Recursive-descent parser for rational expressions.

Grammar (highest binding last):
    expr   := term  (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("+"|"-")* power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Exponents are nonnegative integer literals.  Names must belong to the
chart.  Errors carry the character offset they were detected at.
"""

from .errors import DomainError, ParseError
from .ratfunc import RatFunc


class _Tokens:
    __slots__ = ("text", "pos")

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", "", self.pos)
        ch = self.text[self.pos]
        if ch.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[self.pos : j], self.pos)
        if ch.isalpha() or ch == "_":
            j = self.pos
            while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
                j += 1
            return ("name", self.text[self.pos : j], self.pos)
        if ch in "+-*/^()":
            return ("op", ch, self.pos)
        raise ParseError("unexpected character %r" % (ch,), self.pos)

    def take(self):
        kind, value, pos = self.peek()
        if kind != "end":
            self.pos = pos + len(value)
        return kind, value, pos


def parse(text, chart):
    """Parse `text` into a RatFunc over `chart`."""
    toks = _Tokens(text)
    value = _expr(toks, chart)
    kind, got, pos = toks.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % (got,), pos)
    return value


def _expr(toks, chart):
    value = _term(toks, chart)
    while True:
        kind, op, pos = toks.peek()
        if kind == "op" and op in "+-":
            toks.take()
            rhs = _term(toks, chart)
            value = value + rhs if op == "+" else value - rhs
        else:
            return value


def _term(toks, chart):
    value = _factor(toks, chart)
    while True:
        kind, op, pos = toks.peek()
        if kind == "op" and op in "*/":
            toks.take()
            rhs = _factor(toks, chart)
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise ParseError("division by zero expression", pos)
                value = value / rhs
        else:
            return value


def _factor(toks, chart):
    kind, op, pos = toks.peek()
    if kind == "op" and op in "+-":
        toks.take()
        inner = _factor(toks, chart)
        return inner if op == "+" else -inner
    return _power(toks, chart)


def _power(toks, chart):
    value = _atom(toks, chart)
    kind, op, pos = toks.peek()
    if kind == "op" and op == "^":
        toks.take()
        ekind, etext, epos = toks.take()
        if ekind != "int":
            raise ParseError("exponent must be a nonnegative integer", epos)
        value = value ** int(etext)
    return value


def _atom(toks, chart):
    kind, value, pos = toks.take()
    if kind == "int":
        return RatFunc.const(chart, int(value))
    if kind == "name":
        if value not in chart:
            raise ParseError("unknown variable %r" % (value,), pos)
        return RatFunc.var(chart, value)
    if kind == "op" and value == "(":
        inner = _expr(toks, chart)
        kind2, value2, pos2 = toks.take()
        if not (kind2 == "op" and value2 == ")"):
            raise ParseError("expected ')'", pos2)
        return inner
    if kind == "end":
        raise ParseError("unexpected end of input", pos)
    raise ParseError("unexpected token %r" % (value,), pos)
