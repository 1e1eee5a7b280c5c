"""Exact multivariate rational-function arithmetic over named charts."""

from .chart import Chart
from .errors import DomainError, ParseError, SymExprError
from .gcdtools import divexact, poly_gcd
from .parse import parse
from .poly import Poly
from .ratfunc import RatFunc, arith

__all__ = [
    "Chart",
    "DomainError",
    "ParseError",
    "SymExprError",
    "Poly",
    "RatFunc",
    "arith",
    "parse",
    "poly_gcd",
    "divexact",
]
