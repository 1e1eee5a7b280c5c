"""Rational functions in fully reduced canonical form.

Invariants: the denominator is never zero; numerator and denominator
have integer coefficients with no common polynomial factor and no common
integer content; the denominator's grlex-leading coefficient is
positive.  Structural equality therefore decides mathematical equality.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .chart import same_chart
from .errors import DomainError
from .gcdtools import divexact, poly_gcd
from .poly import Poly


def _canonical(num, den):
    if den.is_zero:
        raise DomainError("zero denominator")
    if num.is_zero:
        return Poly.zero(num.chart), Poly.const(num.chart, 1)
    g = poly_gcd(num, den)
    if not (g.is_const() and g.const_value() == 1):
        num = divexact(num, g)
        den = divexact(den, g)
    # joint scalar: make both integer, strip the common integer content,
    # then sign-normalize on the denominator
    cn = num.rational_content()
    cd = den.rational_content()
    lcm_den = (cn.denominator * cd.denominator) // int_gcd(cn.denominator, cd.denominator)
    num = num * lcm_den
    den = den * lcm_den
    common = int_gcd(num.rational_content().numerator, den.rational_content().numerator)
    if common > 1:
        num = num * Fraction(1, common)
        den = den * Fraction(1, common)
    if den.leading()[1] < 0:
        num = -num
        den = -den
    return num, den


class RatFunc:
    __slots__ = ("chart", "num", "den")

    def __init__(self, num, den):
        if num.chart != den.chart:
            raise DomainError("chart mismatch in rational function")
        self.chart = num.chart
        self.num, self.den = _canonical(num, den)

    # ---- constructors ----

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly.const(p.chart, 1))

    @classmethod
    def const(cls, chart, value):
        value = Fraction(value)
        return cls(
            Poly.const(chart, value.numerator),
            Poly.const(chart, value.denominator),
        )

    @classmethod
    def var(cls, chart, name):
        return cls.from_poly(Poly.var(chart, name))

    @classmethod
    def zero(cls, chart):
        return cls.from_poly(Poly.zero(chart))

    @classmethod
    def one(cls, chart):
        return cls.const(chart, 1)

    # ---- predicates ----

    @property
    def is_zero(self):
        return self.num.is_zero

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def degree(self, name=None):
        """Max of numerator/denominator degree (zero function: -1)."""
        return max(self.num.degree(name), self.den.degree(name))

    def depends_on(self, name):
        return self.num.degree(name) > 0 or self.den.degree(name) > 0

    # ---- arithmetic ----

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.chart, other)
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        same_chart(self, other)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        same_chart(self, other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        same_chart(self, other)
        if other.is_zero:
            raise DomainError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise DomainError("exponent must be an integer")
        if n < 0:
            if self.is_zero:
                raise DomainError("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.chart, other)
        return (
            isinstance(other, RatFunc)
            and self.chart == other.chart
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    # ---- calculus, substitution, evaluation ----

    def derive(self, name):
        self.chart.index(name)
        n = self.num.derive(name) * self.den - self.num * self.den.derive(name)
        return RatFunc(n, self.den * self.den)

    def substitute(self, env, target=None):
        """Substitute variables by rational functions.

        `env` maps names to RatFuncs over one common target chart (or to
        numbers).  Unmapped variables must exist in the target chart and
        map to themselves.
        """
        if target is None:
            for v in env.values():
                if isinstance(v, RatFunc):
                    target = v.chart
                    break
            else:
                target = self.chart
        values = []
        for name in self.chart.names:
            v = env.get(name)
            if v is None:
                values.append(RatFunc.var(target, name))
            elif isinstance(v, RatFunc):
                if v.chart != target:
                    raise DomainError("substitution values disagree on chart")
                values.append(v)
            else:
                values.append(RatFunc.const(target, v))
        num = _eval_poly(self.num, values, target)
        den = _eval_poly(self.den, values, target)
        if den.is_zero:
            raise DomainError("substitution lands on a pole")
        return num / den

    def extend(self, chart):
        """Reinterpret over a larger chart containing all current names."""
        remap = [chart.index(name) for name in self.chart.names]
        return RatFunc(
            _remap_poly(self.num, chart, remap), _remap_poly(self.den, chart, remap)
        )

    def rename(self, mapping, chart):
        """Move to `chart`, translating variable names through `mapping`."""
        remap = [chart.index(mapping.get(n, n)) for n in self.chart.names]
        return RatFunc(
            _remap_poly(self.num, chart, remap), _remap_poly(self.den, chart, remap)
        )

    def eval(self, env):
        """Evaluate at {name: number}: exact for rational inputs, float otherwise."""
        d = self.den.eval(env)
        if d == 0:
            raise DomainError("evaluation at a pole of the denominator")
        return self.num.eval(env) / d

    # ---- printing ----

    def __str__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFunc(%s)" % (self,)


def _eval_poly(p, values, target):
    total = RatFunc.zero(target)
    powers = [{} for _ in values]
    for e, c in p.terms.items():
        term = RatFunc.const(target, c)
        for i, pw in enumerate(e):
            if pw:
                cached = powers[i].get(pw)
                if cached is None:
                    cached = values[i] ** pw
                    powers[i][pw] = cached
                term = term * cached
        total = total + term
    return total


def _remap_poly(p, chart, remap):
    width = len(chart)
    terms = {}
    for e, c in p.terms.items():
        ne = [0] * width
        for src, dst in enumerate(remap):
            ne[dst] += e[src]
        key = tuple(ne)
        terms[key] = terms.get(key, 0) + c
    return Poly(chart, terms)


def arith(op, f, g):
    """Dispatch helper mirroring the binary arithmetic surface."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise DomainError("unknown operation %r" % (op,))
