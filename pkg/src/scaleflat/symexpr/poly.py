"""Sparse multivariate polynomials with exact rational coefficients.

Terms live in a dict keyed by exponent tuples (one slot per chart
variable).  Zero coefficients are never stored, so two polynomials over
the same chart are equal exactly when their term maps are equal.
Ordering, printing and leading-term logic all use graded lexicographic
order.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .chart import Chart, same_chart
from .errors import DomainError


def grlex_key(expt):
    return (sum(expt), expt)


class Poly:
    __slots__ = ("chart", "terms")

    def __init__(self, chart, terms):
        self.chart = chart
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # ---- constructors ----

    @classmethod
    def zero(cls, chart):
        return cls(chart, {})

    @classmethod
    def const(cls, chart, value):
        value = Fraction(value)
        if value == 0:
            return cls.zero(chart)
        return cls(chart, {(0,) * len(chart): value})

    @classmethod
    def var(cls, chart, name):
        expt = [0] * len(chart)
        expt[chart.index(name)] = 1
        return cls(chart, {tuple(expt): Fraction(1)})

    # ---- predicates and shape ----

    @property
    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(sum(e) == 0 for e in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def const_value(self):
        if self.is_zero:
            return Fraction(0)
        if not self.is_const():
            raise DomainError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self, name=None):
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.chart.index(name)
        return max(e[i] for e in self.terms)

    def variables(self):
        """Names with positive degree, in chart order."""
        used = [False] * len(self.chart)
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used[i] = True
        return tuple(n for i, n in enumerate(self.chart.names) if used[i])

    def leading(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    # ---- arithmetic ----

    def __add__(self, other):
        same_chart(self, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Poly(self.chart, terms)

    def __neg__(self):
        return Poly(self.chart, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.chart)
            return Poly(self.chart, {e: c * other for e, c in self.terms.items()})
        same_chart(self, other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return Poly(self.chart, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial exponent must be a nonnegative integer")
        out = Poly.const(self.chart, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.chart == other.chart
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.chart.names, tuple(sorted(self.terms.items()))))

    # ---- calculus and evaluation ----

    def derive(self, name):
        i = self.chart.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                le = list(e)
                le[i] -= 1
                terms[tuple(le)] = terms.get(tuple(le), 0) + c * e[i]
        return Poly(self.chart, {e: c for e, c in terms.items() if c})

    def eval(self, env):
        """Evaluate at a point given as {name: number}.

        Exact (Fraction) when every value is int/Fraction, float otherwise.
        Every variable actually appearing must be bound.
        """
        values = []
        exact = True
        for name in self.chart.names:
            v = env.get(name)
            if isinstance(v, float):
                exact = False
            values.append(v)
        total = Fraction(0) if exact else 0.0
        for e, c in self.terms.items():
            term = Fraction(c) if exact else float(c)
            for i, p in enumerate(e):
                if p:
                    if values[i] is None:
                        raise DomainError("unbound variable %r" % (self.chart.names[i],))
                    term *= values[i] ** p
            total = total + term
        return total

    # ---- content and monomial structure ----

    def monomial_factor(self):
        """Split off the largest common monomial: self = mono * core."""
        if self.is_zero:
            return (0,) * len(self.chart), self
        mono = None
        for e in self.terms:
            mono = e if mono is None else tuple(min(a, b) for a, b in zip(mono, e))
        if not any(mono):
            return mono, self
        core = Poly(
            self.chart,
            {tuple(a - b for a, b in zip(e, mono)): c for e, c in self.terms.items()},
        )
        return mono, core

    def rational_content(self):
        """Positive Fraction c with self/c integer-coefficient and content-free."""
        if self.is_zero:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * (c.denominator // int_gcd(den, c.denominator))
        return Fraction(num, den)

    def primitive(self):
        """Integer-coefficient, content-free copy with positive leading coefficient."""
        if self.is_zero:
            return self
        c = self.rational_content()
        if self.leading()[1] < 0:
            c = -c
        return self * (1 / c)

    # ---- coefficient views (used by gcd) ----

    def coeffs_in(self, name):
        """Map u-degree -> coefficient Poly (u-exponent zeroed), for u = name."""
        i = self.chart.index(name)
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            d = le[i]
            le[i] = 0
            bucket = out.setdefault(d, {})
            bucket[tuple(le)] = bucket.get(tuple(le), 0) + c
        return {d: Poly(self.chart, b) for d, b in out.items()}

    def mul_var_power(self, name, power):
        i = self.chart.index(name)
        terms = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i] += power
            terms[tuple(le)] = c
        return Poly(self.chart, terms)

    # ---- printing ----

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(self.chart.names[i])
                elif p > 1:
                    factors.append("%s^%d" % (self.chart.names[i], p))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Poly(%s)" % (self,)
