"""Dual equations over the solution space, and the flat double fibration.

A three-parameter family of graphs y = h(x1, x2, X1, X2, Y) turns the
parameter space into a solution space with its own second-order system;
this module computes that dual system, exactly.  The base-space and
solution-space projections of the flat correspondence live here too,
with the incidence identity that glues them.

Charts: the family function h lives on FAMILY; the finished dual system
lives on SOLUTION (named exactly X1, X2, Y, Z1, Z2); JOINT carries both
while x-coordinates are being eliminated.
"""

from fractions import Fraction

from .jetframe import JET, PDESystem
from .symexpr import Chart, DomainError, RatFunc, parse
from .symexpr.poly import Poly

FAMILY = Chart(("x1", "x2", "X1", "X2", "Y"))
SOLUTION = Chart(("X1", "X2", "Y", "Z1", "Z2"))
JOINT = Chart(("x1", "x2", "X1", "X2", "Y", "Z1", "Z2"))

_BASE_NAMES = ("x1", "x2")


def _restrict(f, target):
    """Project a JOINT rational function onto a subchart it lives in."""
    remap = {}
    for i, name in enumerate(JOINT.names):
        if name in target.names:
            remap[i] = target.index(name)
        elif f.num.degree(name) > 0 or f.den.degree(name) > 0:
            raise DomainError("function still depends on %r" % (name,))

    def move(p):
        terms = {}
        for exps, coeff in p.terms.items():
            new = [0] * len(target)
            for i, e in enumerate(exps):
                if e:
                    new[remap[i]] = e
            terms[tuple(new)] = coeff
        return Poly(target, terms)

    return RatFunc(move(f.num), move(f.den))


class SolutionFamily:
    """Family y = h(x1, x2, X1, X2, Y), with an optional inverse giving
    x1, x2 as functions on the solution space.

    The inverse, when present, must satisfy the defining identity of the
    dual jet coordinates: Z_i + h_{X_i}/h_Y = 0 after substituting it.
    That pins the inverse to the family instead of trusting the caller.
    """

    __slots__ = ("h", "inverse")

    def __init__(self, h, inverse=None):
        if not isinstance(h, RatFunc) or h.chart != FAMILY:
            raise DomainError("family function must live on the family chart")
        if h.derive("Y").is_zero:
            raise DomainError("family is degenerate: h does not depend on Y")
        if inverse is not None:
            entries = {}
            for name in _BASE_NAMES:
                f = inverse.get(name)
                if not isinstance(f, RatFunc) or f.chart != SOLUTION:
                    raise DomainError(
                        "inverse entry %r must live on the solution chart" % (name,)
                    )
                entries[name] = f
            inverse = entries
            self._check_inverse(h, inverse)
        self.h = h
        self.inverse = inverse

    @staticmethod
    def _check_inverse(h, inverse):
        env = {n: inverse[n].extend(JOINT) for n in _BASE_NAMES}
        hY = h.extend(JOINT)
        ratio_den = hY.derive("Y")
        for i, name in enumerate(_BASE_NAMES):
            ratio = hY.derive("X%d" % (i + 1)) / ratio_den
            lhs = RatFunc.var(JOINT, "Z%d" % (i + 1)) + ratio.substitute(env, JOINT)
            if not lhs.is_zero:
                raise DomainError(
                    "inverse violates the dual jet identity for %s" % (name,)
                )

    @classmethod
    def from_strings(cls, h, inverse_x1=None, inverse_x2=None):
        if (inverse_x1 is None) != (inverse_x2 is None):
            raise DomainError("inverse needs both coordinates")
        inverse = None
        if inverse_x1 is not None:
            inverse = {
                "x1": parse(inverse_x1, SOLUTION),
                "x2": parse(inverse_x2, SOLUTION),
            }
        return cls(parse(h, FAMILY), inverse)


class DualEquation:
    """Right-hand sides of the dual system.

    Closed equations live on the solution chart.  When x-coordinates
    survive and no inverse is available the raw JOINT expressions are
    kept and the equation is marked open rather than failing; a general
    elimination needs inverse data the family may not carry.
    """

    __slots__ = ("F11", "F12", "F22", "chart", "is_open")

    def __init__(self, F11, F12, F22, chart, is_open):
        self.F11 = F11
        self.F12 = F12
        self.F22 = F22
        self.chart = chart
        self.is_open = is_open

    def entries(self):
        return {"F11": self.F11, "F12": self.F12, "F22": self.F22}

    def as_system(self):
        """The dual equation as a PDESystem on the jet chart."""
        if self.is_open:
            raise DomainError("open dual equation: x-coordinates not eliminated")
        mapping = {"X1": "x1", "X2": "x2", "Y": "y", "Z1": "z1", "Z2": "z2"}
        return PDESystem(
            self.F11.rename(mapping, JET),
            self.F12.rename(mapping, JET),
            self.F22.rename(mapping, JET),
        )

    def __repr__(self):
        tag = "open" if self.is_open else "closed"
        return "DualEquation(%s, %s, %s; %s)" % (self.F11, self.F12, self.F22, tag)


def _raw_dual_entry(h, i, j):
    # numerator h_Xi h_YXj - h_Y h_XiXj + Z_j (h_Xi h_YY - h_Y h_XiY), over h_Y^2
    hXi = h.derive("X%d" % i)
    hXj = h.derive("X%d" % j)
    hY = h.derive("Y")
    Zj = RatFunc.var(JOINT, "Z%d" % j)
    num = (
        hXi * hXj.derive("Y")
        - hY * hXi.derive("X%d" % j)
        + Zj * (hXi * hY.derive("Y") - hY * hXi.derive("Y"))
    )
    return num / (hY * hY)


def dual_pde(family):
    """Dual system of a solution family, per the second-derivative display."""
    h = family.h.extend(JOINT)
    raw = {
        (1, 1): _raw_dual_entry(h, 1, 1),
        (1, 2): _raw_dual_entry(h, 1, 2),
        (2, 1): _raw_dual_entry(h, 2, 1),
        (2, 2): _raw_dual_entry(h, 2, 2),
    }
    residual = any(
        f.num.degree(n) > 0 or f.den.degree(n) > 0
        for f in raw.values()
        for n in _BASE_NAMES
    )
    if residual and family.inverse is not None:
        env = {n: family.inverse[n].extend(JOINT) for n in _BASE_NAMES}
        raw = {ij: f.substitute(env, JOINT) for ij, f in raw.items()}
        residual = False
    if not residual:
        if raw[(1, 2)] != raw[(2, 1)]:
            raise DomainError("dual mixed derivatives disagree after elimination")
        return DualEquation(
            _restrict(raw[(1, 1)], SOLUTION),
            _restrict(raw[(1, 2)], SOLUTION),
            _restrict(raw[(2, 2)], SOLUTION),
            SOLUTION,
            is_open=False,
        )
    return DualEquation(
        raw[(1, 1)], raw[(1, 2)], raw[(2, 2)], JOINT, is_open=True
    )


def flat_family():
    """The family of affine graphs y = X1 x1 + X2 x2 + Y."""
    return SolutionFamily.from_strings(
        "X1*x1 + X2*x2 + Y", inverse_x1="-Z1", inverse_x2="-Z2"
    )


def exchange_roles(family):
    """Swap coordinate and solution space across the incidence relation.

    Solving y = h for Y and renaming (x, y) <-> (X, Y) gives the family
    presenting the same incidence from the other side.  Only families
    affine in Y are supported; that covers the flat correspondence.
    """
    h = family.h
    v = h.derive("Y")
    if v.derive("Y") != RatFunc.zero(FAMILY):
        raise DomainError("role exchange needs a family affine in Y")
    u = h - v * RatFunc.var(FAMILY, "Y")
    swap = {"x1": "X1", "x2": "X2", "X1": "x1", "X2": "x2", "Y": "Y"}
    # Y = (y - u)/v with y renamed to Y and parameters relabeled
    solved = (RatFunc.var(FAMILY, "Y") - u.rename(swap, FAMILY)) / v.rename(swap, FAMILY)
    return SolutionFamily(solved)


def flat_projections(p):
    """Both projections of a point of the first jet space, exactly."""
    x1, x2, y, z1, z2 = (Fraction(t) for t in p)
    return (x1, x2, y), (z1, z2, y - z1 * x1 - z2 * x2)


def incidence_identity():
    """The gluing identity y = a x1 + b x2 + c at (a, b, c) = pi2(p),
    checked symbolically over the jet chart."""
    a = RatFunc.var(JET, "z1")
    b = RatFunc.var(JET, "z2")
    x1 = RatFunc.var(JET, "x1")
    x2 = RatFunc.var(JET, "x2")
    y = RatFunc.var(JET, "y")
    c = y - a * x1 - b * x2
    return a * x1 + b * x2 + c == y


class SolutionLeaf:
    """Graph of one affine solution inside the jet space: the fiber of
    the solution-space projection over (a, b, c)."""

    __slots__ = ("a", "b", "c")

    dimension = 2

    def __init__(self, a, b, c):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)

    def point(self, x1, x2):
        x1 = Fraction(x1)
        x2 = Fraction(x2)
        return (x1, x2, self.a * x1 + self.b * x2 + self.c, self.a, self.b)

    def __repr__(self):
        return "SolutionLeaf(%s, %s, %s)" % (self.a, self.b, self.c)


def fiber_of_solution(a, b, c):
    return SolutionLeaf(a, b, c)
