"""The thirteen M and fourteen S curvature coefficients.

Each coefficient factors as a Laurent monomial in the scale parameters
times a rational function on the jet chart.  The scale parameters never
vanish on the bundle, so a coefficient vanishes identically exactly when
its base part does; every flatness question is decided on bases alone.

Conventions used throughout:

* iterated frame subscripts apply left to right, innermost first, so a
  chain ("f11", "theta2", "theta1", "omega2") means: derive f11 along
  the theta2 direction, then theta1, then omega2;
* the parameter k is eliminated as k = c*h/g before anything is stored,
  leaving Laurent exponents over (b, c, e, g, h) only;
* the frame-derivative forms built here presuppose the two
  integrability obstructions vanish.  curvatures() enforces that.
  The independent coordinate forms of M4, M5, M8, M9 (valid in the same
  regime but transcribed without frame chains) live in
  coordinate_forms_M for cross-checking.
"""

from fractions import Fraction

from ..jetframe import JET, dual_frame, integrability
from ..symexpr import DomainError, RatFunc
from .errors import NotIntegrableError

FIBER_ORDER = ("b", "c", "e", "g", "h")

M_NAMES = tuple("M%d" % i for i in range(1, 14))
S_NAMES = tuple("S%d" % i for i in range(1, 15))

# the subset whose joint vanishing (with integrability) characterizes
# equivalence to the flat system
FLAT_TEST_NAMES = (
    "M1", "M3", "M5", "M6", "M7", "M8",
    "S1", "S2", "S5", "S6", "S8", "S9", "S11", "S12", "S14",
)


class FiberedScalar:
    """A scalar of the form  sign * b^i c^j e^l g^m h^n * base(jet).

    `sign` is a nonzero rational, `exponents` runs over FIBER_ORDER with
    integer (possibly negative) entries, and `base` is a RatFunc on the
    jet chart.  Vanishing is equivalent to base vanishing.
    """

    __slots__ = ("sign", "exponents", "base")

    def __init__(self, sign, exponents, base):
        sign = Fraction(sign)
        if sign == 0:
            raise DomainError("fibered scalar needs a nonzero sign")
        exponents = tuple(int(x) for x in exponents)
        if len(exponents) != len(FIBER_ORDER):
            raise DomainError("need one exponent per fiber parameter")
        if not isinstance(base, RatFunc) or base.chart != JET:
            raise DomainError("base must be a rational function on the jet chart")
        self.sign = sign
        self.exponents = exponents
        self.base = base

    @property
    def is_zero(self):
        return self.base.is_zero

    def fiber_factor_str(self):
        """Deterministic rendering of sign and fiber monomial."""
        num_parts = []
        den_parts = []
        for name, exp in zip(FIBER_ORDER, self.exponents):
            if exp > 0:
                num_parts.append(name if exp == 1 else "%s^%d" % (name, exp))
            elif exp < 0:
                den_parts.append(name if exp == -1 else "%s^%d" % (name, -exp))
        sign = self.sign
        if not num_parts and sign.numerator in (1, -1) and sign.denominator == 1:
            num = "1" if sign > 0 else "-1"
        else:
            prefix = "" if sign == 1 else ("-" if sign == -1 else str(sign) + "*")
            num = prefix + "*".join(num_parts) if num_parts else str(sign)
        if not den_parts:
            return num
        return "%s/(%s)" % (num, "*".join(den_parts))

    def as_ratfunc(self, chart):
        """The full scalar on a chart holding both jet and fiber names."""
        out = RatFunc.const(chart, self.sign) * self.base.extend(chart)
        for name, exp in zip(FIBER_ORDER, self.exponents):
            if exp:
                out = out * RatFunc.var(chart, name) ** exp
        return out

    def __str__(self):
        return "%s * (%s)" % (self.fiber_factor_str(), self.base)

    def __repr__(self):
        return "FiberedScalar(%s)" % (self,)


class ChainCache:
    """Memoized nested frame derivatives of the right-hand sides.

    Keys are ("f11", "theta2", "theta1", ...) chains; each value reuses
    the cached value of its prefix, so shared prefixes cost nothing.
    """

    def __init__(self, sys):
        self.sys = sys
        self.frame = dual_frame(sys)
        self._store = {
            ("f11",): sys.f11,
            ("f12",): sys.f12,
            ("f22",): sys.f22,
        }

    def __call__(self, fname, *labels):
        key = (fname,) + labels
        got = self._store.get(key)
        if got is None:
            prev = self(*key[:-1])
            got = self.frame[key[-1]].apply(prev)
            self._store[key] = got
        return got


def _exps(**named):
    return tuple(named.get(n, 0) for n in FIBER_ORDER)


def curvature_M(sys, chains=None):
    """All thirteen M coefficients, keyed "M1".."M13".

    The first nine come from the second structure-equation loop; the
    last four are the absorbable ones that feed the hatted connection.
    """
    D = chains if chains is not None else ChainCache(sys)
    return {
        "M1": FiberedScalar(-1, _exps(c=1, g=-1, h=-1), D("f11", "theta2")),
        "M2": FiberedScalar(-1, _exps(c=-1, h=-1), D("f12", "theta2", "theta1")),
        "M3": FiberedScalar(-1, _exps(g=-1, h=-1), D("f12", "theta2", "theta2")),
        "M4": FiberedScalar(
            -1,
            _exps(h=-2),
            D("f11", "theta2", "omega2")
            - 2 * D("f11", "theta2") * D("f12", "theta1")
            + D("f11", "theta2") * D("f22", "theta2"),
        ),
        "M5": FiberedScalar(
            1,
            _exps(c=-1, g=1, h=-2),
            D("f12", "theta0")
            + D("f12", "theta2") * D("f12", "theta1")
            - D("f12", "theta2", "omega2"),
        ),
        "M6": FiberedScalar(-1, _exps(c=-2, g=2, h=-1), D("f22", "theta1")),
        "M7": FiberedScalar(-1, _exps(c=-2, g=1, h=-1), D("f12", "theta1", "theta1")),
        "M8": FiberedScalar(
            1,
            _exps(c=-1, g=1, h=-2),
            D("f12", "theta0")
            + D("f12", "theta1") * D("f12", "theta2")
            - D("f12", "theta1", "omega1"),
        ),
        "M9": FiberedScalar(
            -1,
            _exps(c=-2, g=2, h=-2),
            -2 * D("f12", "theta2") * D("f22", "theta1")
            + D("f22", "theta1", "omega1")
            + D("f11", "theta1") * D("f22", "theta1"),
        ),
        "M10": FiberedScalar(
            1, _exps(h=-1), D("f11", "theta1") - D("f12", "theta2")
        ),
        "M11": FiberedScalar(1, _exps(c=-1, g=1, h=-1), D("f12", "theta1")),
        "M12": FiberedScalar(1, _exps(h=-1), D("f12", "theta2")),
        "M13": FiberedScalar(
            1, _exps(c=-1, g=1, h=-1), D("f22", "theta2") - D("f12", "theta1")
        ),
    }


def curvature_S(sys, chains=None):
    """All fourteen S coefficients, keyed "S1".."S14".

    These are the coefficients of the derived invariant 1-forms; they
    complete the flatness test set together with six of the M's.
    """
    D = chains if chains is not None else ChainCache(sys)
    return {
        "S1": FiberedScalar(
            1,
            _exps(c=-1, h=-2),
            D("f11", "theta2", "theta1", "omega2")
            + D("f11", "theta2", "theta2") * D("f22", "theta1")
            + D("f11", "theta2", "theta1") * D("f22", "theta2")
            - D("f12", "theta2", "theta1") * D("f11", "theta2")
            - D("f12", "theta2", "theta2") * D("f12", "theta2")
            - D("f12", "theta2", "theta1") * D("f11", "theta1")
            + 2 * D("f12", "theta2", "theta1") * D("f12", "theta2"),
        ),
        "S2": FiberedScalar(
            1,
            _exps(c=-2, g=1, h=-2),
            D("f12", "theta2", "theta1", "omega2")
            - D("f12", "theta1", "theta0")
            - D("f12", "theta1", "theta1") * D("f12", "theta2"),
        ),
        "S3": FiberedScalar(
            1, _exps(c=-2, h=-1), D("f12", "theta2", "theta1", "theta1")
        ),
        "S4": FiberedScalar(
            1, _exps(c=-1, g=-1, h=-1), D("f12", "theta2", "theta1", "theta2")
        ),
        "S5": FiberedScalar(
            1,
            _exps(c=-1, h=-1),
            2 * D("f12", "theta2", "theta1") - D("f11", "theta1", "theta1"),
        ),
        "S6": FiberedScalar(
            1,
            _exps(c=-1, g=1, h=-2),
            -D("f12", "theta0")
            - D("f12", "theta1") * D("f12", "theta2")
            + D("f11", "theta2") * D("f22", "theta1")
            + D("f12", "theta2", "omega2"),
        ),
        "S7": FiberedScalar(
            1,
            _exps(g=-1, h=-1),
            D("f11", "theta1", "theta2") - D("f12", "theta2", "theta2"),
        ),
        "S8": FiberedScalar(
            1,
            _exps(c=-1, g=1, h=-2),
            D("f11", "theta1", "omega2") - 2 * D("f12", "theta2", "omega2"),
        ),
        "S9": FiberedScalar(
            1,
            _exps(c=-1, h=-2),
            D("f11", "theta1", "theta0")
            - 2 * D("f12", "theta2", "theta0")
            + D("f11", "theta1", "theta1") * D("f12", "theta2")
            + D("f11", "theta1", "theta2") * D("f12", "theta1")
            - 2 * D("f12", "theta1", "theta2") * D("f12", "theta2")
            - 2 * D("f12", "theta2", "theta2") * D("f12", "theta1"),
        ),
        "S10": FiberedScalar(
            1,
            _exps(g=-1, h=-1),
            -D("f11", "theta1", "theta2") + 2 * D("f12", "theta2", "theta2"),
        ),
        "S11": FiberedScalar(
            1,
            _exps(c=-1, g=1, h=-2),
            2 * D("f12", "theta1", "omega1") - D("f22", "theta2", "omega1"),
        ),
        "S12": FiberedScalar(
            1,
            _exps(c=-2, g=1, h=-2),
            -2 * D("f12", "theta1", "theta0")
            - 2 * D("f12", "theta1", "theta1") * D("f12", "theta2")
            - 2 * D("f12", "theta1", "theta2") * D("f12", "theta1")
            + D("f22", "theta2", "theta0")
            + D("f22", "theta1", "theta2") * D("f12", "theta2")
            + D("f22", "theta2", "theta2") * D("f12", "theta1"),
        ),
        "S13": FiberedScalar(
            1,
            _exps(c=-2, g=1, h=-1),
            2 * D("f12", "theta1", "theta1") - D("f22", "theta1", "theta2"),
        ),
        "S14": FiberedScalar(
            1,
            _exps(c=-1, h=-1),
            2 * D("f12", "theta1", "theta2") - D("f22", "theta2", "theta2"),
        ),
    }


def curvatures(sys):
    """Both curvature families for an integrable system.

    Raises NotIntegrableError when either obstruction is nonzero, since
    the frame-derivative forms are only valid on integrable systems.
    """
    a, b = integrability(sys)
    if not (a.is_zero and b.is_zero):
        raise NotIntegrableError(a, b)
    chains = ChainCache(sys)
    return curvature_M(sys, chains), curvature_S(sys, chains)


def coordinate_forms_M(sys):
    """Independent transcriptions of M4, M5, M8, M9 using plain partial
    derivatives instead of frame chains.

    Valid in the same integrable regime as the frame forms; kept as a
    separate computation path so the two can be compared exactly.
    """
    f11, f12, f22 = sys.f11, sys.f12, sys.f22
    f21 = sys.f21
    z1 = RatFunc.var(JET, "z1")
    z2 = RatFunc.var(JET, "z2")

    def dd(f, v1, v2):
        return f.derive(v1).derive(v2)

    base4 = -(
        f12.derive("z2") ** 2
        - f11.derive("y")
        - f12.derive("z2") * f11.derive("z1")
        - f11.derive("z2") * f12.derive("z1")
        + dd(f12, "z2", "x1")
        + dd(f12, "z2", "y") * z1
        + dd(f12, "z2", "z1") * f11
        + dd(f12, "z2", "z2") * f21
    )
    base5 = (
        f12.derive("y")
        + f12.derive("z2") * f12.derive("z1")
        - dd(f12, "z2", "x2")
        - dd(f12, "z2", "y") * z2
        - dd(f12, "z2", "z1") * f12
        - dd(f12, "z2", "z2") * f22
    )
    base8 = (
        f12.derive("y")
        + f12.derive("z1") * f12.derive("z2")
        - dd(f12, "z1", "x1")
        - dd(f12, "z1", "y") * z1
        - dd(f12, "z1", "z1") * f11
        - dd(f12, "z1", "z2") * f21
    )
    base9 = -(
        f12.derive("z1") ** 2
        - f22.derive("y")
        - f12.derive("z2") * f22.derive("z1")
        - f12.derive("z1") * f22.derive("z2")
        + dd(f12, "z1", "x2")
        + dd(f12, "z1", "y") * z2
        + dd(f12, "z1", "z1") * f12
        + dd(f12, "z1", "z2") * f22
    )
    return {
        "M4": FiberedScalar(1, _exps(h=-2), base4),
        "M5": FiberedScalar(1, _exps(c=-1, g=1, h=-2), base5),
        "M8": FiberedScalar(1, _exps(c=-1, g=1, h=-2), base8),
        "M9": FiberedScalar(1, _exps(c=-2, g=2, h=-2), base9),
    }
