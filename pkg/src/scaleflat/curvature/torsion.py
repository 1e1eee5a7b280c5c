"""First-loop torsion coefficients on the full scale bundle.

torsions_T lists the fourteen coefficients appearing against the wedge
basis after the first exterior-derivative pass; torsions_L lists the six
that survive absorption into the pseudo-connection.  solve_reduction
returns the fiber normalization that kills the two absorbable mixed
coefficients.
"""

from ..symexpr import RatFunc
from .charts import BUNDLE, REDUCED, k_parameter


def _lifted_derivatives(sys):
    d = {}
    for name, f in (("f11", sys.f11), ("f12", sys.f12), ("f22", sys.f22)):
        for var in ("y", "z1", "z2"):
            d[name, var] = f.derive(var).extend(BUNDLE)
    return d


def torsions_T(sys):
    """The fourteen torsion coefficients, keyed "T1".."T14"."""
    b = RatFunc.var(BUNDLE, "b")
    c = RatFunc.var(BUNDLE, "c")
    e = RatFunc.var(BUNDLE, "e")
    g = RatFunc.var(BUNDLE, "g")
    h = RatFunc.var(BUNDLE, "h")
    k = k_parameter(BUNDLE)
    d = _lifted_derivatives(sys)
    ch = c * h
    return {
        "T1": -b / ch,
        "T2": -e / ch,
        "T3": b**2 / ch**2
        - d["f11", "y"] / h**2
        + b * d["f11", "z1"] / (c * h**2)
        + e * d["f11", "z2"] / (g * h**2),
        "T4": b * e / ch**2
        - d["f12", "y"] / (h * k)
        + b * d["f12", "z1"] / (ch * k)
        + e * d["f12", "z2"] / (c * h**2),
        "T5": -b / ch - d["f11", "z1"] / h,
        "T6": -d["f12", "z1"] / k,
        "T7": -c * d["f11", "z2"] / (g * h),
        "T8": -b / ch - d["f12", "z2"] / h,
        "T9": b * e / ch**2
        - g * d["f12", "y"] / (c * h**2)
        + b * g * d["f12", "z1"] / ch**2
        + e * d["f12", "z2"] / (c * h**2),
        "T10": e**2 / ch**2
        - g * d["f22", "y"] / (ch * k)
        + b * g * d["f22", "z1"] / (c**2 * h * k)
        + e * d["f22", "z2"] / (ch * k),
        "T11": -e / ch - g * d["f12", "z1"] / ch,
        "T12": -g * d["f22", "z1"] / (c * k),
        "T13": -d["f12", "z2"] / h,
        "T14": -e / ch - d["f22", "z2"] / k,
    }


def torsions_L(sys):
    """The six post-absorption torsion coefficients, keyed "L1".."L6"."""
    b = RatFunc.var(BUNDLE, "b")
    c = RatFunc.var(BUNDLE, "c")
    e = RatFunc.var(BUNDLE, "e")
    g = RatFunc.var(BUNDLE, "g")
    h = RatFunc.var(BUNDLE, "h")
    k = k_parameter(BUNDLE)
    d = _lifted_derivatives(sys)
    ch = c * h
    return {
        "L1": -2 * b / ch - d["f11", "z1"] / h,
        "L2": -e / ch - d["f12", "z1"] / k,
        "L3": -c * d["f11", "z2"] / (g * h),
        "L4": -b / ch - d["f12", "z2"] / h,
        "L5": -g * d["f22", "z1"] / (c * k),
        "L6": -2 * e / ch - d["f22", "z2"] / k,
    }


def solve_reduction(sys):
    """Fiber values of b and e that make L2 and L4 vanish, on the
    reduced chart: b = -c*(f12)_z2 and e = -g*(f12)_z1."""
    c = RatFunc.var(REDUCED, "c")
    g = RatFunc.var(REDUCED, "g")
    return {
        "b": -c * sys.f12.derive("z2").extend(REDUCED),
        "e": -g * sys.f12.derive("z1").extend(REDUCED),
    }
