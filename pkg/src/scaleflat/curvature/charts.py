"""Bundle charts over the jet space and frame machinery lifted to them.

The full bundle carries the five scale parameters (b, c, e, g, h); the
reduced bundle keeps (c, g, h) after the normalization that fixes b and
e.  The fifth parameter k is always eliminated through k = c*h/g.
"""

from ..exterior import DiffForm
from ..jetframe import JET, VectorField, dual_frame
from ..symexpr import Chart, RatFunc

BUNDLE = Chart(("x1", "x2", "y", "z1", "z2", "b", "c", "e", "g", "h"))
REDUCED = Chart(("x1", "x2", "y", "z1", "z2", "c", "g", "h"))

FIBER_NAMES = ("b", "c", "e", "g", "h")


def fiber_var(chart, name):
    return RatFunc.var(chart, name)


def k_parameter(chart):
    """The eliminated scale parameter k = c*h/g on a bundle chart."""
    return (
        RatFunc.var(chart, "c") * RatFunc.var(chart, "h") / RatFunc.var(chart, "g")
    )


def base_coframe(sys, chart):
    """The unscaled adapted coframe, with differentials taken on `chart`."""
    dx1 = DiffForm.differential(chart, "x1")
    dx2 = DiffForm.differential(chart, "x2")
    dy = DiffForm.differential(chart, "y")
    dz1 = DiffForm.differential(chart, "z1")
    dz2 = DiffForm.differential(chart, "z2")
    z1 = RatFunc.var(chart, "z1")
    z2 = RatFunc.var(chart, "z2")
    f11 = sys.f11.extend(chart)
    f12 = sys.f12.extend(chart)
    f22 = sys.f22.extend(chart)
    return {
        "theta0": dy - z1 * dx1 - z2 * dx2,
        "theta1": dz1 - f11 * dx1 - f12 * dx2,
        "theta2": dz2 - f12 * dx1 - f22 * dx2,
        "omega1": dx1,
        "omega2": dx2,
    }


def base_frame(sys, chart):
    """Dual frame of base_coframe, with zero components along the fiber."""
    jet_frame = dual_frame(sys)
    zero = RatFunc.zero(chart)
    out = {}
    for label, field in jet_frame.items():
        comps = [c.extend(chart) for c in field.components]
        comps.extend([zero] * (len(chart) - len(JET)))
        out[label] = VectorField(chart, comps)
    return out
