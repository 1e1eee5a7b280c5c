"""First-order jet chart, adapted coframe, dual frame, and scale maps.

Everything downstream works on the chart (x1, x2, y, z1, z2), where z1
and z2 are the first derivatives of the unknown y(x1, x2).  A system is
the right-hand-side triple (f11, f12, f22) of

    y_{x1 x1} = f11,  y_{x1 x2} = y_{x2 x1} = f12,  y_{x2 x2} = f22,

each f a rational function on the jet chart.  The off-diagonal
right-hand sides coincide by assumption, and `f21` is an alias.
"""

from .exterior import DiffForm
from .symexpr import Chart, DomainError, RatFunc, parse

JET = Chart(("x1", "x2", "y", "z1", "z2"))

FRAME_LABELS = ("theta0", "theta1", "theta2", "omega1", "omega2")


class PDESystem:
    """Right-hand-side triple of a second-order system on the jet chart."""

    __slots__ = ("f11", "f12", "f22")

    def __init__(self, f11, f12, f22):
        for f in (f11, f12, f22):
            if not isinstance(f, RatFunc) or f.chart != JET:
                raise DomainError("system entries must be rational functions on the jet chart")
        self.f11 = f11
        self.f12 = f12
        self.f22 = f22

    @property
    def f21(self):
        return self.f12

    @classmethod
    def from_strings(cls, f11, f12, f22):
        return cls(parse(f11, JET), parse(f12, JET), parse(f22, JET))

    def entries(self):
        return {"f11": self.f11, "f12": self.f12, "f22": self.f22}

    def z_degree(self):
        """Largest combined z1+z2 exponent across the three numerators."""
        iz1 = JET.index("z1")
        iz2 = JET.index("z2")
        deg = 0
        for f in (self.f11, self.f12, self.f22):
            for e in f.num.terms:
                deg = max(deg, e[iz1] + e[iz2])
        return deg

    def rational_in_z(self):
        return any(
            f.den.degree("z1") > 0 or f.den.degree("z2") > 0
            for f in (self.f11, self.f12, self.f22)
        )

    def __eq__(self, other):
        return (
            isinstance(other, PDESystem)
            and self.f11 == other.f11
            and self.f12 == other.f12
            and self.f22 == other.f22
        )

    def __repr__(self):
        return "PDESystem(%s, %s, %s)" % (self.f11, self.f12, self.f22)


def coframe(sys):
    """Adapted coframe on the jet chart.

    theta0 is the contact form, theta1/theta2 encode the prolongation by
    the right-hand sides, omega1/omega2 are the horizontal differentials.
    """
    dx1 = DiffForm.differential(JET, "x1")
    dx2 = DiffForm.differential(JET, "x2")
    dy = DiffForm.differential(JET, "y")
    dz1 = DiffForm.differential(JET, "z1")
    dz2 = DiffForm.differential(JET, "z2")
    v = lambda n: RatFunc.var(JET, n)
    return {
        "theta0": dy - v("z1") * dx1 - v("z2") * dx2,
        "theta1": dz1 - sys.f11 * dx1 - sys.f12 * dx2,
        "theta2": dz2 - sys.f21 * dx1 - sys.f22 * dx2,
        "omega1": dx1,
        "omega2": dx2,
    }


class VectorField:
    """Derivation on a chart, stored as one component per coordinate."""

    __slots__ = ("chart", "components")

    def __init__(self, chart, components):
        components = tuple(components)
        if len(components) != len(chart):
            raise DomainError("need one component per chart variable")
        for c in components:
            if c.chart != chart:
                raise DomainError("component chart mismatch")
        self.chart = chart
        self.components = components

    def apply(self, f):
        if f.chart != self.chart:
            raise DomainError("function chart mismatch")
        out = RatFunc.zero(self.chart)
        for name, comp in zip(self.chart.names, self.components):
            if not comp.is_zero:
                out = out + comp * f.derive(name)
        return out

    def pair(self, form):
        """Contraction with a 1-form."""
        if form.degree != 1:
            raise DomainError("pairing needs a 1-form")
        out = RatFunc.zero(self.chart)
        for idx, coeff in form.terms.items():
            out = out + coeff * self.components[idx[0]]
        return out

    def __repr__(self):
        return "VectorField(%s)" % (", ".join(str(c) for c in self.components),)


def dual_frame(sys):
    """Frame dual to coframe(sys); the pairing matrix is the identity."""
    zero = RatFunc.zero(JET)
    one = RatFunc.one(JET)
    v = lambda n: RatFunc.var(JET, n)
    return {
        "theta0": VectorField(JET, (zero, zero, one, zero, zero)),
        "theta1": VectorField(JET, (zero, zero, zero, one, zero)),
        "theta2": VectorField(JET, (zero, zero, zero, zero, one)),
        "omega1": VectorField(JET, (one, zero, v("z1"), sys.f11, sys.f21)),
        "omega2": VectorField(JET, (zero, one, v("z2"), sys.f12, sys.f22)),
    }


def frame_derive(sys, f, label):
    """Derivative of f along one dual-frame direction."""
    if label not in FRAME_LABELS:
        raise DomainError("unknown frame label %r" % (label,))
    return dual_frame(sys)[label].apply(f)


def frame_chain(sys, f, labels):
    """Nested frame derivatives, applied left to right (innermost first)."""
    frame = dual_frame(sys)
    out = f
    for label in labels:
        if label not in FRAME_LABELS:
            raise DomainError("unknown frame label %r" % (label,))
        out = frame[label].apply(out)
    return out


def integrability(sys):
    """The two obstruction functions whose joint vanishing makes the
    prolonged system Frobenius-integrable.

    First one: (f11 along omega2) - (f12 along omega1); second one the
    same with (f12, f22).
    """
    a = frame_derive(sys, sys.f11, "omega2") - frame_derive(sys, sys.f12, "omega1")
    b = frame_derive(sys, sys.f12, "omega2") - frame_derive(sys, sys.f22, "omega1")
    return a, b


def integrability_residues(sys):
    """Same obstructions read off the exterior system: the dx1^dx2
    residues of d(theta1), d(theta2) modulo the contact ideal."""
    from .exterior import reduce_mod

    forms = coframe(sys)
    ideal = [forms["theta0"], forms["theta1"], forms["theta2"]]
    out = []
    for label in ("theta1", "theta2"):
        residue = reduce_mod(forms[label].d(), ideal, leaders=("y", "z1", "z2"))
        out.append(residue.coefficient("x1", "x2"))
    return tuple(out)


def is_integrable(sys):
    a, b = integrability(sys)
    return a.is_zero and b.is_zero


class ScaleMap:
    """Base transformation (x1, x2, y) -> (X1(x1), X2(x2), Y(x1, x2, y))
    with X1, X2 strictly coordinate-wise and all data rational."""

    __slots__ = ("X1", "X2", "Y")

    def __init__(self, X1, X2, Y):
        for f in (X1, X2, Y):
            if not isinstance(f, RatFunc) or f.chart != JET:
                raise DomainError("scale map entries must live on the jet chart")
        for f, allowed in ((X1, {"x1"}), (X2, {"x2"}), (Y, {"x1", "x2", "y"})):
            for name in JET.names:
                if name not in allowed and f.depends_on(name):
                    raise DomainError("scale map entry depends on %r" % (name,))
        if X1.derive("x1").is_zero or X2.derive("x2").is_zero:
            raise DomainError("X1, X2 must have nonvanishing coordinate derivatives")
        if Y.derive("y").is_zero:
            raise DomainError("Y must depend on y")
        self.X1 = X1
        self.X2 = X2
        self.Y = Y

    @classmethod
    def from_strings(cls, X1, X2, Y):
        return cls(parse(X1, JET), parse(X2, JET), parse(Y, JET))


def contact_lift(mapping):
    """First-jet lift of a scale map: the transformed z-coordinates."""
    Yy = mapping.Y.derive("y")
    z1 = RatFunc.var(JET, "z1")
    z2 = RatFunc.var(JET, "z2")
    Z1 = (mapping.Y.derive("x1") + Yy * z1) / mapping.X1.derive("x1")
    Z2 = (mapping.Y.derive("x2") + Yy * z2) / mapping.X2.derive("x2")
    return Z1, Z2


def transform_system(sys, mapping, inverse=None):
    """Image of a system under a scale map, as a system in the new
    coordinates.

    The mixed second derivatives of the transformed graphs are computed
    through the lifted map; they must agree (true whenever the source is
    integrable).  Rewriting in the new coordinates needs the inverse
    base map, supplied as `inverse` with entries that are functions of
    the new coordinates.  When every transformed right-hand side is
    constant the inverse is unnecessary and may be omitted.
    """
    Z1, Z2 = contact_lift(mapping)
    frame = dual_frame(sys)
    dX1 = mapping.X1.derive("x1")
    dX2 = mapping.X2.derive("x2")
    g11 = frame["omega1"].apply(Z1) / dX1
    g12 = frame["omega2"].apply(Z1) / dX2
    g21 = frame["omega1"].apply(Z2) / dX1
    g22 = frame["omega2"].apply(Z2) / dX2
    if g12 != g21:
        raise DomainError("mixed images disagree; source system is too twisted")
    if inverse is None:
        if not all(g.is_const() for g in (g11, g12, g22)):
            raise DomainError("non-constant image needs the inverse base map")
        return PDESystem(g11, g12, g22)
    env_base = {"x1": inverse.X1, "x2": inverse.X2, "y": inverse.Y}
    x1v = RatFunc.var(JET, "x1")
    yv = RatFunc.var(JET, "y")
    if (
        mapping.X1.substitute(env_base) != x1v
        or mapping.X2.substitute(env_base) != RatFunc.var(JET, "x2")
        or mapping.Y.substitute(env_base) != yv
    ):
        raise DomainError("inverse does not invert the base transformation")
    Yy = mapping.Y.derive("y").substitute(env_base)
    z1_old = (
        dX1.substitute(env_base) * RatFunc.var(JET, "z1")
        - mapping.Y.derive("x1").substitute(env_base)
    ) / Yy
    z2_old = (
        dX2.substitute(env_base) * RatFunc.var(JET, "z2")
        - mapping.Y.derive("x2").substitute(env_base)
    ) / Yy
    env = dict(env_base)
    env["z1"] = z1_old
    env["z2"] = z2_old
    return PDESystem(
        g11.substitute(env), g12.substitute(env), g22.substitute(env)
    )


class ContactLiftCheck:
    __slots__ = ("Z1", "Z2", "factor", "exact")

    def __init__(self, Z1, Z2, factor, exact):
        self.Z1 = Z1
        self.Z2 = Z2
        self.factor = factor
        self.exact = exact


def contact_lift_verify(mapping):
    """Verify that the lifted map scales the contact form by Y_y, exactly.

    The pullback of dy - z1 dx1 - z2 dx2 is computed as
    d(Y) - Z1 d(X1) - Z2 d(X2) and compared with Y_y times the form.
    """
    Z1, Z2 = contact_lift(mapping)
    Yy = mapping.Y.derive("y")
    pulled = (
        DiffForm.scalar(mapping.Y).d()
        - Z1 * DiffForm.scalar(mapping.X1).d()
        - Z2 * DiffForm.scalar(mapping.X2).d()
    )
    dx1 = DiffForm.differential(JET, "x1")
    dx2 = DiffForm.differential(JET, "x2")
    dy = DiffForm.differential(JET, "y")
    contact = dy - RatFunc.var(JET, "z1") * dx1 - RatFunc.var(JET, "z2") * dx2
    exact = (pulled - Yy * contact).is_zero
    return ContactLiftCheck(Z1, Z2, Yy, exact)
