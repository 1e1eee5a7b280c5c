"""Exact verification of the structure equations on the scale bundles.

Levels:

* 9  - first loop on the full bundle: raw pseudo-connection plus the
       fourteen T coefficients;
* 10 - absorbed form on the full bundle: corrected connection plus the
       six L coefficients;
* 11 - reduced bundle: hatted connection plus the M coefficients.

Levels 9 and 10 hold for every system once the two integrability
obstructions are carried explicitly as omega1^omega2 torsion; level 11
requires both obstructions to vanish and raises otherwise.  Each check
builds both sides as exterior-algebra objects and compares exactly.
"""

from ..exterior import DiffForm
from ..jetframe import integrability
from ..symexpr import RatFunc
from .charts import BUNDLE, REDUCED, base_coframe, base_frame, k_parameter
from .errors import NotIntegrableError
from .invariants import curvature_M, curvature_S
from .torsion import solve_reduction, torsions_L, torsions_T


def _var(chart, name):
    return RatFunc.var(chart, name)


def _dlog(chart, name):
    v = _var(chart, name)
    return DiffForm.differential(chart, name) * (RatFunc.one(chart) / v)


def lifted_coframe(sys):
    """Tautological 1-forms on the full bundle chart."""
    under = base_coframe(sys, BUNDLE)
    b = _var(BUNDLE, "b")
    c = _var(BUNDLE, "c")
    e = _var(BUNDLE, "e")
    g = _var(BUNDLE, "g")
    h = _var(BUNDLE, "h")
    k = k_parameter(BUNDLE)
    return {
        "theta0": (c * h) * under["theta0"],
        "theta1": b * under["theta0"] + c * under["theta1"],
        "theta2": e * under["theta0"] + g * under["theta2"],
        "omega1": h * under["omega1"],
        "omega2": k * under["omega2"],
    }


def reduced_coframe(sys):
    """Tautological 1-forms on the reduced chart, with b and e replaced
    by the normalization that kills the absorbable mixed torsions."""
    under = base_coframe(sys, REDUCED)
    red = solve_reduction(sys)
    c = _var(REDUCED, "c")
    g = _var(REDUCED, "g")
    h = _var(REDUCED, "h")
    k = k_parameter(REDUCED)
    return {
        "theta0": (c * h) * under["theta0"],
        "theta1": red["b"] * under["theta0"] + c * under["theta1"],
        "theta2": red["e"] * under["theta0"] + g * under["theta2"],
        "omega1": h * under["omega1"],
        "omega2": k * under["omega2"],
    }


def _obstruction_terms(sys, chart, w1, w2):
    """The omega1^omega2 torsion carried by the theta1/theta2 rows.

    The two displayed loops drop these because they assume
    integrability; keeping them makes the identities unconditional.
    """
    a, b_ob = integrability(sys)
    c = _var(chart, "c")
    g = _var(chart, "g")
    h = _var(chart, "h")
    k = k_parameter(chart)
    w12 = w1.wedge(w2)
    row1 = (c * a.extend(chart) / (h * k)) * w12
    row2 = (g * b_ob.extend(chart) / (h * k)) * w12
    return row1, row2


def _verify_level9(sys):
    forms = lifted_coframe(sys)
    th0, th1, th2 = forms["theta0"], forms["theta1"], forms["theta2"]
    w1, w2 = forms["omega1"], forms["omega2"]
    b = _var(BUNDLE, "b")
    c = _var(BUNDLE, "c")
    e = _var(BUNDLE, "e")
    g = _var(BUNDLE, "g")
    h = _var(BUNDLE, "h")
    k = k_parameter(BUNDLE)
    db = DiffForm.differential(BUNDLE, "b")
    dc = DiffForm.differential(BUNDLE, "c")
    de = DiffForm.differential(BUNDLE, "e")
    dlog_c = _dlog(BUNDLE, "c")
    dlog_g = _dlog(BUNDLE, "g")
    dlog_h = _dlog(BUNDLE, "h")
    dlog_k = DiffForm.scalar(k).d() * (RatFunc.one(BUNDLE) / k)
    T = torsions_T(sys)
    extra1, extra2 = _obstruction_terms(sys, BUNDLE, w1, w2)

    rhs0 = (
        (dlog_c + dlog_h).wedge(th0)
        + T["T1"] * w1.wedge(th0)
        + T["T2"] * w2.wedge(th0)
        - th1.wedge(w1)
        - th2.wedge(w2)
    )
    conn1 = db * (1 / (c * h)) - dc * (b / (c**2 * h))
    rhs1 = (
        conn1.wedge(th0)
        + dlog_c.wedge(th1)
        + th0.wedge(T["T3"] * w1 + T["T4"] * w2)
        + th1.wedge(T["T5"] * w1 + T["T6"] * w2)
        + th2.wedge(T["T7"] * w1 + T["T8"] * w2)
        + extra1
    )
    conn2 = de * (1 / (c * h)) - DiffForm.differential(BUNDLE, "g") * (
        e / (c * g * h)
    )
    rhs2 = (
        conn2.wedge(th0)
        + dlog_g.wedge(th2)
        + th0.wedge(T["T9"] * w1 + T["T10"] * w2)
        + th1.wedge(T["T11"] * w1 + T["T12"] * w2)
        + th2.wedge(T["T13"] * w1 + T["T14"] * w2)
        + extra2
    )
    rhs3 = dlog_h.wedge(w1)
    rhs4 = dlog_k.wedge(w2)
    targets = (th0, th1, th2, w1, w2)
    sides = (rhs0, rhs1, rhs2, rhs3, rhs4)
    return all((t.d() - r).is_zero for t, r in zip(targets, sides))


def _verify_level10(sys):
    forms = lifted_coframe(sys)
    th0, th1, th2 = forms["theta0"], forms["theta1"], forms["theta2"]
    w1, w2 = forms["omega1"], forms["omega2"]
    b = _var(BUNDLE, "b")
    c = _var(BUNDLE, "c")
    e = _var(BUNDLE, "e")
    g = _var(BUNDLE, "g")
    h = _var(BUNDLE, "h")
    k = k_parameter(BUNDLE)
    db = DiffForm.differential(BUNDLE, "b")
    dc = DiffForm.differential(BUNDLE, "c")
    de = DiffForm.differential(BUNDLE, "e")
    dg = DiffForm.differential(BUNDLE, "g")
    T = torsions_T(sys)
    L = torsions_L(sys)
    extra1, extra2 = _obstruction_terms(sys, BUNDLE, w1, w2)

    alpha = _dlog(BUNDLE, "c") - (b / (c * h)) * w1 - (e / (c * h)) * w2
    beta = (
        db * (1 / (c * h))
        - dc * (b / (c**2 * h))
        - T["T3"] * w1
        - T["T4"] * w2
    )
    eps = (
        de * (1 / (c * h))
        - dg * (e / (c * g * h))
        - T["T9"] * w1
        - T["T10"] * w2
    )
    delta = _dlog(BUNDLE, "g") - (b / (c * h)) * w1 - (e / (c * h)) * w2
    gamma = _dlog(BUNDLE, "h")
    psi = DiffForm.scalar(k).d() * (RatFunc.one(BUNDLE) / k)
    if not (alpha + gamma - delta - psi).is_zero:
        return False

    rhs0 = (alpha + gamma).wedge(th0) - th1.wedge(w1) - th2.wedge(w2)
    rhs1 = (
        beta.wedge(th0)
        + alpha.wedge(th1)
        + L["L1"] * th1.wedge(w1)
        + L["L2"] * th1.wedge(w2)
        + L["L3"] * th2.wedge(w1)
        + L["L4"] * th2.wedge(w2)
        + extra1
    )
    rhs2 = (
        eps.wedge(th0)
        + delta.wedge(th2)
        + L["L2"] * th1.wedge(w1)
        + L["L5"] * th1.wedge(w2)
        + L["L4"] * th2.wedge(w1)
        + L["L6"] * th2.wedge(w2)
        + extra2
    )
    rhs3 = gamma.wedge(w1)
    rhs4 = psi.wedge(w2)
    targets = (th0, th1, th2, w1, w2)
    sides = (rhs0, rhs1, rhs2, rhs3, rhs4)
    return all((t.d() - r).is_zero for t, r in zip(targets, sides))


def _require_integrable(sys):
    a, b = integrability(sys)
    if not (a.is_zero and b.is_zero):
        raise NotIntegrableError(a, b)


def _reduced_connection(sys):
    """Plain and hatted connection 1-forms on the reduced chart."""
    M = {n: v.as_ratfunc(REDUCED) for n, v in curvature_M(sys).items()}
    forms = reduced_coframe(sys)
    th0, w1, w2 = forms["theta0"], forms["omega1"], forms["omega2"]
    k = k_parameter(REDUCED)
    alpha = _dlog(REDUCED, "c")
    gamma = _dlog(REDUCED, "h")
    delta = _dlog(REDUCED, "g")
    psi = DiffForm.scalar(k).d() * (RatFunc.one(REDUCED) / k)
    hat = {
        "alpha": alpha - M["M2"] * th0 + M["M10"] * w1 + M["M11"] * w2,
        "gamma": gamma + (M["M12"] - M["M10"]) * w1,
        "delta": delta - M["M2"] * th0 + M["M12"] * w1 + M["M13"] * w2,
        "psi": psi + (M["M11"] - M["M13"]) * w2,
    }
    plain = {"alpha": alpha, "gamma": gamma, "delta": delta, "psi": psi}
    return forms, M, plain, hat


def _verify_level11(sys):
    _require_integrable(sys)
    forms, M, plain, hat = _reduced_connection(sys)
    th0, th1, th2 = forms["theta0"], forms["theta1"], forms["theta2"]
    w1, w2 = forms["omega1"], forms["omega2"]

    # pre-absorption shape: raw connection, all thirteen coefficients
    pre0 = (
        (plain["alpha"] + plain["gamma"]).wedge(th0)
        + M["M12"] * w1.wedge(th0)
        + M["M11"] * w2.wedge(th0)
        - th1.wedge(w1)
        - th2.wedge(w2)
    )
    pre1 = (
        plain["alpha"].wedge(th1)
        + M["M1"] * th2.wedge(w1)
        + M["M2"] * th1.wedge(th0)
        + M["M3"] * th2.wedge(th0)
        + M["M4"] * w1.wedge(th0)
        + M["M5"] * w2.wedge(th0)
        + M["M10"] * w1.wedge(th1)
        + M["M11"] * w2.wedge(th1)
    )
    pre2 = (
        plain["delta"].wedge(th2)
        + M["M6"] * th1.wedge(w2)
        + M["M7"] * th1.wedge(th0)
        + M["M2"] * th2.wedge(th0)
        + M["M8"] * w1.wedge(th0)
        + M["M9"] * w2.wedge(th0)
        + M["M12"] * w1.wedge(th2)
        + M["M13"] * w2.wedge(th2)
    )
    pre3 = plain["gamma"].wedge(w1)
    pre4 = plain["psi"].wedge(w2)

    # absorbed shape: hatted connection, five coefficients remain
    post0 = (
        (hat["alpha"] + hat["gamma"]).wedge(th0) + w1.wedge(th1) + w2.wedge(th2)
    )
    post1 = (
        hat["alpha"].wedge(th1)
        + M["M1"] * th2.wedge(w1)
        + M["M3"] * th2.wedge(th0)
        + M["M4"] * w1.wedge(th0)
        + M["M5"] * w2.wedge(th0)
    )
    post2 = (
        hat["delta"].wedge(th2)
        + M["M6"] * th1.wedge(w2)
        + M["M7"] * th1.wedge(th0)
        + M["M8"] * w1.wedge(th0)
        + M["M9"] * w2.wedge(th0)
    )
    post3 = hat["gamma"].wedge(w1)
    post4 = hat["psi"].wedge(w2)

    hat_consistent = (
        hat["delta"] - hat["alpha"] - hat["gamma"] + hat["psi"]
    ).is_zero
    d0, d1, d2, d3, d4 = (f.d() for f in (th0, th1, th2, w1, w2))
    pre_ok = all(
        (lhs - rhs).is_zero
        for lhs, rhs in zip((d0, d1, d2, d3, d4), (pre0, pre1, pre2, pre3, pre4))
    )
    post_ok = all(
        (lhs - rhs).is_zero
        for lhs, rhs in zip((d0, d1, d2, d3, d4), (post0, post1, post2, post3, post4))
    )
    return hat_consistent and pre_ok and post_ok


def verify_structure_eq(sys, level):
    """Exact structure-equation identity check at one of the three levels."""
    if level == 9:
        return _verify_level9(sys)
    if level == 10:
        return _verify_level10(sys)
    if level == 11:
        return _verify_level11(sys)
    raise ValueError("level must be one of 9, 10, 11")


def estructure_diagnostic(sys):
    """Check the derived-form identities whose coefficients are the S's.

    Returns {"alpha": bool, "gamma": bool, "psi": bool}, one entry per
    derived connection form.  Requires an integrable system.
    """
    _require_integrable(sys)
    forms, M, _plain, hat = _reduced_connection(sys)
    S = {n: v.as_ratfunc(REDUCED) for n, v in curvature_S(sys).items()}
    th0, th1, th2 = forms["theta0"], forms["theta1"], forms["theta2"]
    w1, w2 = forms["omega1"], forms["omega2"]

    rhs_alpha = (
        S["S1"] * w1.wedge(th0)
        + S["S2"] * w2.wedge(th0)
        + S["S3"] * th1.wedge(th0)
        + S["S4"] * th2.wedge(th0)
        + S["S5"] * w1.wedge(th1)
        + S["S6"] * w1.wedge(w2)
        + S["S7"] * th2.wedge(w1)
        - M["M7"] * th1.wedge(w2)
    )
    rhs_gamma = (
        S["S8"] * w1.wedge(w2)
        + S["S9"] * w1.wedge(th0)
        + S["S5"] * th1.wedge(w1)
        + S["S10"] * th2.wedge(w1)
    )
    rhs_psi = (
        S["S11"] * w1.wedge(w2)
        + S["S12"] * w2.wedge(th0)
        + S["S13"] * th1.wedge(w2)
        + S["S14"] * th2.wedge(w2)
    )
    return {
        "alpha": (hat["alpha"].d() - rhs_alpha).is_zero,
        "gamma": (hat["gamma"].d() - rhs_gamma).is_zero,
        "psi": (hat["psi"].d() - rhs_psi).is_zero,
    }


def prop35_relations(sys):
    """The seven interdependency relations among the curvatures, each
    checked exactly on the reduced chart.

    The relation for S10 is implemented with the sign that the derived
    identities of estructure_diagnostic force; see the S7 composition:
    S10 = -S7 - M3 pointwise, which pins S10 = (M1 derivative)/c - 2 M3.
    Requires an integrable system.
    """
    _require_integrable(sys)
    frame = base_frame(sys, REDUCED)
    M = {n: v.as_ratfunc(REDUCED) for n, v in curvature_M(sys).items()}
    S = {n: v.as_ratfunc(REDUCED) for n, v in curvature_S(sys).items()}
    c = _var(REDUCED, "c")
    g = _var(REDUCED, "g")
    h = _var(REDUCED, "h")
    k = k_parameter(REDUCED)

    f11 = sys.f11.extend(REDUCED)
    f12 = sys.f12.extend(REDUCED)
    f22 = sys.f22.extend(REDUCED)
    rel = {}
    rel["M4"] = M["M4"] == -(1 / h**2) * (
        (-g * h / c) * frame["omega2"].apply(M["M1"])
        + (2 * g * h / c) * M["M1"] * frame["theta1"].apply(f12)
        - (g * h / c) * M["M1"] * frame["theta2"].apply(f22)
    )
    rel["M9"] = M["M9"] == -(1 / k**2) * (
        (-c * k / g) * frame["omega1"].apply(M["M6"])
        - (c * k / g) * M["M6"] * frame["theta1"].apply(f11)
        + (2 * c * k / g) * M["M6"] * frame["theta2"].apply(f12)
    )
    rel["S3"] = S["S3"] == -(k / (c * h)) * frame["theta2"].apply(M["M7"])
    rel["S4"] = S["S4"] == -(1 / c) * frame["theta1"].apply(M["M3"])
    rel["S7"] = S["S7"] == -(1 / c) * frame["theta1"].apply(M["M1"]) + M["M3"]
    rel["S10"] = S["S10"] == (1 / c) * frame["theta1"].apply(M["M1"]) - 2 * M["M3"]
    rel["S13"] = S["S13"] == -2 * M["M7"] + (1 / g) * frame["theta2"].apply(M["M6"])
    return rel


def verify_prop35(sys):
    """True iff all seven curvature interdependency relations hold."""
    return all(prop35_relations(sys).values())


def coordinate_form_diagnostic(sys):
    """Compare the frame-chain forms of M4, M5, M8, M9 against their
    independent plain-derivative transcriptions.

    Returns {name: bool}; exact mismatches surface here instead of being
    reconciled inside either computation.  Requires integrability, the
    regime where both transcriptions claim validity.
    """
    from .invariants import coordinate_forms_M

    _require_integrable(sys)
    frame_forms = curvature_M(sys)
    coord_forms = coordinate_forms_M(sys)
    out = {}
    for name, coord in coord_forms.items():
        frame_form = frame_forms[name]
        same_fiber = frame_form.exponents == coord.exponents
        same_value = (frame_form.sign * frame_form.base) == (
            coord.sign * coord.base
        )
        out[name] = same_fiber and same_value
    return out
