"""Torsions, curvatures, structure equations, and the flatness verdict.

The frozen values here were derived once by hand from the frame
formulas and double-checked by the structure-equation verifier; they
guard the whole chain against silent formula drift.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scaleflat.curvature import (
    BUNDLE,
    FLAT_TEST_NAMES,
    REDUCED,
    CurvatureReport,
    NotIntegrableError,
    ScreenInapplicableError,
    VERDICT_FLAT,
    VERDICT_NOT_FLAT,
    VERDICT_NOT_INTEGRABLE,
    coordinate_form_diagnostic,
    corollary37,
    curvatures,
    estructure_diagnostic,
    flatness,
    k_parameter,
    prop35_relations,
    quadratic_obstruction,
    solve_reduction,
    torsions_L,
    torsions_T,
    verify_prop35,
    verify_structure_eq,
)
from scaleflat.jetframe import JET, PDESystem, ScaleMap, transform_system
from scaleflat.symexpr import DomainError, parse


def sys_of(f11, f12="0", f22="0"):
    return PDESystem.from_strings(f11, f12, f22)


def bundle(text):
    return parse(text, BUNDLE)


ZERO_SYS = sys_of("0")
HESSIAN = sys_of("6*x1*x2", "3*x1^2", "0")  # second derivatives of x1^3*x2
SHIFT = sys_of("z1", "0", "z2")
LOG_GRAPH = sys_of("z1^2", "z1*z2", "z2^2")  # graphs of -log(affine)


# ---- bundle charts ----


def test_chart_layout():
    assert BUNDLE.names == ("x1", "x2", "y", "z1", "z2", "b", "c", "e", "g", "h")
    assert REDUCED.names == ("x1", "x2", "y", "z1", "z2", "c", "g", "h")
    assert k_parameter(BUNDLE) == bundle("c*h/g")


# ---- torsions ----


def test_torsion_T_frozen_values():
    T = torsions_T(ZERO_SYS)
    assert T["T3"] == bundle("b^2/(c^2*h^2)")
    assert T["T1"] == bundle("-b/(c*h)")
    # with f = 0 every T5 summand carries a b factor
    assert T["T5"].substitute({"b": parse("0", BUNDLE)}).is_zero
    # T1 is system-independent
    assert torsions_T(sys_of("z1*z2", "y", "x1"))["T1"] == bundle("-b/(c*h)")


def test_torsion_L_frozen_values():
    L = torsions_L(sys_of("x1*z2^2", "0", "0"))
    # L3 carries the z2-derivative of f11 with the c/(g*h) prefactor
    assert L["L3"] == bundle("-c*(2*x1*z2)/(g*h)")
    assert torsions_L(ZERO_SYS)["L1"] == bundle("-2*b/(c*h)")


def test_reduction_solves_for_b_and_e():
    red = solve_reduction(sys_of("0", "z1*z2", "0"))
    assert red["b"] == parse("-z1*c", REDUCED)
    assert red["e"] == parse("-z2*g", REDUCED)
    # reduction of the flat system kills both
    flat_red = solve_reduction(ZERO_SYS)
    assert flat_red["b"].is_zero and flat_red["e"].is_zero


# ---- curvatures ----


def test_curvatures_zero_system():
    M, S = curvatures(ZERO_SYS)
    assert set(M) == {"M%d" % i for i in range(1, 14)}
    assert set(S) == {"S%d" % i for i in range(1, 15)}
    for fam in (M, S):
        for scalar in fam.values():
            assert scalar.is_zero


def test_curvature_fibered_scalar_structure():
    M, _ = curvatures(sys_of("z2^2"))
    m1 = M["M1"]
    assert m1.sign == Fraction(-1)
    assert m1.exponents == (0, 1, 0, -1, -1)  # c/(g*h) over (b,c,e,g,h)
    assert m1.base == parse("2*z2", JET)
    assert not m1.is_zero
    assert m1.as_ratfunc(BUNDLE) == bundle("-2*z2*c/(g*h)")


def test_curvature_frozen_bases():
    _, S = curvatures(sys_of("z1^2"))
    assert S["S5"].base == parse("-2", JET)
    _, S3 = curvatures(sys_of("z1^3"))
    assert S3["S5"].base == parse("-6*z1", JET)
    M, _ = curvatures(LOG_GRAPH)
    assert M["M2"].base == parse("1", JET)
    assert M["M2"].exponents == (0, -1, 0, 0, -1)


def test_curvatures_require_integrability():
    with pytest.raises(NotIntegrableError) as err:
        curvatures(sys_of("y"))
    assert err.value.a == parse("z2", JET)
    assert err.value.b.is_zero


# ---- structure equations ----


def test_structure_eq_level9():
    assert verify_structure_eq(ZERO_SYS, level=9)
    assert verify_structure_eq(HESSIAN, level=9)
    # levels 9 and 10 precede the Frobenius rewriting: they must hold
    # verbatim on non-integrable systems too
    assert verify_structure_eq(sys_of("y"), level=9)
    assert verify_structure_eq(sys_of("x2*y", "z1*z2", "x1"), level=9)


def test_structure_eq_level10():
    assert verify_structure_eq(ZERO_SYS, level=10)
    assert verify_structure_eq(HESSIAN, level=10)
    assert verify_structure_eq(sys_of("y"), level=10)
    assert verify_structure_eq(sys_of("z2^2", "x1*x2", "z1*y"), level=10)


def test_structure_eq_level11():
    assert verify_structure_eq(ZERO_SYS, level=11)
    assert verify_structure_eq(SHIFT, level=11)
    assert verify_structure_eq(HESSIAN, level=11)
    assert verify_structure_eq(sys_of("z1^2"), level=11)


def test_structure_eq_level11_needs_integrability():
    with pytest.raises(NotIntegrableError):
        verify_structure_eq(sys_of("y"), level=11)


def test_structure_eq_rejects_unknown_level():
    with pytest.raises(ValueError):
        verify_structure_eq(ZERO_SYS, level=12)


# ---- derived identity checks ----


@pytest.mark.parametrize(
    "sys_",
    [ZERO_SYS, SHIFT, HESSIAN, sys_of("z1^2"), sys_of("z2^2"), LOG_GRAPH],
    ids=["zero", "shift", "hessian", "z1sq", "z2sq", "loggraph"],
)
def test_prop35_relations_hold(sys_):
    rel = prop35_relations(sys_)
    assert len(rel) == 7
    assert all(rel.values()), {k: v for k, v in rel.items() if not v}
    assert verify_prop35(sys_)


@pytest.mark.parametrize(
    "sys_",
    [ZERO_SYS, SHIFT, HESSIAN, sys_of("z1^2")],
    ids=["zero", "shift", "hessian", "z1sq"],
)
def test_estructure_display(sys_):
    diag = estructure_diagnostic(sys_)
    assert set(diag) == {"alpha", "gamma", "psi"}
    assert all(diag.values())


@pytest.mark.parametrize(
    "sys_",
    [ZERO_SYS, HESSIAN, sys_of("z1^2"), LOG_GRAPH],
    ids=["zero", "hessian", "z1sq", "loggraph"],
)
def test_coordinate_forms_agree_with_frame_forms(sys_):
    diag = coordinate_form_diagnostic(sys_)
    assert set(diag) == {"M4", "M5", "M8", "M9"}
    assert all(diag.values())


# ---- flatness verdicts ----


def test_flatness_known_verdicts():
    r = flatness(ZERO_SYS)
    assert r.verdict == VERDICT_FLAT and r.is_flat
    assert r.witnesses == ()
    assert all(r.M[n].is_zero for n in r.M)
    assert all(r.S[n].is_zero for n in r.S)

    r = flatness(sys_of("z1^2"))
    assert r.verdict == VERDICT_NOT_FLAT
    assert r.witnesses == ("S5",)

    r = flatness(sys_of("z1/x1"))
    assert r.verdict == VERDICT_FLAT

    # flat despite z-quadratic entries: the flattening is not rational
    assert flatness(LOG_GRAPH).verdict == VERDICT_FLAT

    r = flatness(sys_of("y"))
    assert r.verdict == VERDICT_NOT_INTEGRABLE
    assert r.A == parse("z2", JET)
    assert r.B.is_zero
    assert not r.M and not r.S

    assert flatness(sys_of("z1^3")).witnesses == ("S5",)
    assert flatness(sys_of("z2^2")).witnesses == ("M1",)


def test_flatness_report_test_curvatures():
    r = flatness(sys_of("z2^2"))
    tc = r.test_curvatures()
    assert tuple(tc) == FLAT_TEST_NAMES
    assert not tc["M1"].is_zero
    assert tc["S5"].is_zero


def test_flatness_verdict_is_scale_invariant():
    m = ScaleMap.from_strings("1/x1", "x2", "x1*y")
    inv = ScaleMap.from_strings("1/x1", "x2", "x1*y")
    moved_flat = transform_system(ZERO_SYS, m, inverse=inv)
    assert flatness(moved_flat).verdict == VERDICT_FLAT

    m2 = ScaleMap.from_strings("2*x1", "x2", "y")
    inv2 = ScaleMap.from_strings("x1/2", "x2", "y")
    moved = transform_system(sys_of("z1^2"), m2, inverse=inv2)
    assert flatness(moved).verdict == VERDICT_NOT_FLAT


# ---- the z-free shortcut ----


def test_corollary37_examples():
    P, Q, R = parse("x2^2", JET), parse("2*x1*x2", JET), parse("x1^2", JET)
    assert corollary37(P, Q, R) == VERDICT_FLAT
    zero = parse("0", JET)
    assert corollary37(zero, zero, zero) == VERDICT_FLAT
    assert corollary37(parse("y", JET), zero, zero) == VERDICT_NOT_INTEGRABLE


def test_corollary37_rejects_z_dependence():
    with pytest.raises(DomainError):
        corollary37(parse("z1", JET), parse("0", JET), parse("0", JET))


zfree = st.sampled_from(
    ["0", "1", "x1", "x2", "y", "x1*x2", "x2^2", "x1*y", "x1^2*x2", "y^2", "x1 + 2*x2"]
)


@given(zfree, zfree, zfree)
@settings(max_examples=40, deadline=None)
def test_corollary37_matches_flatness(p, q, r):
    P, Q, R = parse(p, JET), parse(q, JET), parse(r, JET)
    assert corollary37(P, Q, R) == flatness(PDESystem(P, Q, R)).verdict


# ---- the quadratic screen ----


def test_quadratic_obstruction():
    assert quadratic_obstruction(ZERO_SYS)
    assert quadratic_obstruction(sys_of("z1*z2"))
    assert not quadratic_obstruction(sys_of("z1^3"))
    assert not quadratic_obstruction(sys_of("z1^2*z2"))
    with pytest.raises(ScreenInapplicableError):
        quadratic_obstruction(sys_of("1/z1"))


def test_degree_three_integrable_systems_are_never_flat():
    # f11 in (x1, z1) and f22 in (x2, z2) with f12 = 0 keeps A = B = 0
    for f11, f22 in [("z1^3", "0"), ("x1*z1^3", "z2^3"), ("z1^4", "x2*z2^3")]:
        s = sys_of(f11, "0", f22)
        r = flatness(s)
        assert r.verdict == VERDICT_NOT_FLAT, (f11, f22)
        assert not quadratic_obstruction(s)
