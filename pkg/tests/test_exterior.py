"""Graded algebra of forms: wedge signs, d, reduction mod an ideal."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scaleflat.exterior import DiffForm, d, reduce_mod, wedge
from scaleflat.symexpr import Chart, DomainError, RatFunc, parse

UVW = Chart(("u", "v", "w"))


def rf(text):
    return parse(text, UVW)


def one_form(**coeffs):
    terms = {}
    for name, text in coeffs.items():
        terms[(UVW.index(name),)] = rf(text)
    return DiffForm(UVW, 1, terms)


du = DiffForm.differential(UVW, "u")
dv = DiffForm.differential(UVW, "v")
dw = DiffForm.differential(UVW, "w")


def test_constructors_and_predicates():
    z = DiffForm.zero(UVW, 2)
    assert z.is_zero and z.degree == 2
    s = DiffForm.scalar(rf("u + 1"))
    assert s.degree == 0
    assert s.coefficient() == rf("u + 1")
    assert du.coefficient("u") == rf("1")
    assert du.coefficient("v").is_zero


def test_malformed_terms_rejected():
    with pytest.raises(DomainError):
        DiffForm(UVW, 1, {(0, 1): rf("1")})
    with pytest.raises(DomainError):
        DiffForm(UVW, 2, {(1, 0): rf("1")})  # not increasing
    with pytest.raises(DomainError):
        DiffForm(UVW, 4, {})


def test_wedge_antisymmetry():
    assert du.wedge(dv) == -(dv.wedge(du))
    assert du.wedge(du).is_zero
    # signed coefficient extraction follows the permutation
    w2 = du.wedge(dv)
    assert w2.coefficient("u", "v") == rf("1")
    assert w2.coefficient("v", "u") == rf("-1")


def test_wedge_associativity_and_overflow():
    a = one_form(u="v", w="u*w")
    b = one_form(v="u + 1")
    c = one_form(w="2")
    assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))
    top = du.wedge(dv).wedge(dw)
    assert top.wedge(du).is_zero  # degree 4 on a 3-chart


def test_scalar_multiplication_and_linearity():
    a = one_form(u="v^2", v="-1/3")
    assert (a * rf("3")).coefficient("v") == rf("-1")
    assert (2 * a - a - a).is_zero
    with pytest.raises(DomainError):
        a + du.wedge(dv)


def test_exterior_derivative_on_functions():
    f = DiffForm.scalar(rf("u^2*v"))
    df = f.d()
    assert df.coefficient("u") == rf("2*u*v")
    assert df.coefficient("v") == rf("u^2")
    assert df.coefficient("w").is_zero


def test_d_squared_zero_fixed():
    f = DiffForm.scalar(rf("(u*v - w^2)/(u + 3)"))
    assert f.d().d().is_zero
    a = one_form(u="v*w", v="u/(w + 1)", w="u^2")
    assert d(d(a)).is_zero


def test_leibniz_function_times_form():
    f = rf("u*w + 2")
    a = one_form(v="u*v", w="1/u")
    lhs = d(a * f)
    rhs = DiffForm.scalar(f).d().wedge(a) + a.d() * f
    assert lhs == rhs


coeff_polys = st.sampled_from(
    ["0", "1", "-2", "u", "v", "w", "u*v", "w^2", "u - v", "2*w + 1", "u*w"]
)


@st.composite
def small_one_forms(draw):
    terms = {}
    for i in range(3):
        c = parse(draw(coeff_polys), UVW)
        if not c.is_zero:
            terms[(i,)] = c
    return DiffForm(UVW, 1, terms)


@given(small_one_forms())
@settings(max_examples=60, deadline=None)
def test_d_squared_zero_random(a):
    assert d(d(a)).is_zero


@given(small_one_forms(), small_one_forms())
@settings(max_examples=60, deadline=None)
def test_d_antiderivation_random(a, b):
    # d(a ^ b) = da ^ b - a ^ db for 1-forms a, b
    assert d(a.wedge(b)) == d(a).wedge(b) - a.wedge(d(b))


def test_reduce_mod_single_relation():
    # set dw = u du; then dw ^ dv becomes u du ^ dv
    ideal = [dw - du * rf("u")]
    reduced = reduce_mod(dw.wedge(dv), ideal, leaders=("w",))
    assert reduced == du.wedge(dv) * rf("u")


def test_reduce_mod_auto_leader_matches_explicit():
    ideal = [dw - du * rf("u") - dv * rf("v^2")]
    form = dw.wedge(du)
    assert reduce_mod(form, ideal) == reduce_mod(form, ideal, leaders=("w",))


def test_reduce_mod_cascading_rows():
    # dv = dw, dw = du: both substitutions must land on du
    ideal = [dv - dw, dw - du]
    reduced = reduce_mod(dv.wedge(du), ideal, leaders=("v", "w"))
    assert reduced.is_zero


def test_reduce_mod_rejects_unsolvable():
    ideal = [du + dv, du + dv]
    with pytest.raises(DomainError):
        reduce_mod(dw, ideal)
    with pytest.raises(DomainError):
        reduce_mod(dw, [du.wedge(dv)])


def test_reduce_mod_annihilates_ideal_members():
    ideal = [dw - du * rf("u*v"), dv - du * rf("w")]
    for omega in ideal:
        assert reduce_mod(omega, ideal).is_zero
