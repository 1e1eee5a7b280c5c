"""Dual systems, the flat correspondence, and its projections."""

from fractions import Fraction

import pytest

from scaleflat.curvature import VERDICT_FLAT, flatness
from scaleflat.duality import (
    FAMILY,
    JOINT,
    SOLUTION,
    DualEquation,
    SolutionFamily,
    dual_pde,
    exchange_roles,
    fiber_of_solution,
    flat_family,
    flat_projections,
    incidence_identity,
)
from scaleflat.symexpr import DomainError, parse


def test_family_validation():
    with pytest.raises(DomainError):
        SolutionFamily.from_strings("X1*x1 + X2*x2")  # no Y dependence
    with pytest.raises(DomainError):
        SolutionFamily.from_strings("Y", inverse_x1="-Z1")  # half an inverse
    with pytest.raises(DomainError):
        # wrong inverse: the dual jet identity pins x1 to -Z1 here
        SolutionFamily.from_strings(
            "X1*x1 + X2*x2 + Y", inverse_x1="Z1", inverse_x2="-Z2"
        )


def test_dual_of_flat_family_is_flat():
    eq = dual_pde(flat_family())
    assert not eq.is_open
    assert eq.chart is SOLUTION
    assert eq.F11.is_zero and eq.F12.is_zero and eq.F22.is_zero
    assert flatness(eq.as_system()).verdict == VERDICT_FLAT


def test_dual_closes_without_inverse_when_x_cancels():
    # quadratic in x1, still all second derivatives in (X, Y) vanish
    fam = SolutionFamily.from_strings("X1*x1^2 + X2*x2 + Y")
    eq = dual_pde(fam)
    assert not eq.is_open
    assert eq.F11.is_zero and eq.F12.is_zero and eq.F22.is_zero


def test_dual_of_degenerate_family():
    eq = dual_pde(SolutionFamily.from_strings("Y"))
    assert not eq.is_open
    assert eq.F11.is_zero and eq.F12.is_zero and eq.F22.is_zero


def test_dual_left_open_with_residual_x():
    fam = SolutionFamily.from_strings("X1*x1 + X2*x2 + Y + x1*Y^2")
    eq = dual_pde(fam)
    assert eq.is_open
    assert eq.chart is JOINT
    assert eq.F11.num.degree("x1") > 0 or eq.F11.den.degree("x1") > 0
    with pytest.raises(DomainError):
        eq.as_system()


def test_dual_with_nontrivial_inverse():
    # y = X1 x1 + X2 x2 + Y scaled in X1: same leaves, reparametrized
    fam = SolutionFamily.from_strings(
        "2*X1*x1 + X2*x2 + Y", inverse_x1="-Z1/2", inverse_x2="-Z2"
    )
    eq = dual_pde(fam)
    assert not eq.is_open
    assert eq.F11.is_zero and eq.F12.is_zero and eq.F22.is_zero


def test_role_exchange_is_an_involution_at_the_flat_point():
    fam = flat_family()
    swapped = exchange_roles(fam)
    # the reconstructed family again presents affine graphs
    assert swapped.h == parse("Y - x1*X1 - x2*X2", FAMILY)
    eq = dual_pde(swapped)
    assert eq.F11.is_zero and eq.F12.is_zero and eq.F22.is_zero
    assert exchange_roles(swapped).h == fam.h


def test_role_exchange_needs_affine_Y():
    with pytest.raises(DomainError):
        exchange_roles(SolutionFamily.from_strings("X1*x1 + Y^2"))


def test_flat_projections_values():
    p1, p2 = flat_projections((0, 0, 0, 0, 0))
    assert p1 == (0, 0, 0) and p2 == (0, 0, 0)
    p1, p2 = flat_projections((1, 2, 3, 4, 5))
    assert p1 == (1, 2, 3)
    assert p2 == (4, 5, -11)
    assert all(isinstance(t, Fraction) for t in p1 + p2)


def test_incidence_identity_symbolic():
    assert incidence_identity()


def test_fiber_of_solution_leaf():
    leaf = fiber_of_solution(1, 1, 0)
    assert leaf.dimension == 2
    for s, t in [(0, 0), (1, 2), (-3, Fraction(1, 2)), (7, -7)]:
        p = leaf.point(s, t)
        assert p[2] == p[0] + p[1]  # y = x1 + x2 on this leaf
        _, back = flat_projections(p)
        assert back == (1, 1, 0)
    zero_leaf = fiber_of_solution(0, 0, 0)
    assert zero_leaf.point(5, 6) == (5, 6, 0, 0, 0)


def test_projection_surjectivity_by_explicit_preimages():
    for target in [(0, 0, 0), (1, -2, Fraction(3, 4)), (9, 9, 9)]:
        # pi1 preimage: plant the base point with zero slopes
        p = target + (Fraction(0), Fraction(0))
        assert flat_projections(p)[0] == tuple(Fraction(t) for t in target)
        # pi2 preimage: the leaf point over the origin
        a, b, c = target
        q = fiber_of_solution(a, b, c).point(0, 0)
        assert flat_projections(q)[1] == tuple(Fraction(t) for t in target)
