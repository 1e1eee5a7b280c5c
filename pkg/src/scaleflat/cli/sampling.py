"""Deterministic random inputs for the property suites.

All generators take a random.Random instance so a seed pins the whole
stream; the selftest and the acceptance tests replay identical pools.
"""

import random
from fractions import Fraction

from ..jetframe import JET, PDESystem, ScaleMap
from ..symexpr import RatFunc

_COEFFS = (-3, -2, -1, 1, 2, 3)


def _monomial(coeff, powers):
    out = RatFunc.const(JET, coeff)
    for name, exp in powers.items():
        if exp:
            out = out * RatFunc.var(JET, name) ** exp
    return out


def _random_entry(rnd, z_degree=2, coeff_degree=2, max_terms=3):
    """Sparse polynomial with bounded z-degree and coefficient degree."""
    total = RatFunc.const(JET, 0)
    for _ in range(rnd.randint(1, max_terms)):
        xdeg = rnd.randint(0, coeff_degree)
        x1 = rnd.randint(0, xdeg)
        leftover = xdeg - x1
        x2 = rnd.randint(0, leftover)
        ydeg = leftover - x2
        zdeg = rnd.randint(0, z_degree)
        z1 = rnd.randint(0, zdeg)
        z2 = zdeg - z1
        total = total + _monomial(
            rnd.choice(_COEFFS),
            {"x1": x1, "x2": x2, "y": ydeg, "z1": z1, "z2": z2},
        )
    return total


def random_polynomial_system(rnd):
    """System with z-degree at most 2 and coefficient degree at most 2."""
    return PDESystem(_random_entry(rnd), _random_entry(rnd), _random_entry(rnd))


def random_quartic_hessian(rnd):
    """Second-derivative system of a random quartic in the base variables.

    Mixed partials of a potential commute, so these are integrable by
    construction.
    """
    potential = RatFunc.const(JET, 0)
    for _ in range(rnd.randint(3, 6)):
        deg = rnd.randint(2, 4)
        d1 = rnd.randint(0, deg)
        potential = potential + _monomial(
            rnd.choice(_COEFFS), {"x1": d1, "x2": deg - d1}
        )
    return PDESystem(
        potential.derive("x1").derive("x1"),
        potential.derive("x1").derive("x2"),
        potential.derive("x2").derive("x2"),
    )


def shift_system():
    return PDESystem.from_strings("z1", "0", "z2")


def structure_pool(seed, random_count, hessian_count):
    """The two pools the structure-identity criteria run over."""
    rnd = random.Random(seed)
    randoms = [random_polynomial_system(rnd) for _ in range(random_count)]
    integrable = [random_quartic_hessian(rnd) for _ in range(hessian_count)]
    integrable.append(shift_system())
    return randoms, integrable


def _zfree_entry(rnd, max_terms=3):
    total = RatFunc.const(JET, 0)
    for _ in range(rnd.randint(1, max_terms)):
        deg = rnd.randint(0, 3)
        d1 = rnd.randint(0, deg)
        d2 = rnd.randint(0, deg - d1)
        total = total + _monomial(
            rnd.choice(_COEFFS), {"x1": d1, "x2": d2, "y": deg - d1 - d2}
        )
    return total


def random_zfree_triple(rnd):
    """Triple (P, Q, R) free of z1, z2; a flat-by-construction branch keeps
    the shortcut's Flat side exercised."""
    if rnd.random() < 0.4:
        potential = RatFunc.const(JET, 0)
        for _ in range(rnd.randint(2, 5)):
            deg = rnd.randint(2, 5)
            d1 = rnd.randint(0, deg)
            potential = potential + _monomial(
                rnd.choice(_COEFFS), {"x1": d1, "x2": deg - d1}
            )
        return (
            potential.derive("x1").derive("x1"),
            potential.derive("x1").derive("x2"),
            potential.derive("x2").derive("x2"),
        )
    return _zfree_entry(rnd), _zfree_entry(rnd), _zfree_entry(rnd)


def random_cubic_integrable(rnd):
    """Integrable system carrying a z-monomial of degree at least 3.

    Right sides of the shape f11 = p(x1, z1), f12 = 0, f22 = q(x2, z2)
    satisfy both integrability conditions identically.
    """
    deg = rnd.randint(3, 4)
    p = _monomial(rnd.choice((1, 2, 3)), {"z1": deg})
    if rnd.random() < 0.7:
        p = p + _monomial(
            rnd.choice(_COEFFS), {"x1": rnd.randint(0, 2), "z1": rnd.randint(0, 2)}
        )
    if rnd.random() < 0.5:
        q = _monomial(rnd.choice(_COEFFS), {"x2": rnd.randint(0, 1), "z2": 3})
    else:
        q = RatFunc.const(JET, 0)
    return PDESystem(p, RatFunc.const(JET, 0), q)


def _random_axis_map(rnd, var):
    kind = rnd.randrange(4)
    a = rnd.choice(_COEFFS)
    b = rnd.randint(-3, 3)
    if kind == 0:
        return "%d*%s + %d" % (a, var, b)
    if kind == 1:
        c = rnd.choice(_COEFFS)
        d = rnd.randint(1, 3)
        while a * d == b * c:
            d += 1
        return "(%d*%s + %d)/(%d*%s + %d)" % (a, var, b, c, var, d)
    if kind == 2:
        return "%s^%d" % (var, rnd.choice((2, 3)))
    return "%d/%s" % (a, var)


def _random_vertical_map(rnd):
    kind = rnd.randrange(3)
    c = rnd.choice(_COEFFS)
    if kind == 0:
        return "%d*y + %d*x1 + %d*x2^2" % (c, rnd.randint(-2, 2), rnd.randint(-2, 2))
    if kind == 1:
        return "y/(%d + x1^2)" % rnd.choice((1, 2, 3))
    return "(%d*y + x1*x2)/%d" % (c, rnd.choice((1, 2, 3)))


def random_scale_map(rnd):
    """Random rational scale transformation with a valid contact lift."""
    return ScaleMap.from_strings(
        _random_axis_map(rnd, "x1"),
        _random_axis_map(rnd, "x2"),
        _random_vertical_map(rnd),
    )


def random_rational_point(rnd, names=None):
    """Exact rational chart point with small numerators and denominators."""
    picked = names if names is not None else JET.names
    return {
        name: Fraction(rnd.randint(-6, 6), rnd.randint(1, 4)) for name in picked
    }
