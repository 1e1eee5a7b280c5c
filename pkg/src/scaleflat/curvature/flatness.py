"""Verdicts: integrability screen, the fifteen-coefficient flat test,
and the closed-form shortcut for systems without derivative dependence.
"""

from ..jetframe import JET, integrability
from ..symexpr import DomainError, RatFunc
from .errors import ScreenInapplicableError
from .invariants import FLAT_TEST_NAMES, ChainCache, curvature_M, curvature_S

VERDICT_FLAT = "Flat"
VERDICT_NOT_FLAT = "NotFlat"
VERDICT_NOT_INTEGRABLE = "NotIntegrable"


class CurvatureReport:
    """Everything the flat test computes, plus the verdict.

    M and S hold FiberedScalars keyed "M1".."M13" / "S1".."S14"; they
    are empty dicts when the system is not integrable.  witnesses lists
    the members of the fifteen-coefficient test set with nonzero base,
    in fixed order; it is nonempty exactly for NotFlat.
    """

    __slots__ = ("A", "B", "M", "S", "verdict", "witnesses")

    def __init__(self, A, B, M, S, verdict, witnesses):
        self.A = A
        self.B = B
        self.M = M
        self.S = S
        self.verdict = verdict
        self.witnesses = tuple(witnesses)

    @property
    def is_flat(self):
        return self.verdict == VERDICT_FLAT

    def test_curvatures(self):
        both = {**self.M, **self.S}
        return {name: both[name] for name in FLAT_TEST_NAMES if name in both}

    def __repr__(self):
        return "CurvatureReport(verdict=%s, witnesses=%s)" % (
            self.verdict,
            list(self.witnesses),
        )


def flatness(sys):
    """Full decision procedure for equivalence to the flat system."""
    a, b = integrability(sys)
    if not (a.is_zero and b.is_zero):
        return CurvatureReport(a, b, {}, {}, VERDICT_NOT_INTEGRABLE, ())
    chains = ChainCache(sys)
    M = curvature_M(sys, chains)
    S = curvature_S(sys, chains)
    both = {**M, **S}
    witnesses = [name for name in FLAT_TEST_NAMES if not both[name].is_zero]
    verdict = VERDICT_FLAT if not witnesses else VERDICT_NOT_FLAT
    return CurvatureReport(a, b, M, S, verdict, witnesses)


def corollary37(P, Q, R):
    """Shortcut verdict for right-hand sides free of z1 and z2.

    For this family the whole curvature test collapses into the
    integrability conditions: closedness in the x-slots and no y
    dependence.  Returns Flat when they hold, NotIntegrable otherwise.
    """
    for f in (P, Q, R):
        if not isinstance(f, RatFunc) or f.chart != JET:
            raise DomainError("inputs must be rational functions on the jet chart")
        if f.depends_on("z1") or f.depends_on("z2"):
            raise DomainError("inputs must not involve z1 or z2")
    conditions = (
        P.derive("y").is_zero
        and Q.derive("y").is_zero
        and R.derive("y").is_zero
        and (P.derive("x2") - Q.derive("x1")).is_zero
        and (Q.derive("x2") - R.derive("x1")).is_zero
    )
    return VERDICT_FLAT if conditions else VERDICT_NOT_INTEGRABLE


def quadratic_obstruction(sys):
    """Degree screen: True iff every right-hand side is polynomial of
    combined degree at most two in (z1, z2).

    A False answer rules the flat verdict out.  Rational dependence on
    z1 or z2 makes the screen inapplicable, which is raised distinctly
    rather than folded into either boolean.
    """
    if sys.rational_in_z():
        raise ScreenInapplicableError(
            "degree screen needs polynomial dependence on z1, z2"
        )
    return sys.z_degree() <= 2
