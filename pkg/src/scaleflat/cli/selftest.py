"""Property suites behind the selftest command.

Each suite exercises one guaranteed behavior end to end and reports a
single pass/fail with a short detail string.  The acceptance tests call
the same functions with their contractual sample counts, so the command
line entry point and the test suite cannot drift apart.
"""

import random
import time
from fractions import Fraction

import numpy as np

from ..curvature import (
    FLAT_TEST_NAMES,
    M_NAMES,
    S_NAMES,
    corollary37,
    curvature_M,
    curvature_S,
    flatness,
    quadratic_obstruction,
    verify_prop35,
    verify_structure_eq,
)
from ..duality import flat_family, dual_pde, incidence_identity
from ..fibration import (
    compact_type,
    decompose_in_intersection,
    full_linear,
    hyperplane_stabilizer,
    intersect,
    lie_algebra_dim,
    point_stabilizer,
    sample_element,
    scale_symmetry,
)
from ..jetframe import JET, PDESystem, contact_lift_verify, dual_frame, is_integrable
from ..symexpr import DomainError, RatFunc
from . import sampling
from .reports import (
    EXIT_FLAT,
    EXIT_NOT_FLAT,
    SelftestReport,
    SuiteResult,
)

FD_STEP = Fraction(1, 10**6)


def _suite(name, worker):
    start = time.perf_counter()
    try:
        passed, detail = worker()
    except Exception as exc:  # a crashed suite is a failed suite
        passed, detail = False, "crashed: %s: %s" % (type(exc).__name__, exc)
    return SuiteResult(
        name=name,
        passed=passed,
        detail=detail,
        seconds=round(time.perf_counter() - start, 4),
    )


def flat_baseline():
    """The zero system is flat with every test base identically zero."""
    report = flatness(PDESystem.from_strings("0", "0", "0"))
    bases = report.test_curvatures()
    all_zero = all(scalar.base.is_zero for scalar in bases.values())
    ok = report.verdict == "Flat" and len(bases) == 15 and all_zero
    return ok, "verdict %s, %d/15 bases identically zero" % (
        report.verdict,
        sum(scalar.base.is_zero for scalar in bases.values()),
    )


def structure_identities(seed, random_count=20, hessian_count=10):
    """Exact structure-equation identities at all three levels."""
    randoms, integrable = sampling.structure_pool(seed, random_count, hessian_count)
    failures = []
    for idx, sys in enumerate(randoms):
        for level in (9, 10):
            if not verify_structure_eq(sys, level):
                failures.append("random[%d] level %d" % (idx, level))
    for idx, sys in enumerate(integrable):
        if not verify_structure_eq(sys, 11):
            failures.append("integrable[%d] level 11" % idx)
    detail = "levels 9,10 on %d systems; level 11 on %d integrable" % (
        len(randoms),
        len(integrable),
    )
    if failures:
        detail += "; failed: " + ", ".join(failures[:4])
    return not failures, detail


def seven_relations(seed, random_count=20, hessian_count=10):
    """The seven curvature interrelations on every integrable pool member."""
    randoms, integrable = sampling.structure_pool(seed, random_count, hessian_count)
    pool = [sys for sys in randoms if is_integrable(sys)] + integrable
    bad = sum(0 if verify_prop35(sys) else 1 for sys in pool)
    return bad == 0, "%d integrable systems, %d relation failures" % (len(pool), bad)


def zfree_shortcut(seed, count=100):
    """Shortcut and full test agree on systems without z dependence."""
    rnd = random.Random(seed)
    mismatches = 0
    flats = 0
    for _ in range(count):
        P, Q, R = sampling.random_zfree_triple(rnd)
        sys = PDESystem(P, Q, R)
        quick = corollary37(P, Q, R)
        full = flatness(sys).verdict
        conditions = (
            P.derive("y").is_zero
            and Q.derive("y").is_zero
            and R.derive("y").is_zero
            and (P.derive("x2") - Q.derive("x1")).is_zero
            and (Q.derive("x2") - R.derive("x1")).is_zero
        )
        if quick != full or (quick == "Flat") != conditions:
            mismatches += 1
        if full == "Flat":
            flats += 1
    return mismatches == 0, "%d triples (%d flat), %d mismatches" % (
        count,
        flats,
        mismatches,
    )


def cubic_obstruction(seed, count=20):
    """Integrable systems with a cubic-or-higher z-monomial are never flat."""
    rnd = random.Random(seed)
    bad = 0
    for _ in range(count):
        sys = sampling.random_cubic_integrable(rnd)
        if not is_integrable(sys) or sys.z_degree() < 3:
            bad += 1
            continue
        if quadratic_obstruction(sys):
            bad += 1
            continue
        if flatness(sys).verdict == "Flat":
            bad += 1
    return bad == 0, "%d cubic integrable systems, %d anomalies" % (count, bad)


def known_verdicts():
    """Three pinned verdicts with their exact invariants."""
    problems = []
    quad = flatness(PDESystem.from_strings("z1^2", "0", "0"))
    if quad.verdict != "NotFlat" or quad.witnesses != ("S5",):
        problems.append("z1^2 verdict")
    elif str(quad.S["S5"].base) != "-2":
        problems.append("z1^2 witness base")
    hyper = flatness(PDESystem.from_strings("z1/x1", "0", "0"))
    if hyper.verdict != "Flat":
        problems.append("z1/x1 verdict")
    ray = flatness(PDESystem.from_strings("y", "0", "0"))
    if ray.verdict != "NotIntegrable" or str(ray.A) != "z2" or not ray.B.is_zero:
        problems.append("y obstruction")
    return not problems, "3 pinned systems" + (
        "" if not problems else "; failed: " + ", ".join(problems)
    )


def dual_flatness():
    """The flat family dualizes to the zero system; incidence identity holds."""
    dual = dual_pde(flat_family())
    zeros = all(f.is_zero for f in dual.entries().values())
    closed = not dual.is_open
    verdict = flatness(dual.as_system()).verdict if closed else "open"
    incidence = incidence_identity()
    ok = zeros and closed and verdict == "Flat" and incidence
    return ok, "dual entries zero: %s, dual verdict: %s, incidence: %s" % (
        zeros,
        verdict,
        incidence,
    )


def contact_lift(seed, count=10):
    """Lifted scale maps multiply the contact form by exactly Y_y."""
    rnd = random.Random(seed)
    bad = 0
    for _ in range(count):
        mapping = sampling.random_scale_map(rnd)
        outcome = contact_lift_verify(mapping)
        if not outcome.exact:
            bad += 1
    return bad == 0, "%d rational maps, %d pullback failures" % (count, bad)


_DIMENSION_EXPECTED = {
    "sl4": 15,
    "compact": 9,
    "compact&fix-point-e4": 7,
    "compact&fix-plane-e1": 7,
    "compact&fix-point-e4&fix-plane-e1": 6,
    "scale": 8,
    "scale&fix-point-e4": 5,
    "scale&fix-plane-e1": 7,
    "scale&fix-point-e4&fix-plane-e1": 5,
}


def fibration_dimensions():
    """Subgroup and orbit dimension counts for all three groups."""
    specs = {
        "sl4": full_linear(),
        "compact": compact_type(),
        "compact&fix-point-e4": intersect(compact_type(), point_stabilizer(4)),
        "compact&fix-plane-e1": intersect(compact_type(), hyperplane_stabilizer(1)),
        "compact&fix-point-e4&fix-plane-e1": intersect(
            compact_type(), point_stabilizer(4), hyperplane_stabilizer(1)
        ),
        "scale": scale_symmetry(),
        "scale&fix-point-e4": intersect(scale_symmetry(), point_stabilizer(4)),
        "scale&fix-plane-e1": intersect(scale_symmetry(), hyperplane_stabilizer(1)),
        "scale&fix-point-e4&fix-plane-e1": intersect(
            scale_symmetry(), point_stabilizer(4), hyperplane_stabilizer(1)
        ),
    }
    got = {name: lie_algebra_dim(spec) for name, spec in specs.items()}
    mismatch = {k: v for k, v in got.items() if _DIMENSION_EXPECTED[k] != v}
    quotients_ok = (
        got["compact"] - got["compact&fix-point-e4"] == 2
        and got["compact"] - got["compact&fix-point-e4&fix-plane-e1"] == 3
        and got["compact&fix-point-e4"]
        - got["compact&fix-point-e4&fix-plane-e1"]
        == 1
        and got["scale"] - got["scale&fix-point-e4"] == 3
        and got["scale"] - got["scale&fix-plane-e1"] == 1
        and got["scale&fix-point-e4"] - got["scale&fix-point-e4&fix-plane-e1"] == 0
        and got["scale&fix-plane-e1"] - got["scale&fix-point-e4&fix-plane-e1"] == 2
    )
    ok = not mismatch and quotients_ok
    detail = "9 subgroup dimensions, orbit counts for both groups"
    if mismatch:
        detail += "; wrong: %s" % mismatch
    if not quotients_ok:
        detail += "; quotient counts off"
    return ok, detail


def fibration_decompositions(seed, per_spec=100):
    """Rotation/sign/diagonal/unipotent splittings across every meet."""
    rng = np.random.default_rng(seed)
    base = compact_type()
    specs = {
        "group": base,
        "point": intersect(base, point_stabilizer(4)),
        "plane": intersect(base, hyperplane_stabilizer(1)),
        "both": intersect(base, point_stabilizer(4), hyperplane_stabilizer(1)),
    }
    failures = 0
    worst = 0.0
    for spec in specs.values():
        for _ in range(per_spec):
            g = sample_element(spec, rng)
            split = decompose_in_intersection(g, spec)
            worst = max(worst, split.residual)
            if not split.ok:
                failures += 1
    ok = failures == 0 and worst <= 1e-10
    return ok, "%d elements over 4 subgroups, worst residual %.2e, %d failures" % (
        4 * per_spec,
        worst,
        failures,
    )


class _NumericChains:
    """Drop-in chain evaluator using exact-rational central differences.

    Same call signature as the symbolic chain cache, but every frame
    derivative is recomputed numerically at a fixed chart point: the
    derivative along a frame field is the directional derivative along
    its frozen coefficient vector, approximated with step FD_STEP.  The
    curvature combination code runs unchanged on top, which isolates the
    differentiation engine as the only thing under test.
    """

    def __init__(self, sys, point, step=FD_STEP):
        self.entries = {"f11": sys.f11, "f12": sys.f12, "f22": sys.f22}
        self.fields = dual_frame(sys)
        self.point = tuple(point[name] for name in JET.names)
        self.step = step
        self.memo = {}

    def _value(self, key, point):
        memo_key = (key, point)
        if memo_key in self.memo:
            return self.memo[memo_key]
        env = dict(zip(JET.names, point))
        if len(key) == 1:
            value = self.entries[key[0]].eval(env)
        else:
            field = self.fields[key[-1]]
            direction = tuple(comp.eval(env) for comp in field.components)
            plus = tuple(p + self.step * d for p, d in zip(point, direction))
            minus = tuple(p - self.step * d for p, d in zip(point, direction))
            value = (self._value(key[:-1], plus) - self._value(key[:-1], minus)) / (
                2 * self.step
            )
        self.memo[memo_key] = value
        return value

    def __call__(self, fname, *labels):
        return RatFunc.const(JET, self._value((fname,) + labels, self.point))


# cubic in z so that no curvature base degenerates and the difference
# quotients carry genuine truncation error
_CROSS_CHECK_SYSTEM = (
    "z1^3 + x1*z2^2 + y*z1 + x2",
    "z1^2*z2 + z1*z2^2 + x1*x2 + y",
    "z2^3 + x1*z1*z2 + x2*z2 + x1",
)


def derivative_cross_check(seed, points=10, rel_tol=Fraction(1, 10**4)):
    """Every curvature base against a finite-difference recomputation."""
    sys = PDESystem.from_strings(*_CROSS_CHECK_SYSTEM)
    exact = {**curvature_M(sys), **curvature_S(sys)}
    rnd = random.Random(seed)
    names = list(M_NAMES) + list(S_NAMES)
    worst = Fraction(0)
    compared = 0
    nonzero = set()
    for _ in range(points):
        for _attempt in range(20):
            point = sampling.random_rational_point(rnd)
            try:
                numeric_chains = _NumericChains(sys, point)
                numeric = {
                    **curvature_M(sys, chains=numeric_chains),
                    **curvature_S(sys, chains=numeric_chains),
                }
                env = dict(point)
                for name in names:
                    exact_value = exact[name].base.eval(env)
                    numeric_value = numeric[name].base.eval(env)
                    err = abs(numeric_value - exact_value) / max(
                        Fraction(1), abs(exact_value)
                    )
                    worst = max(worst, err)
                    compared += 1
                    if exact_value != 0:
                        nonzero.add(name)
                break
            except (DomainError, ZeroDivisionError):
                continue
        else:
            return False, "could not find pole-free evaluation points"
    ok = worst < rel_tol and compared == points * len(names) and len(nonzero) >= 25
    return ok, "%d comparisons over %d bases (%d nonzero), worst error %.2e" % (
        compared,
        len(names),
        len(nonzero),
        float(worst),
    )


def run_selftest(seed=0, quick=False) -> SelftestReport:
    """All property suites; quick mode shrinks sample counts."""
    counts = {
        "random": 6 if quick else 20,
        "hessian": 3 if quick else 10,
        "zfree": 25 if quick else 100,
        "cubic": 6 if quick else 20,
        "maps": 4 if quick else 10,
        "per_spec": 25 if quick else 100,
        "points": 3 if quick else 10,
    }
    suites = [
        _suite("flat_baseline", flat_baseline),
        _suite(
            "structure_identities",
            lambda: structure_identities(
                seed, counts["random"], counts["hessian"]
            ),
        ),
        _suite(
            "seven_relations",
            lambda: seven_relations(seed, counts["random"], counts["hessian"]),
        ),
        _suite("zfree_shortcut", lambda: zfree_shortcut(seed, counts["zfree"])),
        _suite("cubic_obstruction", lambda: cubic_obstruction(seed, counts["cubic"])),
        _suite("known_verdicts", known_verdicts),
        _suite("dual_flatness", dual_flatness),
        _suite("contact_lift", lambda: contact_lift(seed, counts["maps"])),
        _suite("fibration_dimensions", fibration_dimensions),
        _suite(
            "fibration_decompositions",
            lambda: fibration_decompositions(seed, counts["per_spec"]),
        ),
        _suite(
            "derivative_cross_check",
            lambda: derivative_cross_check(seed, counts["points"]),
        ),
    ]
    ok = all(suite.passed for suite in suites)
    return SelftestReport(
        seed=seed,
        quick=quick,
        suites=suites,
        ok=ok,
        exit_code=EXIT_FLAT if ok else EXIT_NOT_FLAT,
    )
