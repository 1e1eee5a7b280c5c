"""Acceptance gate.

One test per guaranteed behavior, each printing a single pass/fail
line.  Counts, tolerances, and time budgets here are contractual floor
values; the regular suites may run more.  Run with -s (or read the
captured output) to see the summary lines.
"""

import time

from scaleflat.cli import selftest

SEED = 0


def _report(num, name, ok, detail):
    print("[criterion %02d] %s  %s: %s" % (num, "PASS" if ok else "FAIL", name, detail))
    assert ok, "criterion %02d (%s): %s" % (num, name, detail)


def test_criterion_01_flat_baseline_under_one_second():
    start = time.perf_counter()
    ok, detail = selftest.flat_baseline()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    _report(1, "flat baseline", ok, "%s, %.3fs" % (detail, elapsed))


def test_criterion_02_structure_identities_exact():
    start = time.perf_counter()
    ok, detail = selftest.structure_identities(SEED, random_count=20, hessian_count=10)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60.0
    _report(2, "structure equations", ok, "%s, %.1fs" % (detail, elapsed))


def test_criterion_03_curvature_interrelations():
    ok, detail = selftest.seven_relations(SEED, random_count=20, hessian_count=10)
    _report(3, "seven relations", ok, detail)


def test_criterion_04_zfree_shortcut_agreement():
    ok, detail = selftest.zfree_shortcut(SEED, count=100)
    _report(4, "z-free shortcut", ok, detail)


def test_criterion_05_cubic_systems_never_flat():
    ok, detail = selftest.cubic_obstruction(SEED, count=20)
    _report(5, "cubic obstruction", ok, detail)


def test_criterion_06_known_verdicts():
    ok, detail = selftest.known_verdicts()
    _report(6, "known verdicts", ok, detail)


def test_criterion_07_dual_of_flat_family():
    ok, detail = selftest.dual_flatness()
    _report(7, "dual flatness", ok, detail)


def test_criterion_08_contact_lift_pullback():
    ok, detail = selftest.contact_lift(SEED, count=10)
    _report(8, "contact lift", ok, detail)


def test_criterion_09_fibration_dimensions():
    ok, detail = selftest.fibration_dimensions()
    _report(9, "fibration dimensions", ok, detail)


def test_criterion_10_decompositions_under_ten_seconds():
    start = time.perf_counter()
    ok, detail = selftest.fibration_decompositions(SEED, per_spec=100)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _report(10, "subgroup decompositions", ok, "%s, %.1fs" % (detail, elapsed))


def test_criterion_11_derivative_cross_check():
    ok, detail = selftest.derivative_cross_check(SEED, points=10)
    _report(11, "derivative cross-check", ok, detail)
