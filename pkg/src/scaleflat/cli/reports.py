"""Report schemas and the pipelines that fill them.

Every front end (command line, service) funnels through the functions
here, so a verdict is computed exactly one way and serialized exactly
one way.  JSON output is schema-stable and deterministic: identical
inputs and seed produce byte-identical documents.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..curvature import (
    M_NAMES,
    S_NAMES,
    NotIntegrableError,
    corollary37,
    flatness,
    verify_structure_eq,
)
from ..duality import dual_pde
from ..fibration import fibration_report
from ..jetframe import integrability

EXIT_FLAT = 0
EXIT_NOT_FLAT = 1
EXIT_NOT_INTEGRABLE = 2
EXIT_USAGE = 3

_VERDICT_EXIT = {
    "Flat": EXIT_FLAT,
    "NotFlat": EXIT_NOT_FLAT,
    "NotIntegrable": EXIT_NOT_INTEGRABLE,
}


class CurvatureEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")
    index: str
    fiber_factor: str
    base: str
    is_zero: bool


class IntegrabilityBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")
    a: str
    b: str
    integrable: bool


class FastPathBlock(BaseModel):
    """Shortcut verdict for systems whose right sides ignore z1 and z2."""

    model_config = ConfigDict(extra="forbid")
    applicable: bool
    verdict: Optional[str] = None
    agrees: Optional[bool] = None


class CheckReport(BaseModel):
    model_config = ConfigDict(extra="forbid")
    command: Literal["check"] = "check"
    input: Dict[str, str]
    verdict: str
    integrability: IntegrabilityBlock
    witnesses: List[str]
    curvatures: List[CurvatureEntry]
    fast_path: FastPathBlock
    exit_code: int


class DualReport(BaseModel):
    model_config = ConfigDict(extra="forbid")
    command: Literal["dual"] = "dual"
    input: Dict[str, str]
    closed: bool
    chart: List[str]
    entries: Dict[str, str]
    exit_code: int


class StructureReport(BaseModel):
    model_config = ConfigDict(extra="forbid")
    command: Literal["verify-structure"] = "verify-structure"
    input: Dict[str, str]
    level: int
    verdict: str
    integrability: Optional[IntegrabilityBlock] = None
    exit_code: int


class MembershipBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")
    checked: int
    failures: int
    worst: float


class DecompositionStats(BaseModel):
    model_config = ConfigDict(extra="forbid")
    count: int
    max_residual: float
    factor_failures: Optional[int] = None
    finite_factors_used: Optional[Dict[str, int]] = None


class ProbeCheckModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    name: str
    passed: int
    failed: int
    worst: float


class ProbeWitness(BaseModel):
    model_config = ConfigDict(extra="forbid")
    check: str
    residual: float
    context: str


class OrbitBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")
    ok: bool
    checks: List[ProbeCheckModel]
    witnesses: List[ProbeWitness]


class FibrationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")
    command: Literal["fibration"] = "fibration"
    group: str
    seed: int
    samples: int
    dimensions: Dict[str, int]
    quotients: Dict[str, int]
    membership_samples: MembershipBlock
    decompositions: Dict[str, DecompositionStats]
    orbit_probe: OrbitBlock
    exit_code: int


class SuiteResult(BaseModel):
    model_config = ConfigDict(extra="forbid")
    name: str
    passed: bool
    detail: str
    # wall time stays out of the json rendering: identical input and seed
    # must produce byte-identical reports
    seconds: float = Field(default=0.0, exclude=True)


class SelftestReport(BaseModel):
    model_config = ConfigDict(extra="forbid")
    command: Literal["selftest"] = "selftest"
    seed: int
    quick: bool
    suites: List[SuiteResult]
    ok: bool
    exit_code: int


def _system_echo(sys):
    return {"f11": str(sys.f11), "f12": str(sys.f12), "f22": str(sys.f22)}


def _zfree(sys):
    return not any(
        f.depends_on("z1") or f.depends_on("z2") for f in sys.entries().values()
    )


def check_report(sys) -> CheckReport:
    """Full flatness verdict for one system."""
    report = flatness(sys)
    entries = []
    both = {**report.M, **report.S}
    for name in list(M_NAMES) + list(S_NAMES):
        if name not in both:
            continue
        scalar = both[name]
        entries.append(
            CurvatureEntry(
                index=name,
                fiber_factor=scalar.fiber_factor_str(),
                base=str(scalar.base),
                is_zero=scalar.is_zero,
            )
        )
    fast = FastPathBlock(applicable=False)
    if _zfree(sys):
        shortcut = corollary37(sys.f11, sys.f12, sys.f22)
        fast = FastPathBlock(
            applicable=True,
            verdict=shortcut,
            agrees=shortcut == report.verdict,
        )
    return CheckReport(
        input=_system_echo(sys),
        verdict=report.verdict,
        integrability=IntegrabilityBlock(
            a=str(report.A),
            b=str(report.B),
            integrable=report.A.is_zero and report.B.is_zero,
        ),
        witnesses=list(report.witnesses),
        curvatures=entries,
        fast_path=fast,
        exit_code=_VERDICT_EXIT[report.verdict],
    )


def dual_report(family) -> DualReport:
    """Dual equation of a solution family."""
    dual = dual_pde(family)
    echo = {"h": str(family.h)}
    if family.inverse is not None:
        echo["inverse.x1"] = str(family.inverse["x1"])
        echo["inverse.x2"] = str(family.inverse["x2"])
    return DualReport(
        input=echo,
        closed=not dual.is_open,
        chart=list(dual.chart.names),
        entries={name: str(f) for name, f in dual.entries().items()},
        exit_code=EXIT_FLAT,
    )


def structure_report(sys, level) -> StructureReport:
    """Structure-equation identity check at one level."""
    try:
        holds = verify_structure_eq(sys, level)
    except NotIntegrableError as exc:
        return StructureReport(
            input=_system_echo(sys),
            level=level,
            verdict="NotIntegrable",
            integrability=IntegrabilityBlock(
                a=str(exc.a), b=str(exc.b), integrable=False
            ),
            exit_code=EXIT_NOT_INTEGRABLE,
        )
    a, b = integrability(sys)
    return StructureReport(
        input=_system_echo(sys),
        level=level,
        verdict="holds" if holds else "fails",
        integrability=IntegrabilityBlock(
            a=str(a), b=str(b), integrable=a.is_zero and b.is_zero
        ),
        exit_code=EXIT_FLAT if holds else EXIT_NOT_FLAT,
    )


def fibration_report_model(group, seed, samples) -> FibrationReport:
    """Numeric fibration survey wrapped in the stable schema."""
    raw = fibration_report(group, seed=seed, samples=samples)
    decomposition_ok = all(
        stats.get("factor_failures", 0) == 0
        and stats["max_residual"] <= 1e-10
        for stats in raw["decompositions"].values()
    )
    ok = (
        raw["orbit_probe"]["ok"]
        and raw["membership_samples"]["failures"] == 0
        and decomposition_ok
    )
    return FibrationReport(
        group=raw["group"],
        seed=raw["seed"],
        samples=raw["samples"],
        dimensions=raw["dimensions"],
        quotients=raw["quotients"],
        membership_samples=MembershipBlock(**raw["membership_samples"]),
        decompositions={
            label: DecompositionStats(**stats)
            for label, stats in raw["decompositions"].items()
        },
        orbit_probe=OrbitBlock(
            ok=raw["orbit_probe"]["ok"],
            checks=[ProbeCheckModel(**c) for c in raw["orbit_probe"]["checks"]],
            witnesses=[ProbeWitness(**w) for w in raw["orbit_probe"]["witnesses"]],
        ),
        exit_code=EXIT_FLAT if ok else EXIT_NOT_FLAT,
    )


def render_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _render_check_text(report: CheckReport) -> str:
    lines = ["verdict: %s" % report.verdict]
    lines.append("A = %s" % report.integrability.a)
    lines.append("B = %s" % report.integrability.b)
    if report.verdict == "NotIntegrable":
        lines.append("the system has no 2-parameter solution family")
    elif report.verdict == "Flat":
        lines.append("flat test: all fifteen curvature bases vanish")
    else:
        lines.append("witnesses: %s" % ", ".join(report.witnesses))
        by_name = {entry.index: entry for entry in report.curvatures}
        for name in report.witnesses:
            entry = by_name[name]
            lines.append("  %s = %s * (%s)" % (name, entry.fiber_factor, entry.base))
    if report.fast_path.applicable:
        lines.append(
            "shortcut for z-free systems: %s (%s)"
            % (
                report.fast_path.verdict,
                "agrees" if report.fast_path.agrees else "DISAGREES",
            )
        )
    return "\n".join(lines) + "\n"


def _render_dual_text(report: DualReport) -> str:
    state = "closed" if report.closed else "open"
    lines = ["dual equation (%s):" % state]
    for name in ("F11", "F12", "F22"):
        lines.append("  %s = %s" % (name, report.entries[name]))
    if not report.closed:
        lines.append(
            "entries still involve the base coordinates; supply"
            " inverse.x1 / inverse.x2 to eliminate them"
        )
    return "\n".join(lines) + "\n"


def _render_structure_text(report: StructureReport) -> str:
    lines = ["structure equation at level %d: %s" % (report.level, report.verdict)]
    if report.integrability is not None and not report.integrability.integrable:
        lines.append("A = %s" % report.integrability.a)
        lines.append("B = %s" % report.integrability.b)
    return "\n".join(lines) + "\n"


def _render_fibration_text(report: FibrationReport) -> str:
    lines = [
        "group: %s (seed %d, %d samples)" % (report.group, report.seed, report.samples),
        "dimensions:",
    ]
    for label, value in report.dimensions.items():
        lines.append("  dim %-28s %d" % (label, value))
    lines.append("quotient dimensions:")
    for label, value in report.quotients.items():
        lines.append("  dim %-28s %d" % (label, value))
    lines.append(
        "membership: %d sampled, %d failures, worst defect %.3e"
        % (
            report.membership_samples.checked,
            report.membership_samples.failures,
            report.membership_samples.worst,
        )
    )
    lines.append("decompositions:")
    for label, stats in report.decompositions.items():
        extra = ""
        if stats.factor_failures is not None:
            extra = ", factor failures %d" % stats.factor_failures
        lines.append(
            "  %-30s max residual %.3e%s" % (label, stats.max_residual, extra)
        )
    lines.append("orbit probes: %s" % ("ok" if report.orbit_probe.ok else "FAILED"))
    for check in report.orbit_probe.checks:
        lines.append(
            "  %-30s passed %d/%d, worst %.3e"
            % (check.name, check.passed, check.passed + check.failed, check.worst)
        )
    for witness in report.orbit_probe.witnesses:
        lines.append(
            "  witness: %s residual %.3e %s"
            % (witness.check, witness.residual, witness.context)
        )
    return "\n".join(lines) + "\n"


def _render_selftest_text(report: SelftestReport) -> str:
    lines = []
    for suite in report.suites:
        mark = "ok  " if suite.passed else "FAIL"
        lines.append(
            "%s %-28s %6.2fs  %s" % (mark, suite.name, suite.seconds, suite.detail)
        )
    good = sum(1 for s in report.suites if s.passed)
    lines.append(
        "%d/%d suites passed (seed %d%s)"
        % (good, len(report.suites), report.seed, ", quick" if report.quick else "")
    )
    return "\n".join(lines) + "\n"


_TEXT_RENDERERS = {
    CheckReport: _render_check_text,
    DualReport: _render_dual_text,
    StructureReport: _render_structure_text,
    FibrationReport: _render_fibration_text,
    SelftestReport: _render_selftest_text,
}


def render(report: BaseModel, format: str) -> str:
    if format == "json":
        return render_json(report)
    return _TEXT_RENDERERS[type(report)](report)
