"""Numeric model of the projective double fibration and its symmetry groups.

The flat system lives on a correspondence space fibered over a point space
and a hyperplane space.  Unimodular 4x4 matrices act on homogeneous
coordinates [x1, x2, y, 1]; the subgroups of interest are cut out by a
sparsity pattern (the scale symmetries), by fixing the line through the
third basis vector together with its dual hyperplane (the compact-type
symmetries), or by fixing the marked point [e4] and the marked hyperplane
dual to e1.  Everything here is floating point: membership and
decomposition questions are answered up to explicit tolerances, and the
exact-arithmetic checker in the curvature package stays the source of
truth for flatness itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import expm

MEMBERSHIP_TOL = 1e-9
RECONSTRUCTION_TOL = 1e-10
RANK_RATIO = 1e-9
_N = 4

_IDENTITY = np.eye(_N)
# reversal permutation used to turn upper-triangular QR output into the
# lower-triangular normal form
_FLIP = np.eye(_N)[::-1].copy()

# finite sign factors: flipping the pair of axes attached to a marker keeps
# every subgroup here stable and realises the two-element groups that sit
# between a stabilizer and its identity component
SIGN_HYPERPLANE = np.diag([-1.0, -1.0, 1.0, 1.0])
SIGN_POINT = np.diag([1.0, 1.0, -1.0, -1.0])
SIGN_BOTH = SIGN_HYPERPLANE @ SIGN_POINT

_FINITE_LABELS = (
    ("identity", _IDENTITY),
    ("hyperplane-flip", SIGN_HYPERPLANE),
    ("point-flip", SIGN_POINT),
    ("double-flip", SIGN_BOTH),
)


class FibrationError(ValueError):
    """Numeric fibration model rejected its input."""


class PointAtInfinity(FibrationError):
    """The fractional-linear action sent a finite point to infinity."""


def unimodular_defect(g: np.ndarray) -> float:
    """Scale-aware distance of det(g) from 1."""
    g = np.asarray(g, dtype=float)
    if g.shape != (_N, _N):
        raise FibrationError("group elements are 4x4 matrices")
    fro = float(np.linalg.norm(g))
    return abs(float(np.linalg.det(g)) - 1.0) / (1.0 + fro**4)


def require_element(g: np.ndarray, tol: float = MEMBERSHIP_TOL) -> np.ndarray:
    """Validate the unimodularity invariant and return g as a float array."""
    arr = np.asarray(g, dtype=float)
    if not np.isfinite(arr).all():
        raise FibrationError("group element has non-finite entries")
    defect = unimodular_defect(arr)
    if defect > tol:
        raise FibrationError(
            "matrix is not unimodular: determinant defect %.3e" % defect
        )
    return arr


def cartan_involution(g: np.ndarray) -> np.ndarray:
    """Inverse transpose, the involution exchanging points and hyperplanes."""
    arr = np.asarray(g, dtype=float)
    return np.linalg.inv(arr).T


# scale symmetries: first two affine directions rescale separately, the
# third row is unconstrained, the last homogeneous direction only rescales
_SCALE_PATTERN = (
    (1, 0, 0, 1),
    (0, 1, 0, 1),
    (1, 1, 1, 1),
    (0, 0, 0, 1),
)


@dataclass(frozen=True)
class SubgroupSpec:
    """Membership data for a subgroup of the unimodular group.

    pattern: optional 0/1 sparsity mask, 1 marking entries allowed to be
    nonzero.  fixed_points and fixed_hyperplanes hold 0-based indices i of
    basis lines [e_i] preserved by g, respectively by the inverse
    transpose of g.  All conditions are linear on the Lie algebra, which
    is what lie_algebra_dim exploits.
    """

    name: str
    pattern: Optional[tuple] = None
    fixed_points: tuple = ()
    fixed_hyperplanes: tuple = ()


def full_linear() -> SubgroupSpec:
    """Every unimodular matrix."""
    return SubgroupSpec(name="sl4")


def scale_symmetry() -> SubgroupSpec:
    """Symmetries of the flat system induced by lifted scale maps."""
    return SubgroupSpec(name="scale", pattern=_SCALE_PATTERN)


def compact_type() -> SubgroupSpec:
    """Matrices preserving the third basis line and its dual hyperplane."""
    return SubgroupSpec(name="compact", fixed_points=(2,), fixed_hyperplanes=(2,))


def point_stabilizer(index: int) -> SubgroupSpec:
    """Stabilizer of the basis line [e_index]; index runs 1 through 4."""
    if index not in (1, 2, 3, 4):
        raise FibrationError("basis index must be 1..4")
    return SubgroupSpec(name="fix-point-e%d" % index, fixed_points=(index - 1,))


def hyperplane_stabilizer(index: int) -> SubgroupSpec:
    """Stabilizer of the hyperplane dual to e_index under inverse transpose."""
    if index not in (1, 2, 3, 4):
        raise FibrationError("basis index must be 1..4")
    return SubgroupSpec(
        name="fix-plane-e%d" % index, fixed_hyperplanes=(index - 1,)
    )


def intersect(*specs: SubgroupSpec) -> SubgroupSpec:
    """Conjunction of membership conditions."""
    if not specs:
        raise FibrationError("intersect needs at least one spec")
    pattern = None
    points: set = set()
    planes: set = set()
    for spec in specs:
        if spec.pattern is not None:
            if pattern is None:
                pattern = [list(row) for row in spec.pattern]
            else:
                for i in range(_N):
                    for j in range(_N):
                        pattern[i][j] = pattern[i][j] and spec.pattern[i][j]
        points.update(spec.fixed_points)
        planes.update(spec.fixed_hyperplanes)
    frozen = None if pattern is None else tuple(tuple(row) for row in pattern)
    return SubgroupSpec(
        name="&".join(spec.name for spec in specs),
        pattern=frozen,
        fixed_points=tuple(sorted(points)),
        fixed_hyperplanes=tuple(sorted(planes)),
    )


def _line_defect(vector: np.ndarray, axis: int) -> float:
    # two vectors are projectively equal iff their cross terms vanish; for
    # a coordinate line that is just the relative mass off the axis
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        return float("inf")
    off = vector.copy()
    off[axis] = 0.0
    return float(np.linalg.norm(off)) / norm


def membership_defect(g: np.ndarray, spec: SubgroupSpec) -> float:
    """Largest relative violation of the spec's conditions at g."""
    arr = np.asarray(g, dtype=float)
    worst = 0.0
    if spec.pattern is not None:
        scale = float(np.linalg.norm(arr))
        if scale == 0.0:
            return float("inf")
        for i in range(_N):
            for j in range(_N):
                if not spec.pattern[i][j]:
                    worst = max(worst, abs(arr[i, j]) / scale)
    for axis in spec.fixed_points:
        worst = max(worst, _line_defect(arr[:, axis], axis))
    if spec.fixed_hyperplanes:
        inv_t = cartan_involution(arr)
        for axis in spec.fixed_hyperplanes:
            worst = max(worst, _line_defect(inv_t[:, axis], axis))
    return worst


def membership(g: np.ndarray, spec: SubgroupSpec, tol: float = MEMBERSHIP_TOL) -> bool:
    """Does the unimodular matrix g satisfy the spec within tolerance."""
    require_element(g, tol=tol)
    return membership_defect(g, spec) <= tol


def _constraint_rows(spec: SubgroupSpec) -> np.ndarray:
    # linear functionals on 4x4 matrices, flattened row-major; the trace
    # row restricts to the unimodular Lie algebra
    rows = [np.eye(_N).reshape(-1)]
    if spec.pattern is not None:
        for i in range(_N):
            for j in range(_N):
                if not spec.pattern[i][j]:
                    row = np.zeros(_N * _N)
                    row[i * _N + j] = 1.0
                    rows.append(row)
    for axis in spec.fixed_points:
        # X e_axis must stay on the line: column entries off the diagonal die
        for i in range(_N):
            if i != axis:
                row = np.zeros(_N * _N)
                row[i * _N + axis] = 1.0
                rows.append(row)
    for axis in spec.fixed_hyperplanes:
        # the dual condition kills the row off the diagonal
        for j in range(_N):
            if j != axis:
                row = np.zeros(_N * _N)
                row[axis * _N + j] = 1.0
                rows.append(row)
    return np.array(rows)


def lie_algebra_dim(spec: SubgroupSpec) -> int:
    """Dimension of the subgroup, as the nullity of its constraint system."""
    system = _constraint_rows(spec)
    singular = np.linalg.svd(system, compute_uv=False)
    top = singular[0] if singular.size else 0.0
    rank = int(np.sum(singular > RANK_RATIO * top)) if top > 0.0 else 0
    return _N * _N - rank


def _free_mask(spec: SubgroupSpec) -> np.ndarray:
    mask = np.ones((_N, _N))
    if spec.pattern is not None:
        for i in range(_N):
            for j in range(_N):
                if not spec.pattern[i][j]:
                    mask[i, j] = 0.0
    for axis in spec.fixed_points:
        for i in range(_N):
            if i != axis:
                mask[i, axis] = 0.0
    for axis in spec.fixed_hyperplanes:
        for j in range(_N):
            if j != axis:
                mask[axis, j] = 0.0
    return mask


def sample_element(
    spec: SubgroupSpec, rng: np.random.Generator, spread: float = 1.0
) -> np.ndarray:
    """Random member: exponential of a constrained matrix times a sign factor.

    The exponential only reaches the identity component, so a finite factor
    drawn from the axis-pair flips is composed on the right.
    """
    mask = _free_mask(spec)
    if not np.all(np.diag(mask) == 1.0):
        raise FibrationError("spec constrains the diagonal; cannot sample")
    seed_matrix = rng.uniform(-spread, spread, size=(_N, _N)) * mask
    seed_matrix -= (np.trace(seed_matrix) / _N) * _IDENTITY
    g = expm(seed_matrix)
    finite = _FINITE_LABELS[int(rng.integers(len(_FINITE_LABELS)))][1]
    return g @ finite


@dataclass(frozen=True)
class Decomposition:
    """g = k a n with k special orthogonal, a positive diagonal, n unit
    lower triangular.  a is stored as the vector of diagonal entries."""

    k: np.ndarray
    a: np.ndarray
    n: np.ndarray
    residual: float

    def matrix(self) -> np.ndarray:
        return self.k @ np.diag(self.a) @ self.n


def iwasawa_lower(g: np.ndarray) -> Decomposition:
    """Deterministic rotation / diagonal / lower-unitriangular splitting.

    Conjugating by the reversal permutation turns the problem into a plain
    QR factorization; pushing the signs of the triangular diagonal into
    the orthogonal factor makes the diagonal positive and the result
    unique.
    """
    arr = require_element(g)
    q, r = np.linalg.qr(_FLIP @ arr @ _FLIP)
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    q = q * signs
    r = signs[:, None] * r
    k = _FLIP @ q @ _FLIP
    lower = _FLIP @ r @ _FLIP
    a = np.diag(lower).copy()
    n = lower / a[:, None]
    recon = k @ np.diag(a) @ n
    residual = float(np.linalg.norm(recon - arr)) / (1.0 + float(np.linalg.norm(arr)))
    return Decomposition(k=k, a=a, n=n, residual=residual)


@dataclass(frozen=True)
class IntersectionDecomposition:
    """Splitting of a subgroup element into rotation, finite sign factor,
    positive diagonal, and unipotent parts, each checked against the spec."""

    k: np.ndarray
    finite: np.ndarray
    finite_label: str
    a: np.ndarray
    n: np.ndarray
    residual: float
    rotation_ok: bool
    diagonal_ok: bool
    unipotent_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.rotation_ok
            and self.diagonal_ok
            and self.unipotent_ok
            and self.residual <= RECONSTRUCTION_TOL
        )

    def matrix(self) -> np.ndarray:
        return self.k @ self.finite @ np.diag(self.a) @ self.n


def decompose_in_intersection(
    g: np.ndarray, spec: SubgroupSpec, tol: float = MEMBERSHIP_TOL
) -> IntersectionDecomposition:
    """Split g = k m a n compatibly with the spec.

    The rotation must fix the marked basis vectors themselves, not just
    their lines; the finite factor m absorbs the leftover signs.  Only the
    first and last basis directions carry such markers here, so m ranges
    over the corresponding axis-pair flips.
    """
    arr = require_element(g)
    defect = membership_defect(arr, spec)
    if defect > 10.0 * tol:
        raise FibrationError(
            "element is not in the subgroup: defect %.3e" % defect
        )
    base = iwasawa_lower(arr)

    vector_axes = []
    if 3 in spec.fixed_points:
        vector_axes.append(3)
    if 0 in spec.fixed_hyperplanes:
        vector_axes.append(0)
    candidates = [_FINITE_LABELS[0]]
    if 0 in spec.fixed_hyperplanes:
        candidates.append(_FINITE_LABELS[1])
    if 3 in spec.fixed_points:
        candidates.append(_FINITE_LABELS[2])
    if 0 in spec.fixed_hyperplanes and 3 in spec.fixed_points:
        candidates.append(_FINITE_LABELS[3])

    chosen_label = ""
    chosen = None
    rotation = base.k
    for label, factor in candidates:
        candidate_k = base.k @ factor
        # an orthogonal matrix fixing a vector also fixes its dual
        # hyperplane, so one vector test per marker suffices
        vectors_ok = all(
            float(np.linalg.norm(candidate_k[:, axis] - _IDENTITY[:, axis])) <= tol
            for axis in vector_axes
        )
        if vectors_ok and membership_defect(candidate_k, spec) <= tol:
            chosen_label = label
            chosen = factor
            rotation = candidate_k
            break
    rotation_ok = chosen is not None
    if chosen is None:
        chosen = _IDENTITY
        chosen_label = "none"
        rotation = base.k

    diagonal_ok = bool(np.all(base.a > 0.0))
    unipotent_ok = membership_defect(base.n, spec) <= tol
    recon = rotation @ chosen @ np.diag(base.a) @ base.n
    residual = float(np.linalg.norm(recon - arr)) / (1.0 + float(np.linalg.norm(arr)))
    return IntersectionDecomposition(
        k=rotation,
        finite=chosen,
        finite_label=chosen_label,
        a=base.a,
        n=base.n,
        residual=residual,
        rotation_ok=rotation_ok,
        diagonal_ok=diagonal_ok,
        unipotent_ok=unipotent_ok,
    )


def projective_action(g: np.ndarray, point) -> np.ndarray:
    """Fractional-linear action on the affine chart [x1, x2, y, 1]."""
    arr = np.asarray(g, dtype=float)
    p = np.asarray(point, dtype=float)
    if p.shape != (3,):
        raise FibrationError("points live in the three dimensional chart")
    hom = np.append(p, 1.0)
    image = arr @ hom
    denom = image[3]
    guard = 1e-12 * float(np.linalg.norm(arr)) * (1.0 + float(np.linalg.norm(p)))
    if abs(denom) <= guard:
        raise PointAtInfinity("image point left the affine chart")
    return image[:3] / denom


def translation_matrix(shift) -> np.ndarray:
    """Unipotent element acting as p -> p + shift on the chart."""
    s = np.asarray(shift, dtype=float)
    if s.shape != (3,):
        raise FibrationError("translations take a three component shift")
    g = np.eye(_N)
    g[0:3, 3] = s
    return g


@dataclass(frozen=True)
class ProbeCheck:
    name: str
    passed: int
    failed: int
    worst: float


@dataclass(frozen=True)
class OrbitReport:
    group: str
    samples: int
    checks: tuple
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return all(check.failed == 0 for check in self.checks)


_GROUP_SPECS = {
    "sl4": full_linear,
    "scale": scale_symmetry,
    "compact": compact_type,
}


def _group_spec(group: str) -> SubgroupSpec:
    try:
        return _GROUP_SPECS[group]()
    except KeyError:
        raise FibrationError(
            "unknown group %r; expected one of sl4, scale, compact" % (group,)
        ) from None


class _ProbeTally:
    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.passed = 0
        self.failed = 0
        self.worst = 0.0
        self.witnesses = []

    def record(self, value: float, context: str = ""):
        self.worst = max(self.worst, value)
        if value <= self.tol:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.witnesses) < 3:
                self.witnesses.append(
                    {"check": self.name, "residual": value, "context": context}
                )

    def freeze(self) -> ProbeCheck:
        return ProbeCheck(
            name=self.name, passed=self.passed, failed=self.failed, worst=self.worst
        )


def _coplanarity_defect(points) -> float:
    rows = []
    for q in points:
        row = np.append(q, 1.0)
        rows.append(row / np.linalg.norm(row))
    return abs(float(np.linalg.det(np.array(rows))))


def _probe_compact(rng: np.random.Generator, samples: int):
    spec = compact_type()
    e4 = _IDENTITY[:, 3]
    e1 = _IDENTITY[:, 0]
    in_plane = _ProbeTally("point_orbit_in_plane", MEMBERSHIP_TOL)
    reach_plane = _ProbeTally("point_orbit_reaches_plane", MEMBERSHIP_TOL)
    dual_in_plane = _ProbeTally("hyperplane_orbit_in_plane", MEMBERSHIP_TOL)
    dual_reach = _ProbeTally("hyperplane_orbit_reaches_plane", MEMBERSHIP_TOL)
    planes = _ProbeTally("plane_to_plane", MEMBERSHIP_TOL)

    for _ in range(samples):
        g = sample_element(spec, rng)
        v = g @ e4
        in_plane.record(abs(v[2]) / float(np.linalg.norm(v)))
        w = cartan_involution(g) @ e1
        dual_in_plane.record(abs(w[2]) / float(np.linalg.norm(w)))

        # surjectivity onto the plane where the third homogeneous
        # coordinate dies: an explicit member moves [e4] to any target
        target = rng.uniform(-1.0, 1.0, size=3)
        while abs(target[2]) < 0.2:
            target[2] = rng.uniform(-1.0, 1.0)
        explicit = np.eye(_N)
        explicit[0, 3] = target[0]
        explicit[1, 3] = target[1]
        explicit[2, 2] = 1.0 / target[2]
        explicit[3, 3] = target[2]
        image = explicit @ e4
        full_target = np.array([target[0], target[1], 0.0, target[2]])
        cross = image / np.linalg.norm(image) - full_target / np.linalg.norm(
            full_target
        ) * np.sign(np.dot(image, full_target))
        value = float(np.linalg.norm(cross))
        if membership_defect(explicit, spec) > MEMBERSHIP_TOL:
            value = 1.0
        reach_plane.record(value, context="target %s" % (target,))

        # the dual side mirrors the construction through the involution
        dual_target = rng.uniform(-1.0, 1.0, size=3)
        while abs(dual_target[0]) < 0.2:
            dual_target[0] = rng.uniform(-1.0, 1.0)
        helper = np.eye(_N)
        helper[0, 0] = dual_target[0]
        helper[1, 0] = dual_target[1]
        helper[3, 0] = dual_target[2]
        helper[3, 3] = 1.0 / dual_target[0]
        g_dual = cartan_involution(helper)
        w_image = cartan_involution(g_dual) @ e1
        full_dual = np.array([dual_target[0], dual_target[1], 0.0, dual_target[2]])
        cross = w_image / np.linalg.norm(w_image) - full_dual / np.linalg.norm(
            full_dual
        ) * np.sign(np.dot(w_image, full_dual))
        value = float(np.linalg.norm(cross))
        if membership_defect(g_dual, spec) > MEMBERSHIP_TOL:
            value = 1.0
        dual_reach.record(value, context="target %s" % (dual_target,))

        _plane_to_plane_sample(g, rng, planes)

    tallies = [in_plane, reach_plane, dual_in_plane, dual_reach, planes]
    return tallies


def _plane_to_plane_sample(g: np.ndarray, rng: np.random.Generator, tally: "_ProbeTally"):
    # three random chart points span a plane; a fourth affine combination
    # stays on it, and the images must stay coplanar
    for _ in range(8):
        base = [rng.uniform(-1.0, 1.0, size=3) for _ in range(3)]
        lam = rng.uniform(-1.0, 1.0, size=2)
        fourth = lam[0] * base[0] + lam[1] * base[1] + (1 - lam.sum()) * base[2]
        try:
            images = [projective_action(g, p) for p in base + [fourth]]
        except PointAtInfinity:
            continue
        if max(float(np.linalg.norm(q)) for q in images) > 1e6:
            continue
        tally.record(_coplanarity_defect(images))
        return
    # persistent bad luck counts as a failure so it cannot hide
    tally.record(1.0, context="no finite sample found")


def _probe_scale(rng: np.random.Generator, samples: int):
    spec = scale_symmetry()
    meet_point = intersect(spec, point_stabilizer(4))
    translations = _ProbeTally("translations_act", 1e-9)
    chart = _ProbeTally("affine_chart_preserved", MEMBERSHIP_TOL)
    fixes = _ProbeTally("point_stabilizer_fixes_origin", MEMBERSHIP_TOL)
    origin = np.zeros(3)
    for _ in range(samples):
        shift = rng.uniform(-2.0, 2.0, size=3)
        mover = translation_matrix(shift)
        value = 1.0
        if membership_defect(mover, spec) <= MEMBERSHIP_TOL:
            p = rng.uniform(-1.0, 1.0, size=3)
            moved = projective_action(mover, p)
            value = float(np.linalg.norm(moved - (p + shift))) / (
                1.0 + float(np.linalg.norm(p + shift))
            )
        translations.record(value)

        g = sample_element(spec, rng)
        p = rng.uniform(-1.0, 1.0, size=3)
        try:
            image = projective_action(g, p)
            chart.record(0.0 if np.isfinite(image).all() else 1.0)
        except PointAtInfinity:
            chart.record(1.0, context="scale element left the chart")

        h = sample_element(meet_point, rng)
        fixed = projective_action(h, origin)
        fixes.record(float(np.linalg.norm(fixed)))
    return [translations, chart, fixes]


def _probe_sl4(rng: np.random.Generator, samples: int):
    spec = full_linear()
    planes = _ProbeTally("plane_to_plane", MEMBERSHIP_TOL)
    transitive = _ProbeTally("translations_transitive", 1e-9)
    for _ in range(samples):
        g = sample_element(spec, rng, spread=0.6)
        _plane_to_plane_sample(g, rng, planes)

        target = rng.uniform(-2.0, 2.0, size=3)
        mover = translation_matrix(target)
        reached = projective_action(mover, np.zeros(3))
        transitive.record(
            float(np.linalg.norm(reached - target)) / (1.0 + float(np.linalg.norm(target)))
        )
    return [planes, transitive]


def orbit_probe(group: str, rng: np.random.Generator, samples: int = 100) -> OrbitReport:
    """Sampled checks that the group moves the chart the way the model says."""
    if samples < 1:
        raise FibrationError("samples must be positive")
    if group == "compact":
        tallies = _probe_compact(rng, samples)
    elif group == "scale":
        tallies = _probe_scale(rng, samples)
    elif group == "sl4":
        tallies = _probe_sl4(rng, samples)
    else:
        raise FibrationError(
            "unknown group %r; expected one of sl4, scale, compact" % (group,)
        )
    witnesses = []
    for tally in tallies:
        witnesses.extend(tally.witnesses)
    return OrbitReport(
        group=group,
        samples=samples,
        checks=tuple(tally.freeze() for tally in tallies),
        witnesses=tuple(witnesses),
    )


def _meet_specs(group: str):
    spec = _group_spec(group)
    h_point = point_stabilizer(4)
    h_plane = hyperplane_stabilizer(1)
    if group == "sl4":
        meets = {
            "group": spec,
            "point_stabilizer_meet": h_point,
            "hyperplane_stabilizer_meet": h_plane,
            "incidence_meet": intersect(h_point, h_plane),
        }
    else:
        meets = {
            "group": spec,
            "point_stabilizer_meet": intersect(spec, h_point),
            "hyperplane_stabilizer_meet": intersect(spec, h_plane),
            "incidence_meet": intersect(spec, h_point, h_plane),
        }
    return meets


def fibration_report(group: str, seed: int = 0, samples: int = 100) -> dict:
    """Full numeric survey of one symmetry group.

    Covers subgroup dimensions, orbit dimension counts, sampled
    membership, the rotation/sign/diagonal/unipotent decompositions for
    the compact-type group, and the orbit probes.  Deterministic for a
    fixed seed.
    """
    meets = _meet_specs(group)
    rng = np.random.default_rng(seed)

    dimensions = {label: lie_algebra_dim(spec) for label, spec in meets.items()}
    quotients = {
        "point_orbit": dimensions["group"] - dimensions["point_stabilizer_meet"],
        "hyperplane_orbit": dimensions["group"]
        - dimensions["hyperplane_stabilizer_meet"],
        "incidence_orbit": dimensions["group"] - dimensions["incidence_meet"],
        "point_fiber": dimensions["point_stabilizer_meet"]
        - dimensions["incidence_meet"],
        "hyperplane_fiber": dimensions["hyperplane_stabilizer_meet"]
        - dimensions["incidence_meet"],
    }

    membership_worst = 0.0
    membership_failures = 0
    membership_checked = 0
    for spec in meets.values():
        for _ in range(max(10, samples // 4)):
            g = sample_element(spec, rng)
            defect = membership_defect(g, spec)
            membership_worst = max(membership_worst, defect)
            membership_checked += 1
            if defect > MEMBERSHIP_TOL:
                membership_failures += 1

    decompositions = {}
    if group == "compact":
        for label, spec in meets.items():
            worst = 0.0
            factor_failures = 0
            used: dict = {}
            for _ in range(samples):
                g = sample_element(spec, rng)
                split = decompose_in_intersection(g, spec)
                worst = max(worst, split.residual)
                if not split.ok:
                    factor_failures += 1
                used[split.finite_label] = used.get(split.finite_label, 0) + 1
            decompositions[label] = {
                "count": samples,
                "max_residual": worst,
                "factor_failures": factor_failures,
                "finite_factors_used": dict(sorted(used.items())),
            }
    else:
        worst = 0.0
        for _ in range(samples):
            g = sample_element(meets["group"], rng)
            worst = max(worst, iwasawa_lower(g).residual)
        decompositions["group"] = {"count": samples, "max_residual": worst}

    probe = orbit_probe(group, rng, samples=samples)
    return {
        "group": group,
        "seed": int(seed),
        "samples": int(samples),
        "dimensions": dimensions,
        "quotients": quotients,
        "membership_samples": {
            "checked": membership_checked,
            "failures": membership_failures,
            "worst": membership_worst,
        },
        "decompositions": decompositions,
        "orbit_probe": {
            "ok": probe.ok,
            "checks": [
                {
                    "name": check.name,
                    "passed": check.passed,
                    "failed": check.failed,
                    "worst": check.worst,
                }
                for check in probe.checks
            ],
            "witnesses": [dict(w) for w in probe.witnesses],
        },
    }
