#!/usr/bin/env python3
"""
Desk-Scale Verification of Landau-Type Theorems

Spot-checks the conclusions of the radius theorems on concrete mappings:

- A corpus of the extremal and composite mappings the theorems are built
  around, each audited against its own hypothesis at construction
- Grid injectivity scanning with a k-d tree over image points
- Winding-number coverage checks for the schlicht disk
- Jacobian and minimum-stretch scans

Scans are falsifiers: a pass means no violation was found at grid scale,
not a proof of univalence.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.spatial import cKDTree

from bounds import BOUNDED_MODULUS, SUM_MODULUS
from maps_core import (
    DEFAULT_TRUNCATION_ORDER,
    AnalyticSeries,
    BiharmonicMap,
    ClosedFormAnalytic,
    DomainError,
    HarmonicMap,
    jacobian,
)
from radii import FAMILY_II, classical_landau, theorem_radius

logger = logging.getLogger(__name__)

HYPOTHESIS_TOLERANCE = 1e-10
HYPOTHESIS_SAMPLES = 512

COLLISION_TOLERANCE = 1e-10
SEPARATION_FLOOR = 1e-6
MAX_ANGLE_INCREMENT = math.pi / 4
NEAR_CURVE_TOLERANCE = 1e-9
WINDING_DEVIATION_LIMIT = 1e-6
TARGET_RINGS = (0.3, 0.6, 0.9)
MAX_REFINEMENT_ROUNDS = 24
MAX_CURVE_SAMPLES = 1 << 20

GRID_SCALE_NOTE = "grid-scale falsifier: pass means no violation found at this grid density"


class HypothesisAuditError(RuntimeError):
    """A corpus mapping failed its own hypothesis audit."""


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _extremal(M: float, a: float, n: int) -> ClosedFormAnalytic:
    """f_{a,n}(z) = M z (a - M z^{n-1}) / (M - a z^{n-1}); a = M reduces to M z."""
    if a == M:
        return ClosedFormAnalytic(name=f"f_{{{a:g},{n}}}(M={M:g})", value=lambda z: M * z,
                                  derivative_value=lambda z: np.full(np.shape(z), M, dtype=complex))

    def value(z):
        w = z ** (n - 1)
        return M * z * (a - M * w) / (M - a * w)

    def derivative(z):
        w = z ** (n - 1)
        v = M - a * w
        return M * ((a - M * w) * v + (n - 1) * w * (a * a - M * M)) / (v * v)

    return ClosedFormAnalytic(name=f"f_{{{a:g},{n}}}(M={M:g})", value=value, derivative_value=derivative)


def _strip_part(M: float, m: int = 1) -> ClosedFormAnalytic:
    """h(z^m) with h = -(iM/pi) log((1+z)/(1-z)); vstrip is h + conj(h)."""
    c = -1j * M / math.pi

    def value(z):
        w = z ** m
        return c * np.log((1 + w) / (1 - w))

    def derivative(z):
        w = z ** m
        return c * 2 / (1 - w * w) * m * z ** (m - 1)

    return ClosedFormAnalytic(name=f"strip(M={M:g}, m={m})", value=value, derivative_value=derivative)


def extremal_series(M: float, a: float, n: int, order: int = DEFAULT_TRUNCATION_ORDER) -> AnalyticSeries:
    """Power series of f_{a,n} obtained by dividing a M z - M^2 z^n by M - a z^{n-1}."""
    numerator = np.zeros(n + 1, dtype=complex)
    numerator[1] = a * M
    numerator[n] -= M * M
    denominator = np.zeros(n, dtype=complex)
    denominator[0] = M
    denominator[n - 1] -= a
    return AnalyticSeries.from_rational(numerator, denominator, order=order)


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AuditTarget:
    """A harmonic map inside a corpus entry together with its bound hypothesis."""

    label: str
    mapping: HarmonicMap
    M: float
    mode: str


@dataclass
class CorpusEntry:
    name: str
    kind: str
    params: Dict[str, float]
    mapping: Any
    hypothesis: str
    normalization: str
    audit_targets: List[AuditTarget] = field(default_factory=list)
    closed_disk: bool = True

    def evaluate(self, z):
        return self.mapping(z)

    def wirtinger(self, z):
        return self.mapping.wirtinger(z)


CORPUS_DEFAULTS: Dict[str, Dict[str, float]] = {
    "identity": {},
    "landau_classic": {"M": 2.0},
    "vstrip": {"M": 2.0},
    "vstrip_m": {"M": 2.0, "m": 3},
    "f_an": {"M": 2.0, "a": 1.0, "n": 3},
    "f_an_conj": {"M": 2.0, "a": 1.0, "n": 3},
    "bih_g": {"M": 1.5},
    "bih_gh": {"M1": 1.0, "M2": 2.0},
}
CORPUS_NAMES = tuple(CORPUS_DEFAULTS)

CORPUS_DESCRIPTIONS = {
    "identity": "f(z) = z; |h|+|g| <= 1 with lambda_f(0) = 1",
    "landau_classic": "M z (1 - M z)/(M - z); analytic, |f| <= M, f(0) = f'(0) - 1 = 0",
    "vstrip": "(2M/pi) arctan(2y/(1-x^2-y^2)); |f| <= M, sharp for |a_1|+|b_1| = 4M/pi",
    "vstrip_m": "vstrip(z^m); |f| <= M, sharp for |a_m|+|b_m| = 4M/pi",
    "f_an": "M z (a - M z^{n-1})/(M - a z^{n-1}); |h|+|g| <= M with lambda_f(0) = a",
    "f_an_conj": "conj(f_{a,n}); |h|+|g| <= M with lambda_f(0) = a",
    "bih_g": "|z|^2 f_{1,2}(z; M); g(0) = lambda_g(0) - 1 = 0, |g| <= M, h = 0",
    "bih_gh": "|z|^2 f_{a,2}(z; M1) + f_{1,2}(z; M2), a = min(1, M1); F(0) = h(0) = lambda_F(0) - 1 = 0",
}


def _require(condition: bool, message: str):
    if not condition:
        raise DomainError(message)


def _positive_integer(value: Any, name: str, minimum: int) -> int:
    _require(float(value) == int(value) and int(value) >= minimum, f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)


def _sample_points(closed_disk: bool) -> np.ndarray:
    """Half the samples on the boundary circle, half in the interior."""
    half = HYPOTHESIS_SAMPLES // 2
    theta = 2 * np.pi * (np.arange(half) + 0.5) / half
    boundary_radius = 1.0 if closed_disk else 1.0 - 1e-9
    rng = np.random.default_rng(2011)
    interior = np.sqrt(rng.uniform(0, 1, half)) * np.exp(2j * np.pi * rng.uniform(0, 1, half))
    return np.concatenate([boundary_radius * np.exp(1j * theta), interior])


def _audit_hypothesis(entry: CorpusEntry, checks: List[Tuple[str, complex, complex]]):
    """Check bound hypotheses on samples and the declared normalization at 0."""
    points = _sample_points(entry.closed_disk)
    for target in entry.audit_targets:
        if target.mode == SUM_MODULUS:
            size = np.abs(target.mapping.h_part(points)) + np.abs(target.mapping.g_part(points))
        else:
            size = np.abs(target.mapping(points))
        worst = float(np.max(size))
        if not worst <= target.M + HYPOTHESIS_TOLERANCE:
            raise HypothesisAuditError(
                f"{entry.name}: {target.label} exceeds its bound {target.M} ({target.mode}), max {worst!r}")
    for label, actual, expected in checks:
        if abs(actual - expected) > HYPOTHESIS_TOLERANCE:
            raise HypothesisAuditError(f"{entry.name}: normalization {label} = {actual!r}, expected {expected!r}")
    logger.debug(f"Corpus entry {entry.name} {entry.params} passed its hypothesis audit")


def _lambda_at_zero(mapping: HarmonicMap) -> float:
    fz, fzbar = mapping.wirtinger(0j)
    return abs(abs(fz) - abs(fzbar))


def corpus(name: str, **params) -> CorpusEntry:
    """
    Build a named corpus mapping.

    Args:
        name: One of CORPUS_NAMES
        **params: Overrides of CORPUS_DEFAULTS[name] (M, a, n, m, M1, M2)

    Returns:
        CorpusEntry whose hypothesis audit has passed
    """
    if name not in CORPUS_DEFAULTS:
        raise DomainError(f"Unknown corpus entry '{name}'; valid identifiers: {', '.join(CORPUS_NAMES)}")
    unknown = set(params) - set(CORPUS_DEFAULTS[name])
    _require(not unknown, f"Corpus entry '{name}' does not take parameters {sorted(unknown)}")
    values = {**CORPUS_DEFAULTS[name], **{k: v for k, v in params.items() if v is not None}}

    checks: List[Tuple[str, complex, complex]] = []
    if name == "identity":
        mapping = HarmonicMap.analytic(AnalyticSeries.identity())
        entry = CorpusEntry(name, "harmonic", values, mapping, SUM_MODULUS, "f(0) = 0, lambda_f(0) = 1",
                            [AuditTarget("f", mapping, 1.0, SUM_MODULUS)])
        checks = [("f(0)", mapping(0j), 0), ("lambda_f(0)", _lambda_at_zero(mapping), 1)]

    elif name == "landau_classic":
        M = float(values["M"])
        _require(M >= 1, f"landau_classic requires M >= 1, got M={M}")
        mapping = HarmonicMap.analytic(_extremal(M, 1.0, 2))
        entry = CorpusEntry(name, "analytic", values, mapping, BOUNDED_MODULUS, "f(0) = f'(0) - 1 = 0",
                            [AuditTarget("f", mapping, M, BOUNDED_MODULUS)])
        checks = [("f(0)", mapping(0j), 0), ("f'(0)", mapping.wirtinger(0j)[0], 1)]

    elif name in ("vstrip", "vstrip_m"):
        M = float(values["M"])
        _require(M > 0, f"{name} requires M > 0, got M={M}")
        m = _positive_integer(values.get("m", 1), "m", 1)
        part = _strip_part(M, m)
        mapping = HarmonicMap(h_part=part, g_part=part)
        entry = CorpusEntry(name, "harmonic", values, mapping, BOUNDED_MODULUS, "f(0) = 0",
                            [AuditTarget("f", mapping, M, BOUNDED_MODULUS)], closed_disk=False)
        checks = [("f(0)", mapping(0j), 0)]

    elif name in ("f_an", "f_an_conj"):
        M, a = float(values["M"]), float(values["a"])
        n = _positive_integer(values["n"], "n", 2)
        _require(M > 0 and 0 <= a <= M, f"{name} requires 0 <= a <= M, got a={a}, M={M}")
        part = _extremal(M, a, n)
        zero = AnalyticSeries.constant(0)
        if name == "f_an":
            mapping = HarmonicMap(h_part=part, g_part=zero)
        else:
            mapping = HarmonicMap(h_part=zero, g_part=part)
        entry = CorpusEntry(name, "harmonic", values, mapping, SUM_MODULUS, "f(0) = 0, lambda_f(0) = a",
                            [AuditTarget("f", mapping, M, SUM_MODULUS)])
        checks = [("f(0)", mapping(0j), 0), ("lambda_f(0)", _lambda_at_zero(mapping), a)]

    elif name == "bih_g":
        M = float(values["M"])
        _require(M >= 1, f"bih_g requires M >= 1 (lambda_g(0) = 1 with |g| <= M), got M={M}")
        g_map = HarmonicMap.analytic(_extremal(M, 1.0, 2))
        mapping = BiharmonicMap(g_map=g_map, h_map=HarmonicMap.zero())
        entry = CorpusEntry(name, "biharmonic", values, mapping, SUM_MODULUS, "F(0) = h(0) = 0, lambda_g(0) = 1",
                            [AuditTarget("g", g_map, M, SUM_MODULUS)])
        checks = [("F(0)", mapping(0j), 0), ("lambda_g(0)", _lambda_at_zero(g_map), 1)]

    else:
        M1, M2 = float(values["M1"]), float(values["M2"])
        _require(M1 > 0 and M2 >= 1, f"bih_gh requires M1 > 0 and M2 >= 1, got M1={M1}, M2={M2}")
        g_map = HarmonicMap.analytic(_extremal(M1, min(1.0, M1), 2))
        h_map = HarmonicMap.analytic(_extremal(M2, 1.0, 2))
        mapping = BiharmonicMap(g_map=g_map, h_map=h_map)
        entry = CorpusEntry(name, "biharmonic", values, mapping, BOUNDED_MODULUS,
                            "F(0) = h(0) = 0, lambda_F(0) = J_F(0) = 1",
                            [AuditTarget("g", g_map, M1, BOUNDED_MODULUS), AuditTarget("h", h_map, M2, SUM_MODULUS)])
        fz, fzbar = mapping.wirtinger(0j)
        checks = [("F(0)", mapping(0j), 0), ("h(0)", h_map(0j), 0), ("lambda_F(0)", abs(abs(fz) - abs(fzbar)), 1)]

    _audit_hypothesis(entry, checks)
    return entry


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------

def polar_grid(r: float, grid_n: int) -> np.ndarray:
    """Origin plus grid_n radii r k/grid_n times grid_n equally spaced angles."""
    radii = r * np.arange(1, grid_n + 1) / grid_n
    angles = np.exp(2j * np.pi * np.arange(grid_n) / grid_n)
    return np.concatenate([[0j], (radii[:, None] * angles[None, :]).ravel()])


@dataclass
class InjectivityReport:
    radius: float
    grid_n: int
    passed: bool
    witness: Optional[Tuple[complex, complex]]
    min_separation_ratio: float
    n_points: int
    note: str = GRID_SCALE_NOTE


def injectivity_scan(F: Callable, r: float, grid_n: int = 128,
                     collision_tolerance: float = COLLISION_TOLERANCE,
                     separation_floor: float = SEPARATION_FLOOR) -> InjectivityReport:
    """
    Look for two grid points of U_r with (numerically) equal images.

    Images closer than collision_tolerance, scaled by the image's extent when
    that is below 1, count as equal; their preimages must also be farther apart
    than separation_floor to count as a violation.

    Args:
        F: Vectorized evaluator
        r: Scan radius in (0, 1]
        grid_n: Number of radii and of angles, at least 16

    Returns:
        InjectivityReport; the witness is the first violating pair in grid order
    """
    _require(grid_n >= 16, f"grid_n must be >= 16, got {grid_n}")
    _require(0 < r <= 1, f"Scan radius must lie in (0, 1], got r={r}")

    points = polar_grid(r, grid_n)
    images = np.asarray(F(points), dtype=complex)
    _require(np.isfinite(images).all(),
             f"Mapping is not finite at {int(np.sum(~np.isfinite(images)))} grid points of U_r, r={r}")
    coords = np.column_stack([images.real, images.imag])
    extent = float(np.max(np.abs(images)))
    threshold = collision_tolerance * (min(1.0, extent) if extent > 0 else 1.0)

    tree = cKDTree(coords)
    pairs = tree.query_pairs(threshold, output_type="ndarray")
    witness = None
    if len(pairs):
        pairs = np.sort(pairs, axis=1)
        separated = np.abs(points[pairs[:, 0]] - points[pairs[:, 1]]) > separation_floor
        violations = pairs[separated]
        if len(violations):
            order = np.lexsort((violations[:, 1], violations[:, 0]))
            i, j = violations[order[0]]
            witness = (complex(points[i]), complex(points[j]))

    # Nearest image neighbour of every point gives the tested pairs for the ratio
    distances, indices = tree.query(coords, k=2)
    own = np.arange(len(points))
    partner = np.where(indices[:, 0] == own, indices[:, 1], indices[:, 0])
    image_gap = np.where(indices[:, 0] == own, distances[:, 1], distances[:, 0])
    domain_gap = np.abs(points - points[partner])
    tested = domain_gap > separation_floor
    ratio = float(np.min(image_gap[tested] / domain_gap[tested])) if tested.any() else math.inf

    passed = witness is None
    if passed:
        logger.debug(f"Injectivity scan r={r:.6g}, grid {grid_n}: pass, min ratio {ratio:.3e}")
    else:
        logger.info(f"Injectivity scan r={r:.6g}, grid {grid_n}: collision at {witness}")
    return InjectivityReport(radius=r, grid_n=grid_n, passed=passed, witness=witness,
                             min_separation_ratio=ratio, n_points=len(points))


@dataclass
class WindingResult:
    windings: np.ndarray
    deviations: np.ndarray
    indeterminate: np.ndarray
    n_samples: int


def winding_numbers(F: Callable, r: float, targets: np.ndarray, n_boundary: int = 1024,
                    max_increment: float = MAX_ANGLE_INCREMENT) -> WindingResult:
    """
    Winding numbers of the closed curve F(r e^{i theta}) around each target.

    Principal-branch angle increments are summed along the curve; segments whose
    increment reaches max_increment for some target are bisected until none do.
    Targets within NEAR_CURVE_TOLERANCE of the curve are indeterminate, and so is
    every target when the curve has non-finite samples.
    """
    targets = np.asarray(targets, dtype=complex)
    theta = 2 * np.pi * np.arange(n_boundary) / n_boundary

    for round_number in range(MAX_REFINEMENT_ROUNDS + 1):
        values = np.asarray(F(r * np.exp(1j * theta)), dtype=complex)
        closed = np.append(values, values[0])
        finite = bool(np.isfinite(values).all())
        offsets = closed[None, :] - targets[:, None]
        near = (np.min(np.abs(offsets), axis=1) < NEAR_CURVE_TOLERANCE) | (not finite)
        with np.errstate(divide="ignore", invalid="ignore"):
            increments = np.angle(offsets[:, 1:] / offsets[:, :-1])
        coarse = np.any((np.abs(increments) >= max_increment) & ~near[:, None], axis=0)
        if not coarse.any():
            break
        if round_number == MAX_REFINEMENT_ROUNDS or theta.size + coarse.sum() > MAX_CURVE_SAMPLES:
            logger.warning(f"Curve refinement stopped at {theta.size} samples with {coarse.sum()} coarse segments")
            break
        ends = np.append(theta, 2 * np.pi)
        midpoints = 0.5 * (ends[:-1][coarse] + ends[1:][coarse])
        theta = np.sort(np.concatenate([theta, midpoints]))
        logger.debug(f"Winding refinement round {round_number + 1}: {theta.size} samples")

    if not finite:
        logger.warning(f"Boundary curve at r={r:.6g} has non-finite samples; every target is indeterminate")
    totals = np.where(near, 0.0, np.sum(np.where(near[:, None], 0.0, increments), axis=1)) / (2 * np.pi)
    windings = np.rint(totals).astype(int)
    deviations = np.abs(totals - windings)
    return WindingResult(windings=windings, deviations=deviations, indeterminate=near, n_samples=theta.size)


@dataclass
class CoverageReport:
    radius: float
    sigma: float
    n_targets: int
    uncovered: List[complex]
    indeterminate: List[complex]
    windings: List[int]
    max_deviation: float
    passed: bool
    n_samples: int
    note: str = GRID_SCALE_NOTE


def coverage_targets(sigma: float, n_targets: int) -> np.ndarray:
    """n_targets points on the rings, the remainder going to the innermost rings first."""
    rings = len(TARGET_RINGS)
    _require(n_targets >= rings, f"Need at least {rings} coverage targets, got {n_targets}")
    base, extra = divmod(int(n_targets), rings)
    points = []
    for index, ring in enumerate(TARGET_RINGS):
        count = base + (1 if index < extra else 0)
        points.append(ring * sigma * np.exp(2j * np.pi * (np.arange(count) + 0.5) / count))
    return np.concatenate(points)


def schlicht_scan(F: Callable, r: float, sigma: float, n_boundary: int = 1024,
                  n_targets: int = 48) -> CoverageReport:
    """
    Check that F(U_r) covers U_sigma once, by winding numbers around targets.

    Targets sit on the rings |w| = 0.3, 0.6 and 0.9 sigma. The scan passes when
    every determinate winding number is +1 (sense-preserving) or every one is -1.
    """
    _require(sigma > 0, f"Schlicht radius must be positive, got sigma={sigma}")
    targets = coverage_targets(sigma, n_targets)
    result = winding_numbers(F, r, targets, n_boundary=n_boundary)

    determinate = ~result.indeterminate
    windings = result.windings[determinate]
    expected = 1 if np.sum(windings == 1) >= np.sum(windings == -1) else -1
    uncovered = [complex(w) for w, k, d in zip(targets, result.windings, determinate) if d and k != expected]
    indeterminate = [complex(w) for w in targets[result.indeterminate]]
    max_deviation = float(np.max(result.deviations[determinate])) if determinate.any() else 0.0
    if max_deviation > WINDING_DEVIATION_LIMIT:
        logger.warning(f"Winding numbers deviate from integers by up to {max_deviation:.3e}")
    if indeterminate:
        logger.warning(f"{len(indeterminate)} coverage targets lie on the boundary curve; reported as indeterminate")

    passed = bool(determinate.any()) and not uncovered
    return CoverageReport(radius=r, sigma=sigma, n_targets=len(targets), uncovered=uncovered,
                          indeterminate=indeterminate, windings=[int(k) for k in result.windings],
                          max_deviation=max_deviation, passed=passed, n_samples=result.n_samples)


def min_jacobian(wirtinger: Callable, r: float, grid_n: int = 128) -> float:
    """Minimum of J = |F_z|^2 - |F_zbar|^2 over the polar grid of U_r."""
    _require(grid_n >= 16, f"grid_n must be >= 16, got {grid_n}")
    fz, fzbar = wirtinger(polar_grid(r, grid_n))
    values = jacobian(fz, fzbar)
    _require(np.isfinite(values).all(), f"Jacobian is not finite on the scan grid of radius r={r}")
    return float(np.min(values))


def min_circle_stretch(wirtinger: Callable, r: float, n: int = 4096) -> float:
    """Minimum of lambda_F = ||F_z| - |F_zbar|| on |z| = r (min |f'| for analytic f)."""
    z = r * np.exp(2j * np.pi * np.arange(n) / n)
    fz, fzbar = wirtinger(z)
    stretch = np.abs(np.abs(fz) - np.abs(fzbar))
    _require(np.isfinite(stretch).all(), f"Stretch is not finite on |z| = {r}")
    return float(np.min(stretch))


# ---------------------------------------------------------------------------
# Theorem configurations
# ---------------------------------------------------------------------------

@dataclass
class TheoremVerification:
    theorem: str
    params: Dict[str, float]
    corpus_name: str
    rho: float
    sigma: float
    scan_radius: float
    injectivity: InjectivityReport
    coverage: Optional[CoverageReport]
    min_jacobian: float
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.coverage is None:
            return "exploratory"
        return "ok" if self.injectivity.passed and self.coverage.passed else "fail"


def verify_theorem(tag: str, M: Optional[float] = None, M1: Optional[float] = None,
                   M2: Optional[float] = None, grid_n: int = 128, univalence_scale: float = 0.999,
                   coverage_scale: float = 0.99, n_boundary: int = 1024, n_targets: int = 48,
                   collision_tolerance: float = COLLISION_TOLERANCE,
                   separation_floor: float = SEPARATION_FLOOR, **radius_options) -> TheoremVerification:
    """
    Scan the composite mapping that satisfies a theorem's hypothesis.

    Family II theorems use bih_g with bound M; family I theorems use bih_gh with
    bounds (M1, M2), where theorem A takes M1 = M2 = M.
    """
    result = theorem_radius(tag, M=M, M1=M1, M2=M2, **radius_options)
    if result.spec.family == FAMILY_II:
        entry = corpus("bih_g", M=M)
    elif tag == "A":
        entry = corpus("bih_gh", M1=M, M2=M)
    else:
        entry = corpus("bih_gh", M1=M1, M2=M2)

    scan_radius = univalence_scale * result.rho
    logger.info(f"Verifying theorem {tag} on {entry.name} {entry.params}: rho={result.rho:.6g}, sigma={result.sigma:.6g}")
    injectivity = injectivity_scan(entry.evaluate, scan_radius, grid_n, collision_tolerance, separation_floor)
    coverage = None
    if result.sigma > 0:
        coverage = schlicht_scan(entry.evaluate, scan_radius, coverage_scale * result.sigma, n_boundary, n_targets)
    else:
        logger.warning(f"Theorem {tag}: sigma={result.sigma:.6g} is not positive; coverage scan skipped")
    jac = min_jacobian(entry.wirtinger, scan_radius, grid_n)
    params = {k: v for k, v in (("M", M), ("M1", M1), ("M2", M2)) if v is not None}
    return TheoremVerification(theorem=tag, params=params, corpus_name=entry.name, rho=result.rho,
                               sigma=result.sigma, scan_radius=scan_radius, injectivity=injectivity,
                               coverage=coverage, min_jacobian=jac)


def verify_classical(M: float, grid_n: int = 128, scale: float = 0.99, n_boundary: int = 1024,
                     n_targets: int = 48, collision_tolerance: float = COLLISION_TOLERANCE,
                     separation_floor: float = SEPARATION_FLOOR) -> TheoremVerification:
    """
    Scan the classical extremal M z (1 - M z)/(M - z).

    Injectivity is checked at scale * r0, coverage of U_{scale * R0} on |z| = r0,
    and the minimum of |f'| on |z| = r0 is recorded as the sharpness witness.
    """
    r0, R0 = classical_landau(M)
    entry = corpus("landau_classic", M=M)
    injectivity = injectivity_scan(entry.evaluate, scale * r0, grid_n, collision_tolerance, separation_floor)
    coverage = schlicht_scan(entry.evaluate, r0, scale * R0, n_boundary, n_targets)
    jac = min_jacobian(entry.wirtinger, r0, grid_n)
    witness = min_circle_stretch(entry.wirtinger, r0)
    return TheoremVerification(theorem="classical", params={"M": M}, corpus_name=entry.name, rho=r0, sigma=R0,
                               scan_radius=scale * r0, injectivity=injectivity, coverage=coverage,
                               min_jacobian=jac, extras={"min_boundary_stretch": witness})
