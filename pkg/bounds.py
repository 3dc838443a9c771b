#!/usr/bin/env python3
"""
Coefficient Bounds for Harmonic Mappings

Closed-form coefficient estimates for bounded and normalized harmonic
mappings f = h + conj(g) of the unit disk, and a numerical audit that
extracts a_n, b_n from samples on a circle and compares them against
those estimates.

Bound hypotheses supported by the audit:
- bounded_modulus: |f| <= M, bound 4M/pi for every n >= 1
- sum_modulus: |h| + |g| <= M, bound M - lambda_f(0)^2/M for n >= 2
- conjecture_h: |f| <= M with lambda_f(0) = 1, candidate bound M - 1/M
  for n >= 2 (reported, never asserted)
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Union

import numpy as np

from maps_core import DomainError, HarmonicMap

logger = logging.getLogger(__name__)

# Crossover of the two branches of lambda0 and of bigK, from their closed forms
M0 = math.pi / (2 * (2 * math.pi ** 2 - 16) ** 0.25)
M0_PRIME = math.pi / math.sqrt(math.pi ** 2 - 8)

AUDIT_TOLERANCE = 1e-8
DEFAULT_EXTRACTION_RADIUS = 0.5
DEFAULT_EXTRACTION_SAMPLES = 4096

BOUNDED_MODULUS = "bounded_modulus"
SUM_MODULUS = "sum_modulus"
CONJECTURE_H = "conjecture_h"
AUDIT_MODES = (BOUNDED_MODULUS, SUM_MODULUS, CONJECTURE_H)

# lam slightly above M from round-off in an extracted lambda_f(0)
_LAMBDA_SLACK = 1e-12


def _require_at_least_one(M: float, what: str):
    if not M >= 1:
        raise DomainError(f"{what} requires M >= 1 (J_f(0) = 1 with |f| < M forces M >= 1), got M={M}")


def lambda0(M: float) -> float:
    """
    Lower bound for lambda_f(0) of a harmonic map with J_f(0) = 1 and |f| < M.

    Args:
        M: Bound on |f|, M >= 1

    Returns:
        sqrt(2)/(sqrt(M^2-1)+sqrt(M^2+1)) for M <= M0, pi/(4M) beyond
    """
    _require_at_least_one(M, "lambda0")
    if M <= M0:
        return math.sqrt(2) / (math.sqrt(M * M - 1) + math.sqrt(M * M + 1))
    return math.pi / (4 * M)


def bound_bounded(M: float) -> float:
    """Bound on |a_n| + |b_n| for |f| <= M, sharp for every n >= 1."""
    return 4 * M / math.pi


def bound_jacobian_normalized(M: float) -> float:
    """Bound sqrt(2M^2-2) on |a_n| + |b_n|, n >= 2, when J_f(0) = 1 and |f| < M."""
    _require_at_least_one(M, "bound_jacobian_normalized")
    return math.sqrt(2 * M * M - 2)


def bigK(M: float) -> float:
    """K(M) = min(sqrt(2M^2-2), 4M/pi); the two branches cross at M0_PRIME."""
    _require_at_least_one(M, "bigK")
    return min(bound_jacobian_normalized(M), bound_bounded(M))


def bound_sum_normalized(M: float, lam: float) -> float:
    """
    Bound M - lam^2/M on |a_n| + |b_n|, n >= 2, when |h| + |g| <= M.

    Args:
        M: Bound on |h| + |g|
        lam: lambda_f(0), with 0 <= lam <= M

    Returns:
        M - lam^2/M
    """
    if M <= 0:
        raise DomainError(f"bound_sum_normalized requires M > 0, got M={M}")
    if lam < 0 or lam > M * (1 + _LAMBDA_SLACK):
        raise DomainError(f"|h|+|g| <= M forces 0 <= lambda_f(0) <= M, got lambda={lam}, M={M}")
    lam = min(lam, M)
    return M - lam * lam / M


@dataclass(frozen=True)
class CoeffPair:
    """Coefficients of z^n in h and in g for f = h + conj(g)."""

    n: int
    a_n: complex
    b_n: complex

    @property
    def modulus_sum(self) -> float:
        return abs(self.a_n) + abs(self.b_n)


@dataclass(frozen=True)
class AuditRow:
    n: int
    value: float
    bound: float
    slack: float


@dataclass
class BoundsAudit:
    """Extracted |a_n| + |b_n| against the bound of one hypothesis."""

    map_name: str
    M: float
    mode: str
    lam: float
    rows: List[AuditRow] = field(default_factory=list)
    tolerance: float = AUDIT_TOLERANCE

    @property
    def asserted(self) -> bool:
        """Conjecture rows are reported, never asserted."""
        return self.mode != CONJECTURE_H

    @property
    def passed(self) -> bool:
        return all(row.slack >= -self.tolerance for row in self.rows)

    @property
    def status(self) -> str:
        if not self.asserted:
            return "exploratory"
        return "ok" if self.passed else "fail"


def extract_coefficients(f: Callable, n_max: int, r: float = DEFAULT_EXTRACTION_RADIUS,
                         N: int = DEFAULT_EXTRACTION_SAMPLES) -> List[CoeffPair]:
    """
    Recover a_n and b_n of a harmonic map from N samples on |z| = r.

    With theta_k = 2 pi k / N the discrete Fourier transform of f(r e^{i theta_k})
    gives a_n r^n at frequency n and conj(b_n) r^n at frequency -n.

    Args:
        f: Vectorized evaluator of the harmonic map
        n_max: Highest index to extract
        r: Sampling radius in (0, 1)
        N: Number of samples, at least 4 (n_max + 1)

    Returns:
        CoeffPair for n = 1..n_max
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if N < 4 * (n_max + 1):
        raise DomainError(f"Need at least {4 * (n_max + 1)} samples for n_max={n_max}, got N={N}")
    if not 0 < r < 1:
        raise DomainError(f"Sampling radius must lie in (0, 1), got r={r}")

    theta = 2 * np.pi * np.arange(N) / N
    samples = np.asarray(f(r * np.exp(1j * theta)), dtype=complex)
    spectrum = np.fft.fft(samples) / N

    pairs = []
    for n in range(1, n_max + 1):
        scale = r ** n
        a_n = spectrum[n] / scale
        b_n = np.conj(spectrum[N - n]) / scale
        pairs.append(CoeffPair(n=n, a_n=complex(a_n), b_n=complex(b_n)))
    return pairs


def lambda_at_origin(pairs: List[CoeffPair]) -> float:
    """lambda_f(0) = ||a_1| - |b_1|| from an extraction that includes n = 1."""
    first = next(p for p in pairs if p.n == 1)
    return abs(abs(first.a_n) - abs(first.b_n))


def audit_bounds(f: Union[HarmonicMap, Callable], M: float, mode: str, n_max: int = 16,
                 map_name: str = "map", r: float = DEFAULT_EXTRACTION_RADIUS,
                 N: int = DEFAULT_EXTRACTION_SAMPLES) -> BoundsAudit:
    """
    Compare extracted |a_n| + |b_n| with the bound of the given hypothesis.

    The caller asserts that f satisfies the hypothesis named by mode.

    Args:
        f: Harmonic map or vectorized evaluator
        M: Bound of the hypothesis
        mode: One of AUDIT_MODES
        n_max: Highest coefficient index audited
        map_name: Name recorded in the audit
        r: Extraction radius
        N: Extraction sample count

    Returns:
        BoundsAudit with one row per audited index
    """
    if mode not in AUDIT_MODES:
        raise DomainError(f"Unknown audit mode '{mode}'; valid modes: {', '.join(AUDIT_MODES)}")

    pairs = extract_coefficients(f, n_max, r=r, N=N)
    lam = lambda_at_origin(pairs)

    if mode == BOUNDED_MODULUS:
        first_n = 1
        bound = bound_bounded(M)
    elif mode == SUM_MODULUS:
        first_n = 2
        bound = bound_sum_normalized(M, lam)
    else:
        first_n = 2
        bound = M - 1 / M

    audit = BoundsAudit(map_name=map_name, M=M, mode=mode, lam=lam)
    for pair in pairs:
        if pair.n < first_n:
            continue
        value = pair.modulus_sum
        audit.rows.append(AuditRow(n=pair.n, value=value, bound=bound, slack=bound - value))

    if audit.asserted and not audit.passed:
        worst = min(audit.rows, key=lambda row: row.slack)
        logger.warning(f"Bound audit failed for {map_name} ({mode}, M={M}): "
                       f"n={worst.n} exceeds bound by {-worst.slack:.3e}")
    else:
        logger.debug(f"Bound audit for {map_name} ({mode}, M={M}): {len(audit.rows)} rows, lambda={lam:.6g}")
    return audit
