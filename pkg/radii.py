#!/usr/bin/env python3
"""
Univalence and Schlicht-Disk Radii

Every Landau-type theorem for biharmonic mappings reduces to one of two
radius equations:

- Family I: lam - 2 m1 r - c1 r^2/(1-r)^2 - c2 (2r - r^2)/(1-r)^2 = 0,
  solved by bisection; schlicht radius lam rho - c1 rho^3/(1-rho) - c2 rho^2/(1-rho)
- Family II: alpha (1-r)^2 = beta (4r - 3r^2), solved in closed form;
  schlicht radius alpha rho^3 - beta rho^4/(1-rho)

Theorems are thin parameter rows over the two families. Remark chains
compare the radii of related theorems over a parameter grid.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import bisect

from bounds import M0_PRIME, bigK, bound_jacobian_normalized, lambda0
from maps_core import DomainError

logger = logging.getLogger(__name__)

FAMILY_I = "I"
FAMILY_II = "II"

BISECTION_TOLERANCE = 1e-13
BISECTION_MAX_ITERATIONS = 200
BRACKET_GAP = 1e-12
RESIDUAL_LIMIT = 1e-10
REFINE_TOLERANCE = 1e-16
REFINE_ULPS = 16

THEOREM_IDS = ("A", "B", "D", "E", "F", "G", "T26", "T26p", "T28", "T28p",
               "T210", "T210p", "C212", "C212p")


@dataclass(frozen=True)
class RadiusSpec:
    """
    Parameters of one radius equation.

    Family I uses (lam_or_alpha, m1, c1, c2_or_beta) as (lam, m1, c1, c2);
    family II uses (lam_or_alpha, c2_or_beta) as (alpha, beta).
    """

    family: str
    lam_or_alpha: float
    m1: float = 0.0
    c1: float = 0.0
    c2_or_beta: float = 0.0


@dataclass(frozen=True)
class RadiusResult:
    rho: float
    sigma: float
    residual: float
    iterations: int
    unconstrained: bool = False
    sigma_nonpositive: bool = False
    theorem: Optional[str] = None
    spec: Optional[RadiusSpec] = None


def family1_phi(spec: RadiusSpec, r: float) -> float:
    """Left-hand side of the family I equation at r in [0, 1)."""
    q = (1 - r) ** 2
    return (spec.lam_or_alpha - 2 * spec.m1 * r - spec.c1 * r * r / q
            - spec.c2_or_beta * (2 * r - r * r) / q)


def _check_family(spec: RadiusSpec, family: str):
    if spec.family != family:
        raise DomainError(f"Expected a family {family} radius spec, got family {spec.family}")


def family1_solve(spec: RadiusSpec, tol: float = BISECTION_TOLERANCE,
                  max_iter: int = BISECTION_MAX_ITERATIONS) -> RadiusResult:
    """
    Minimum positive root of the family I equation.

    phi is strictly decreasing on (0, 1) with phi(0) = lam > 0, so bisection on
    (0, 1 - 1e-12] converges whenever phi changes sign there. If it does not,
    the equation imposes no constraint and rho = 1 is returned flagged.

    Args:
        spec: Family I parameters
        tol: Bisection tolerance on the bracket width
            (at the default or finer, a residual above 1e-10 triggers a
            re-bisection down to float resolution)
        max_iter: Iteration cap

    Returns:
        RadiusResult with sigma left at 0; see family1_schlicht
    """
    _check_family(spec, FAMILY_I)
    if spec.lam_or_alpha <= 0:
        raise DomainError(f"Family I requires lambda > 0, got {spec.lam_or_alpha}")
    if min(spec.m1, spec.c1, spec.c2_or_beta) < 0:
        raise DomainError(f"Family I coefficients must be nonnegative: {spec}")

    r_hi = 1 - BRACKET_GAP
    if family1_phi(spec, r_hi) > 0:
        logger.warning(f"Radius equation has no root in (0, 1); reporting rho = 1 for {spec}")
        return RadiusResult(rho=1.0, sigma=0.0, residual=0.0, iterations=0, unconstrained=True, spec=spec)

    rho, info = bisect(lambda r: family1_phi(spec, r), 0.0, r_hi, xtol=tol,
                       maxiter=max_iter, full_output=True, disp=False)
    if not info.converged:
        logger.warning(f"Bisection stopped after {info.iterations} iterations without converging: {info.flag}")
    residual = abs(family1_phi(spec, rho))
    iterations = info.iterations
    if residual > RESIDUAL_LIMIT and tol <= BISECTION_TOLERANCE:
        rho, residual, extra = _refine_root(spec, r_hi, max_iter)
        iterations += extra
    logger.debug(f"Family I root {rho:.17g} after {iterations} iterations, residual {residual:.3e}")
    return RadiusResult(rho=rho, sigma=0.0, residual=residual, iterations=iterations, spec=spec)


def _refine_root(spec: RadiusSpec, r_hi: float, max_iter: int) -> Tuple[float, float, int]:
    """Re-bisect to float resolution, then take the neighbouring double with the smallest |phi|."""
    rho, info = bisect(lambda r: family1_phi(spec, r), 0.0, r_hi, xtol=REFINE_TOLERANCE,
                       maxiter=max_iter, full_output=True, disp=False)
    candidates = rho + np.arange(-REFINE_ULPS, REFINE_ULPS + 1) * np.spacing(rho)
    candidates = candidates[(candidates > 0) & (candidates <= r_hi)]
    residuals = np.abs(family1_phi(spec, candidates))
    rho = float(candidates[int(np.argmin(residuals))])
    residual = abs(family1_phi(spec, rho))
    if residual > RESIDUAL_LIMIT:
        logger.warning(f"Family I residual {residual:.3e} exceeds {RESIDUAL_LIMIT:g} at float resolution for {spec}")
    return rho, residual, info.iterations


def family1_schlicht(spec: RadiusSpec, rho: float) -> float:
    """sigma = lam rho - c1 rho^3/(1-rho) - c2 rho^2/(1-rho)."""
    _check_family(spec, FAMILY_I)
    lam, c1, c2 = spec.lam_or_alpha, spec.c1, spec.c2_or_beta
    if rho <= 0:
        raise DomainError(f"Schlicht radius needs rho > 0, got {rho}")
    if rho >= 1:
        if rho == 1 and c1 == 0 and c2 == 0:
            return lam
        raise DomainError(f"Schlicht radius needs rho < 1 unless c1 = c2 = 0, got rho={rho}")
    return lam * rho - c1 * rho ** 3 / (1 - rho) - c2 * rho ** 2 / (1 - rho)


def family2_solve(spec: RadiusSpec) -> RadiusResult:
    """
    Closed-form minimum positive root of alpha (1-r)^2 = beta (4r - 3r^2).

    rho = alpha/(alpha + 2 beta + sqrt(alpha beta + 4 beta^2)), the smaller root
    of (alpha + 3 beta) r^2 - (2 alpha + 4 beta) r + alpha = 0; rho = 1 when beta = 0.
    """
    _check_family(spec, FAMILY_II)
    alpha, beta = spec.lam_or_alpha, spec.c2_or_beta
    if alpha <= 0:
        raise DomainError(f"Family II requires alpha > 0, got {alpha}")
    if beta < 0:
        raise DomainError(f"Family II requires beta >= 0, got {beta}")

    rho = alpha / (alpha + 2 * beta + math.sqrt(alpha * beta + 4 * beta * beta))
    residual = abs(alpha * (1 - rho) ** 2 - beta * (4 * rho - 3 * rho * rho))
    return RadiusResult(rho=rho, sigma=0.0, residual=residual, iterations=0, spec=spec)


def family2_schlicht(spec: RadiusSpec, rho: float) -> float:
    """sigma = alpha rho^3 - beta rho^4/(1-rho); alpha itself when rho = 1 and beta = 0."""
    _check_family(spec, FAMILY_II)
    alpha, beta = spec.lam_or_alpha, spec.c2_or_beta
    if rho <= 0 or rho > 1:
        raise DomainError(f"Schlicht radius needs 0 < rho <= 1, got {rho}")
    if rho == 1:
        if beta == 0:
            return alpha
        raise DomainError(f"rho = 1 is only admissible when beta = 0, got beta={beta}")
    return alpha * rho ** 3 - beta * rho ** 4 / (1 - rho)


def solve_spec(spec: RadiusSpec, tol: float = BISECTION_TOLERANCE,
               max_iter: int = BISECTION_MAX_ITERATIONS, theorem: Optional[str] = None) -> RadiusResult:
    """Solve either family and attach the schlicht radius."""
    if spec.family == FAMILY_I:
        result = family1_solve(spec, tol=tol, max_iter=max_iter)
        sigma = family1_schlicht(spec, result.rho)
    elif spec.family == FAMILY_II:
        result = family2_solve(spec)
        sigma = family2_schlicht(spec, result.rho)
    else:
        raise DomainError(f"Unknown radius family '{spec.family}'")

    nonpositive = sigma <= 0
    if nonpositive:
        logger.warning(f"Schlicht radius is not positive (sigma={sigma:.6g}) for {theorem or spec}")
    return RadiusResult(rho=result.rho, sigma=sigma, residual=result.residual,
                        iterations=result.iterations, unconstrained=result.unconstrained,
                        sigma_nonpositive=nonpositive, theorem=theorem, spec=spec)


# ---------------------------------------------------------------------------
# Theorem table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremRow:
    tag: str
    family: str
    parameters: Tuple[str, ...]
    hypothesis: str
    build: Callable[..., RadiusSpec] = field(compare=False, repr=False)


def _family1(lam, m1, c1, c2) -> RadiusSpec:
    return RadiusSpec(FAMILY_I, lam, m1, c1, c2)


def _family2(alpha, beta) -> RadiusSpec:
    return RadiusSpec(FAMILY_II, alpha, c2_or_beta=beta)


THEOREM_TABLE: Dict[str, TheoremRow] = {row.tag: row for row in (
    TheoremRow("A", FAMILY_I, ("M",), "|g|, |h| <= M with F(0)=h(0)=J_F(0)-1=0; needs M >= 1",
               lambda M: _family1(math.pi / (4 * M), M, 2 * M, 2 * M)),
    TheoremRow("B", FAMILY_II, ("M",), "F=|z|^2 g with g(0)=J_g(0)-1=0 and |g| <= M; needs M > 0",
               lambda M: _family2(math.pi / (4 * M), 2 * M)),
    TheoremRow("D", FAMILY_I, ("M1", "M2"), "|g| <= M1, |h| <= M2 with lambda_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(1.0, M1, 2 * M1, bound_jacobian_normalized(M2))),
    TheoremRow("E", FAMILY_I, ("M1", "M2"), "|g| <= M1, |h| <= M2 with J_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(lambda0(M2), M1, 2 * M1, bound_jacobian_normalized(M2))),
    TheoremRow("F", FAMILY_II, ("M",), "F=|z|^2 g with g(0)=lambda_g(0)-1=0 and |g| <= M; needs M >= 1",
               lambda M: _family2(1.0, bound_jacobian_normalized(M))),
    TheoremRow("G", FAMILY_II, ("M",), "F=|z|^2 g with g(0)=J_g(0)-1=0 and |g| <= M; needs M >= 1",
               lambda M: _family2(lambda0(M), bound_jacobian_normalized(M))),
    TheoremRow("T26", FAMILY_I, ("M1", "M2"), "|g| <= M1, |h| <= M2 with lambda_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(1.0, M1, 4 * M1 / math.pi, bigK(M2))),
    TheoremRow("T26p", FAMILY_I, ("M1", "M2"),
               "|g| <= M1, |h1|+|h2| <= M2 with lambda_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(1.0, M1, 4 * M1 / math.pi, M2 - 1 / M2)),
    TheoremRow("T28", FAMILY_I, ("M1", "M2"), "|g| <= M1, |h| <= M2 with J_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(lambda0(M2), M1, 4 * M1 / math.pi, bigK(M2))),
    TheoremRow("T28p", FAMILY_I, ("M1", "M2"),
               "|g| <= M1, |h1|+|h2| <= M2 with J_F(0)=1; needs M1 > 0, M2 >= 1",
               lambda M1, M2: _family1(lambda0(M2), M1, 4 * M1 / math.pi, M2 - lambda0(M2) ** 2 / M2)),
    TheoremRow("T210", FAMILY_II, ("M",), "F=|z|^2 g with g(0)=lambda_g(0)-1=0 and |g| <= M; needs M >= 1",
               lambda M: _family2(1.0, bigK(M))),
    TheoremRow("T210p", FAMILY_II, ("M",),
               "F=|z|^2 g with g(0)=lambda_g(0)-1=0 and |g1|+|g2| <= M; needs M >= 1",
               lambda M: _family2(1.0, M - 1 / M)),
    TheoremRow("C212", FAMILY_II, ("M",), "F=|z|^2 g with g(0)=J_g(0)-1=0 and |g| <= M; needs M >= 1",
               lambda M: _family2(lambda0(M), bigK(M))),
    TheoremRow("C212p", FAMILY_II, ("M",),
               "F=|z|^2 g with g(0)=J_g(0)-1=0 and |g1|+|g2| <= M; needs M >= 1",
               lambda M: _family2(lambda0(M), M - lambda0(M) ** 2 / M)),
)}

# Rows whose bound M may lie below 1
_POSITIVE_M_ONLY = {"B"}


def theorem_spec(tag: str, M: Optional[float] = None, M1: Optional[float] = None,
                 M2: Optional[float] = None) -> RadiusSpec:
    """
    Radius equation of one theorem, with its hypothesis checked.

    Args:
        tag: One of THEOREM_IDS
        M: Single bound (rows A, B, F, G, T210, T210p, C212, C212p)
        M1: Bound on |g| (two-bound rows)
        M2: Bound on h (two-bound rows)

    Returns:
        RadiusSpec of the theorem's family
    """
    row = THEOREM_TABLE.get(tag)
    if row is None:
        raise DomainError(f"Unknown theorem '{tag}'; valid identifiers: {', '.join(THEOREM_IDS)}")

    supplied = {"M": M, "M1": M1, "M2": M2}
    values = []
    for name in row.parameters:
        value = supplied[name]
        if value is None:
            raise DomainError(f"Theorem {tag} requires {name} ({row.hypothesis})")
        if name == "M2" or (name == "M" and tag not in _POSITIVE_M_ONLY):
            ok = value >= 1
        else:
            ok = value > 0
        if not ok or not math.isfinite(value):
            raise DomainError(f"Theorem {tag}: invalid {name}={value} ({row.hypothesis})")
        values.append(float(value))
    return row.build(*values)


def theorem_radius(tag: str, M: Optional[float] = None, M1: Optional[float] = None,
                   M2: Optional[float] = None, tol: float = BISECTION_TOLERANCE,
                   max_iter: int = BISECTION_MAX_ITERATIONS) -> RadiusResult:
    """Univalence radius rho and schlicht radius sigma of one theorem."""
    spec = theorem_spec(tag, M=M, M1=M1, M2=M2)
    result = solve_spec(spec, tol=tol, max_iter=max_iter, theorem=tag)
    logger.debug(f"Theorem {tag} (M={M}, M1={M1}, M2={M2}): rho={result.rho:.17g}, sigma={result.sigma:.17g}")
    return result


def classical_landau(M: float) -> Tuple[float, float]:
    """
    Sharp Landau data of a bounded analytic f with f(0) = f'(0) - 1 = 0, |f| < M.

    Returns:
        (r0, R0) with r0 = 1/(M + sqrt(M^2-1)) and R0 = M r0^2
    """
    if not M >= 1:
        raise DomainError(f"Classical Landau theorem requires M >= 1, got M={M}")
    r0 = 1 / (M + math.sqrt(M * M - 1))
    return r0, M * r0 * r0


# ---------------------------------------------------------------------------
# Remark chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RemarkChain:
    tag: str
    members: Tuple[Tuple[str, str], ...]   # (column label, theorem tag), largest first
    relations: Tuple[str, ...]             # ">" or ">=" between consecutive members
    two_bounds: bool
    regime: str
    in_regime: Callable[[Dict[str, float]], bool] = field(compare=False, repr=False)


REMARK_CHAINS: Dict[str, RemarkChain] = {chain.tag: chain for chain in (
    RemarkChain("R27", (("r_prime", "T26p"), ("r", "T26"), ("rho_old", "D")), (">", ">"),
                True, "M2 >= M0' and M2 > 1", lambda p: p["M2"] >= M0_PRIME and p["M2"] > 1),
    RemarkChain("R29", (("r_prime", "T28p"), ("r", "T28"), ("rho_old", "E")), (">", ">"),
                True, "M2 >= M0' and M2 > 1", lambda p: p["M2"] >= M0_PRIME and p["M2"] > 1),
    RemarkChain("R211", (("r_prime", "T210p"), ("r", "T210"), ("rho_old", "F")), (">", ">="),
                False, "M > 1", lambda p: p["M"] > 1),
    RemarkChain("R213", (("r_prime", "C212p"), ("r", "C212"), ("rho_old", "G"), ("rho_oldest", "B")),
                (">", ">", ">"), False, "M > M0'", lambda p: p["M"] > M0_PRIME),
)}
REMARK_IDS = tuple(REMARK_CHAINS)

CHAIN_COLUMNS = ("r_prime", "r", "rho_old", "rho_oldest")
EQUALITY_TOLERANCE = 1e-14


@dataclass
class ChainRow:
    params: Dict[str, float]
    radii: Dict[str, float]
    sigmas: Dict[str, float]
    in_regime: bool
    passed: Optional[bool]
    equalities: List[str] = field(default_factory=list)
    holds: bool = True

    @property
    def status(self) -> str:
        if self.passed is None:
            return "exploratory"
        return "ok" if self.passed else "fail"


@dataclass
class ChainReport:
    remark: str
    regime: str
    rows: List[ChainRow] = field(default_factory=list)

    @property
    def status(self) -> str:
        asserted = [row for row in self.rows if row.passed is not None]
        if any(not row.passed for row in asserted):
            return "fail"
        return "ok" if asserted else "exploratory"


def _relation_holds(left: float, right: float, relation: str) -> Tuple[bool, bool]:
    """Return (holds, equal) for left <relation> right."""
    equal = abs(left - right) <= EQUALITY_TOLERANCE * max(abs(left), abs(right))
    if relation == ">":
        return left > right, equal
    return left > right or equal, equal


def _chain_holds(chain: RemarkChain, values: Dict[str, float], equalities: List[str], kind: str) -> bool:
    holds = True
    labels = [label for label, _ in chain.members]
    for (left, right), relation in zip(zip(labels, labels[1:]), chain.relations):
        ok, equal = _relation_holds(values[left], values[right], relation)
        if equal and relation == ">=":
            equalities.append(f"{kind}:{left}=={right}")
        holds = holds and ok
    return holds


def _grid_params(chain: RemarkChain, point: Union[float, Sequence[float]], M1: Optional[float]) -> Dict[str, float]:
    values = [point] if isinstance(point, (int, float)) else list(point)
    if chain.two_bounds:
        if len(values) == 2:
            return {"M1": float(values[0]), "M2": float(values[1])}
        if len(values) == 1 and M1 is not None:
            return {"M1": float(M1), "M2": float(values[0])}
        raise DomainError(f"Remark {chain.tag} needs (M1, M2) grid points or a fixed M1")
    if len(values) != 1:
        raise DomainError(f"Remark {chain.tag} needs single-M grid points, got {point}")
    return {"M": float(values[0])}


def remark_chain(tag: str, grid: Iterable[Union[float, Sequence[float]]], M1: Optional[float] = None,
                 tol: float = BISECTION_TOLERANCE) -> ChainReport:
    """
    Evaluate a remark's radius chain on a grid of parameters.

    Points inside the remark's stated regime are asserted (both the rho chain
    and the sigma chain); points outside it are evaluated and marked exploratory.

    Args:
        tag: One of REMARK_IDS
        grid: Parameter points; M values, or (M1, M2) pairs for R27/R29
        M1: Fixed M1 when R27/R29 grid points give only M2
        tol: Bisection tolerance for family I members

    Returns:
        ChainReport with one row per grid point, in grid order
    """
    chain = REMARK_CHAINS.get(tag)
    if chain is None:
        raise DomainError(f"Unknown remark '{tag}'; valid identifiers: {', '.join(REMARK_IDS)}")

    report = ChainReport(remark=tag, regime=chain.regime)
    for point in grid:
        params = _grid_params(chain, point, M1)
        radii, sigmas = {}, {}
        for label, theorem in chain.members:
            result = theorem_radius(theorem, tol=tol, **params)
            radii[label] = result.rho
            sigmas[label] = result.sigma

        equalities: List[str] = []
        rho_holds = _chain_holds(chain, radii, equalities, "rho")
        sigma_holds = _chain_holds(chain, sigmas, equalities, "sigma")
        holds = rho_holds and sigma_holds
        in_regime = chain.in_regime(params)
        if not in_regime:
            logger.warning(f"{tag} point {params} lies outside '{chain.regime}'; reported as exploratory")
        elif not holds:
            logger.error(f"{tag} chain violated at {params}: radii={radii}, sigmas={sigmas}")
        report.rows.append(ChainRow(params=params, radii=radii, sigmas=sigmas, in_regime=in_regime,
                                    passed=holds if in_regime else None, equalities=equalities, holds=holds))

    logger.info(f"{tag}: {len(report.rows)} grid points, status {report.status}")
    return report
