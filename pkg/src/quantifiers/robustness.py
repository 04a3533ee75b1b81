"""
Basis-optimized robustness quantifiers for qubit multi-states.

Im_R1(rho) = min_p (1/n) sum_j |<r_j, p>| and
C_R1(rho)  = min_p (1/n) sum_j ||r_j x p||, over unit p.

The Im objective is the support function of a zonotope, piecewise linear on
the sphere, so its minimum sits at p = +-(r_i x r_j) / ||r_i x r_j|| (or at a
direction orthogonal to every r_j when they span at most a line). Those
candidates are exact; the Fibonacci grid search runs alongside as a
cross-check, refining the best candidate and every lattice minimum that could
still undercut it. The C objective is smooth but nonconvex and is searched on
the grid with extra starts at the top Gram eigenvector and at every
r_j / ||r_j||. Both objectives are Lipschitz in p with constant mean ||r_j||.

Eigenvector candidates make the upper bounds of ``im_r1_bounds`` and
``c_r1_bounds`` hold for the reported value even if refinement stalls.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from bargmann.gram import GramMatrix, gram
from bargmann.invariants import overlap, pairwise_overlaps
from errors import DimensionMismatchError, InternalDisagreementError, MethodDisagreementError, RankTooHighError
from qstate.bloch import IDENTITY2, bloch_coordinates
from qstate.density import DensityMatrix, MultiState
from quantifiers.sphere import SphereSearchConfig, minimize_on_sphere, normalize_rows
from settings import get_settings

logger = logging.getLogger(__name__)

CANDIDATE_ENUMERATION = "candidate-enumeration"
GRID_REFINE = "grid-refine"
BOTH_AGREE = "both-agree"

BOUND_SLACK = 1e-9
UNIT_TOLERANCE = 1e-12
CAP_SLACK = 1e-12
IM_CAP = 1.0 / math.sqrt(3.0)
C_CAP = math.sqrt(2.0 / 3.0)
PURITY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class QuantifierResult:
    value: float
    argmin_direction: np.ndarray
    lower_bound: float
    upper_bound: float
    method: str
    cross_check_value: Optional[float] = None

    def __post_init__(self) -> None:
        if self.method not in (CANDIDATE_ENUMERATION, GRID_REFINE, BOTH_AGREE):
            raise ValueError(f"Unknown quantifier method: {self.method!r}")
        if not self.lower_bound - BOUND_SLACK <= self.value <= self.upper_bound + BOUND_SLACK:
            raise InternalDisagreementError(
                f"Quantifier value {self.value:.12g} outside its bounds "
                f"[{self.lower_bound:.12g}, {self.upper_bound:.12g}]"
            )
        norm = float(np.linalg.norm(self.argmin_direction))
        if abs(norm - 1.0) > UNIT_TOLERANCE:
            raise InternalDisagreementError(f"Minimizing direction has norm {norm!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": float(self.value),
            "argmin_direction": [float(x) for x in self.argmin_direction],
            "lower_bound": float(self.lower_bound),
            "upper_bound": float(self.upper_bound),
            "method": self.method,
            "cross_check_value": None if self.cross_check_value is None else float(self.cross_check_value),
        }


@dataclass(frozen=True)
class ProgramComparison:
    """Minimum of (1/n) sum |2 Tr(rho_i X) - 1| over all density X versus pure X only."""

    relaxed_value: float
    relaxed_bloch: Tuple[float, float, float]
    pure_value: float
    gap: float
    attained_on_sphere: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "relaxed_value": self.relaxed_value,
            "relaxed_bloch": list(self.relaxed_bloch),
            "pure_value": self.pure_value,
            "gap": self.gap,
            "attained_on_sphere": self.attained_on_sphere,
        }


def _require_qubits(ms: MultiState) -> None:
    if ms.dim != 2:
        raise DimensionMismatchError(f"Robustness quantifiers need d=2, got d={ms.dim}")


def _check_qubit_gram(g: GramMatrix) -> np.ndarray:
    if g.numerical_rank > 3:
        raise RankTooHighError(f"Gram matrix has numerical rank {g.numerical_rank}; qubit Bloch vectors allow at most 3")
    return g.padded_eigenvalues(3)


def im_r1_bounds(g: GramMatrix) -> Tuple[float, float]:
    """(lambda_3 / n, sqrt(lambda_3 / n)) from the Gram spectrum."""
    lam = _check_qubit_gram(g)
    ratio = float(lam[2]) / g.size
    upper = math.sqrt(ratio)
    if upper > IM_CAP + CAP_SLACK:
        raise InternalDisagreementError(f"sqrt(lambda_3 / n) = {upper:.12g} exceeds 1/sqrt(3)")
    return ratio, upper


def c_r1_bounds(g: GramMatrix) -> Tuple[float, float]:
    """((lambda_2 + lambda_3) / n, sqrt of the same)."""
    lam = _check_qubit_gram(g)
    ratio = float(lam[1] + lam[2]) / g.size
    upper = math.sqrt(ratio)
    all_pure = bool(np.all(np.abs(np.diag(g.entries) - 1.0) <= PURITY_TOLERANCE))
    if all_pure and upper > C_CAP + CAP_SLACK:
        raise InternalDisagreementError(f"Pure-state bound {upper:.12g} exceeds sqrt(2/3)")
    return ratio, upper


def _im_objective(r: np.ndarray):
    n = r.shape[0]

    def objective(points: np.ndarray) -> np.ndarray:
        return np.sum(np.abs(points @ r.T), axis=1) / n

    return objective


def _c_objective(r: np.ndarray):
    n = r.shape[0]

    def objective(points: np.ndarray) -> np.ndarray:
        crosses = np.cross(r[None, :, :], points[:, None, :])
        return np.sum(np.linalg.norm(crosses, axis=2), axis=1) / n

    return objective


def _scatter_eigenvectors(r: np.ndarray) -> np.ndarray:
    """Eigenvectors of sum_j r_j r_j^T as rows, ascending eigenvalue."""
    _, vecs = np.linalg.eigh(r.T @ r)
    return vecs.T


def _nonzero(r: np.ndarray) -> np.ndarray:
    return r[np.linalg.norm(r, axis=1) > UNIT_TOLERANCE]


def _pair_candidates(r: np.ndarray) -> np.ndarray:
    live = _nonzero(r)
    if live.shape[0] < 2:
        return np.zeros((0, 3))
    i, j = np.triu_indices(live.shape[0], k=1)
    crosses = normalize_rows(np.cross(live[i], live[j]))
    return np.vstack([crosses, -crosses]) if crosses.size else np.zeros((0, 3))


def _sign_candidates(r: np.ndarray) -> np.ndarray:
    """v = sum_j s_j r_j over sign patterns s, kept when sign(<r_j, v>) = s_j."""
    live = _nonzero(r)
    m = live.shape[0]
    if m == 0:
        return np.zeros((0, 3))
    patterns = ((np.arange(2**m)[:, None] >> np.arange(m)) & 1) * 2 - 1
    v = patterns @ live
    consistent = np.all(np.sign(v @ live.T) == patterns, axis=1)
    return normalize_rows(v[consistent])


def _im_candidates(r: np.ndarray, with_signs: bool) -> np.ndarray:
    parts = [_scatter_eigenvectors(r)[:1], _pair_candidates(r)]
    if with_signs:
        parts.append(_sign_candidates(r))
    return np.vstack([p for p in parts if p.size])


def _lipschitz(r: np.ndarray) -> float:
    """Shared Lipschitz constant of both objectives: the mean Bloch vector length."""
    return float(np.mean(np.linalg.norm(r, axis=1))) if r.size else 0.0


def _best(objective, points: np.ndarray) -> Tuple[float, np.ndarray]:
    values = objective(points)
    k = int(np.argmin(values))
    return float(values[k]), points[k] / np.linalg.norm(points[k])


def _reconcile(
    name: str,
    candidate: Tuple[float, np.ndarray],
    grid: Tuple[float, np.ndarray],
) -> Tuple[float, np.ndarray, str, float]:
    """Pick the smaller value and tag how the two searches compare."""
    s = get_settings()
    (c_val, c_p), (g_val, g_p) = candidate, grid
    diff = g_val - c_val
    if abs(diff) <= s.method_agreement:
        return c_val, c_p, BOTH_AGREE, g_val
    if diff < -s.method_disagreement:
        raise MethodDisagreementError(
            f"{name}: grid search found {g_val:.12g} below the candidate minimum {c_val:.12g}"
        )
    if diff < 0:
        return g_val, g_p, GRID_REFINE, c_val
    if diff > s.method_disagreement:
        logger.warning("%s: grid search stalled at %.9g above candidate value %.9g", name, g_val, c_val)
    return c_val, c_p, CANDIDATE_ENUMERATION, g_val


def im_r1(ms: MultiState, config: Optional[SphereSearchConfig] = None) -> QuantifierResult:
    """
    Multi-state robustness of imaginarity.

    Raises:
        DimensionMismatchError: d != 2.
        MethodDisagreementError: the grid search undercuts the exact candidates by more than the disagreement tolerance.
    """
    _require_qubits(ms)
    cfg = config or SphereSearchConfig.from_settings()
    r = bloch_coordinates(ms)
    lower, upper = im_r1_bounds(gram(ms))
    objective = _im_objective(r)

    enumerate_signs = len(ms) <= get_settings().sign_enumeration_cap
    candidates = _im_candidates(r, enumerate_signs)
    candidate = _best(objective, candidates)
    lipschitz = _lipschitz(r)
    if enumerate_signs:
        grid = minimize_on_sphere(objective, cfg, extra_starts=candidate[1][None, :], lipschitz=lipschitz)
        value, p, method, other = _reconcile("Im_R1", candidate, grid)
    else:
        grid = minimize_on_sphere(objective, cfg, extra_starts=candidates, lipschitz=lipschitz)
        value, p = min(candidate, grid, key=lambda item: item[0])
        method, other = GRID_REFINE, max(candidate[0], grid[0])
    logger.debug("Im_R1: candidates %.12g, grid %.12g, method %s", candidate[0], grid[0], method)
    return QuantifierResult(value, p / np.linalg.norm(p), lower, upper, method, other)


def c_r1(ms: MultiState, config: Optional[SphereSearchConfig] = None) -> QuantifierResult:
    """Multi-state robustness of coherence."""
    _require_qubits(ms)
    cfg = config or SphereSearchConfig.from_settings()
    r = bloch_coordinates(ms)
    lower, upper = c_r1_bounds(gram(ms))
    objective = _c_objective(r)

    starts = np.vstack([_scatter_eigenvectors(r)[-1:], normalize_rows(r)])
    candidate = _best(objective, starts)
    grid = minimize_on_sphere(objective, cfg, extra_starts=starts, lipschitz=_lipschitz(r))
    # The starts are heuristics here, so a lower grid value is expected rather than a disagreement.
    (value, p), (other, _) = sorted((candidate, grid), key=lambda item: item[0])
    if other - value <= get_settings().method_agreement:
        method = BOTH_AGREE
    else:
        method = GRID_REFINE if grid[0] < candidate[0] else CANDIDATE_ENUMERATION
    logger.debug("C_R1: candidates %.12g, grid %.12g, method %s", candidate[0], grid[0], method)
    return QuantifierResult(value, p / np.linalg.norm(p), lower, upper, method, other)


def im_r1_sdp_form(ms: MultiState, config: Optional[SphereSearchConfig] = None) -> ProgramComparison:
    """
    Compare the program over every density X with its pure-state restriction.

    For X with Bloch vector x, 2 Tr(rho_i X) - 1 = <r_i, x>, so the objective is
    positively homogeneous in x and nonnegative: the maximally mixed X reaches 0.
    The pure-state minimum is Im_R1; a positive gap means the optimum over all X
    is not attained on the sphere.
    """
    _require_qubits(ms)
    center = DensityMatrix(IDENTITY2 / 2.0)
    relaxed = float(np.mean([abs(2.0 * overlap(rho, center) - 1.0) for rho in ms]))
    pure = im_r1(ms, config).value
    gap = pure - relaxed
    attained = gap <= get_settings().method_agreement
    if not attained:
        logger.info("Relaxed program reaches %.3g at the maximally mixed state; pure minimum is %.9g", relaxed, pure)
    return ProgramComparison(relaxed, (0.0, 0.0, 0.0), pure, gap, bool(attained))


def _projections(ms: MultiState, psi: DensityMatrix) -> np.ndarray:
    _require_qubits(ms)
    if psi.dim != 2:
        raise DimensionMismatchError(f"Test state must be a qubit, got d={psi.dim}")
    if not psi.is_pure(1e-10):
        raise ValueError(f"Test state must be pure, got purity {psi.purity()!r}")
    return np.array([2.0 * overlap(rho, psi) - 1.0 for rho in ms])


def im_r1_overlap_objective(ms: MultiState, psi: DensityMatrix) -> float:
    """(1/n) sum_i |2 Tr(rho_i psi) - 1| for a pure test state psi."""
    return float(np.mean(np.abs(_projections(ms, psi))))


def c_r1_overlap_objective(ms: MultiState, psi: DensityMatrix) -> float:
    """(1/n) sum_i sqrt(2 Tr(rho_i^2) - 1 - (2 Tr(rho_i psi) - 1)^2), overlaps only."""
    projections = _projections(ms, psi)
    norms_sq = 2.0 * np.diag(pairwise_overlaps(ms)) - 1.0
    return float(np.mean(np.sqrt(np.clip(norms_sq - projections**2, 0.0, None))))
