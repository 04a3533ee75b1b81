"""
Advantage of a state over every real state in a discrimination task.

p_succ is affine in the Bloch vector, p(r) = c_0 + <c, r>, so its maximum over
the real disc {r_y = 0, r_x^2 + r_z^2 <= 1} sits on the boundary circle, at
value c_0 + sqrt(c_x^2 + c_z^2). The search runs an angle grid plus a bounded
refinement and checks the result against that closed form.

Writing rho = (1 + s) sigma - s tau with s = Im_R(rho) and sigma real gives
p(rho) <= (1 + s) max_real p, so every ratio is at most 1 + Im_R(rho).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from discrimination.tasks import Instrument, Measurement, p_succ, projective_task
from errors import DimensionMismatchError, InternalDisagreementError, ZeroDenominatorError
from qstate.bloch import IDENTITY2, from_bloch, to_bloch
from qstate.density import DensityMatrix, MultiState
from qstate.rotations import Rotation3, so3_to_su2
from quantifiers.robustness import im_r1
from quantifiers.single import im_robustness_single
from quantifiers.sphere import SphereSearchConfig, fibonacci_sphere, from_spherical, to_spherical
from settings import get_settings

logger = logging.getLogger(__name__)

SOUNDNESS_SLACK = 1e-6
CLOSED_FORM_TOLERANCE = 1e-9
ZERO_DENOMINATOR = 1e-12

Reference = Tuple[float, DensityMatrix]


def _require_qubit(d: int) -> None:
    if d != 2:
        raise DimensionMismatchError(f"Real-reference search is implemented for qubits, got d={d}")


def _circle_state(theta: float) -> DensityMatrix:
    return from_bloch([math.sin(theta), 0.0, math.cos(theta)])


def affine_coefficients(t: Instrument, m: Measurement) -> Tuple[float, np.ndarray]:
    """(c_0, c) with p_succ(rho(r)) = c_0 + <c, r>."""
    _require_qubit(t.dim)
    c0 = p_succ(DensityMatrix(IDENTITY2 / 2.0), t, m)
    c = np.array([p_succ(from_bloch(e), t, m) - c0 for e in np.eye(3)])
    return c0, c


def best_real_reference(t: Instrument, m: Measurement, grid: Optional[int] = None) -> Reference:
    """
    Maximum of p_succ over real qubit states, and a maximizer.

    Raises:
        DimensionMismatchError: the task is not a qubit task.
    """
    _require_qubit(t.dim)
    count = grid or get_settings().real_reference_grid
    c0, c = affine_coefficients(t, m)
    thetas = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    values = c0 + c[0] * np.sin(thetas) + c[2] * np.cos(thetas)
    k = int(np.argmax(values))
    step = 2.0 * np.pi / count
    refined = minimize_scalar(
        lambda x: -p_succ(_circle_state(x), t, m),
        bounds=(thetas[k] - step, thetas[k] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    theta = float(refined.x) if -refined.fun >= values[k] else float(thetas[k])
    argmax = _circle_state(theta)
    value = p_succ(argmax, t, m)
    closed = c0 + math.hypot(float(c[0]), float(c[2]))
    if abs(value - closed) > CLOSED_FORM_TOLERANCE:
        raise InternalDisagreementError(f"Real-reference search reached {value:.12g}, closed form gives {closed:.12g}")
    return value, argmax


def advantage_ratio(
    rho: DensityMatrix,
    t: Instrument,
    m: Measurement,
    reference: Optional[Reference] = None,
) -> float:
    """
    p_succ(rho) / max over real sigma of p_succ(sigma).

    Args:
        reference: a precomputed ``best_real_reference(t, m)`` to reuse across states.

    Raises:
        ZeroDenominatorError: no real state succeeds with positive probability.
    """
    _require_qubit(rho.dim)
    best, _ = reference if reference is not None else best_real_reference(t, m)
    if best < ZERO_DENOMINATOR:
        raise ZeroDenominatorError(f"Best real success probability {best:.3e} is zero")
    ratio = p_succ(rho, t, m) / best
    ceiling = 1.0 + im_robustness_single(rho)
    if ratio > ceiling + SOUNDNESS_SLACK:
        raise InternalDisagreementError(f"Advantage ratio {ratio:.12g} exceeds 1 + Im_R = {ceiling:.12g}")
    return float(ratio)


@dataclass(frozen=True, eq=False)
class OptimalFrame:
    """Common rotation that brings the Im_R1 minimizer onto the y axis."""

    unitary: np.ndarray
    rotation: Rotation3
    direction: np.ndarray
    value: float


def frame_to_y(p: Sequence[float]) -> Rotation3:
    """Rotation R with R p = e_y."""
    p = np.asarray(p, dtype=np.float64)
    p = p / np.linalg.norm(p)
    helper = np.eye(3)[int(np.argmin(np.abs(p)))]
    u1 = np.cross(p, helper)
    u1 /= np.linalg.norm(u1)
    return Rotation3(np.vstack([u1, p, np.cross(u1, p)]))


def optimal_frame(ms: MultiState, config: Optional[SphereSearchConfig] = None) -> OptimalFrame:
    result = im_r1(ms, config)
    rotation = frame_to_y(result.argmin_direction)
    unitary = so3_to_su2(rotation)
    achieved = float(np.mean([im_robustness_single(s) for s in ms.rotated(unitary)]))
    if abs(achieved - result.value) > CLOSED_FORM_TOLERANCE:
        raise InternalDisagreementError(f"Frame gives mean Im_R {achieved:.12g}, expected {result.value:.12g}")
    return OptimalFrame(unitary, rotation, result.argmin_direction, result.value)


@dataclass(frozen=True)
class MultiTaskReport:
    average_ratio: float
    ceiling: float
    ratios: Tuple[float, ...]


def multi_task_average(
    ms: MultiState,
    tasks: Sequence[Tuple[Instrument, Measurement]],
    frame: Optional[np.ndarray] = None,
) -> MultiTaskReport:
    """
    Average advantage ratio when state i plays task i, all states rotated by ``frame``.

    The ceiling is 1 + the mean Im_R of the rotated states; in the optimal
    frame it equals 1 + Im_R1.
    """
    if len(tasks) != len(ms):
        raise DimensionMismatchError(f"Got {len(tasks)} tasks for {len(ms)} states")
    states = ms.rotated(frame) if frame is not None else ms
    ratios: List[float] = [advantage_ratio(s, t, m) for s, (t, m) in zip(states, tasks)]
    ceiling = 1.0 + float(np.mean([im_robustness_single(s) for s in states]))
    average = float(np.mean(ratios))
    if average > ceiling + SOUNDNESS_SLACK:
        raise InternalDisagreementError(f"Average ratio {average:.12g} exceeds ceiling {ceiling:.12g}")
    return MultiTaskReport(average, ceiling, tuple(ratios))


@dataclass(frozen=True, eq=False)
class TaskSearchResult:
    ratio: float
    direction: np.ndarray
    ceiling: float
    evaluated: int


def _projective_ratio(rho: DensityMatrix, direction: np.ndarray) -> float:
    t, m = projective_task(direction)
    return advantage_ratio(rho, t, m)


def search_projective_tasks(rho: DensityMatrix, directions: int = 500) -> TaskSearchResult:
    """
    Best advantage over projective tasks (projectors onto +-n, branch 0 rewarded).

    Lattice directions are scanned and the best one is polished with
    Nelder-Mead. The ratio is reported with its ceiling 1 + Im_R(rho).
    """
    _require_qubit(rho.dim)
    lattice = fibonacci_sphere(directions)
    ratios = np.array([_projective_ratio(rho, n) for n in lattice])
    k = int(np.argmax(ratios))
    polished = minimize(
        lambda angles: -_projective_ratio(rho, from_spherical(angles)),
        to_spherical(lattice[k]),
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-12},
    )
    if -polished.fun > ratios[k]:
        ratio, direction = float(-polished.fun), from_spherical(polished.x)
    else:
        ratio, direction = float(ratios[k]), lattice[k]
    ceiling = 1.0 + im_robustness_single(rho)
    logger.debug("projective search: ratio %.9g of ceiling %.9g (r = %s)", ratio, ceiling, to_bloch(rho).coords)
    return TaskSearchResult(ratio, direction / np.linalg.norm(direction), ceiling, directions + int(polished.nfev))
