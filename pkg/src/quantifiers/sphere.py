"""
Deterministic global minimization over the unit sphere.

A Fibonacci lattice seeds the search. Lattice points that are no worse than
their nearest neighbours (discrete local minima), plus any caller-supplied
candidates, are polished with Nelder-Mead in spherical coordinates, lowest
first. With a Lipschitz constant L for the objective, a start whose value
exceeds the best value found by more than L times the lattice covering radius
cannot lead to a better minimum and is skipped. Lattice and start order are
fixed, so results are reproducible.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import cKDTree

from settings import get_settings

logger = logging.getLogger(__name__)

BatchObjective = Callable[[np.ndarray], np.ndarray]

GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))
LATTICE_NEIGHBOURS = 6


@dataclass(frozen=True)
class SphereSearchConfig:
    grid_points: int = 20000
    refine_starts: int = 20
    xatol: float = 1e-10
    fatol: float = 1e-14
    max_iter: int = 2000

    @classmethod
    def from_settings(cls) -> "SphereSearchConfig":
        s = get_settings()
        return cls(grid_points=s.sphere_grid_points, refine_starts=s.refine_starts, xatol=s.refine_xatol)


def fibonacci_sphere(count: int) -> np.ndarray:
    """``count`` near-uniform unit vectors, shape (count, 3)."""
    if count < 1:
        raise ValueError(f"Need at least one lattice point, got {count!r}")
    k = np.arange(count, dtype=np.float64)
    z = 1.0 - 2.0 * (k + 0.5) / count
    radius = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    theta = GOLDEN_ANGLE * k
    return np.column_stack([radius * np.cos(theta), radius * np.sin(theta), z])


def covering_radius(count: int) -> float:
    """Upper estimate of the largest distance from a unit vector to the nearest lattice point."""
    return 2.0 * math.sqrt(4.0 * math.pi / count)


@lru_cache(maxsize=4)
def _lattice(count: int) -> Tuple[np.ndarray, np.ndarray]:
    grid = fibonacci_sphere(count)
    k = min(LATTICE_NEIGHBOURS + 1, count)
    _, idx = cKDTree(grid).query(grid, k=k)
    neighbours = np.asarray(idx).reshape(count, k)[:, 1:]
    grid.setflags(write=False)
    neighbours.setflags(write=False)
    return grid, neighbours


def lattice_minima(values: np.ndarray, neighbours: np.ndarray) -> np.ndarray:
    """Boolean mask of points whose value is <= every neighbour's value."""
    return np.all(values[:, None] <= values[neighbours], axis=1)


def to_spherical(p: np.ndarray) -> np.ndarray:
    x, y, z = p
    return np.array([np.arccos(np.clip(z, -1.0, 1.0)), np.arctan2(y, x)])


def from_spherical(angles: np.ndarray) -> np.ndarray:
    theta, phi = angles
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def normalize_rows(vectors: np.ndarray) -> np.ndarray:
    v = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
    norms = np.linalg.norm(v, axis=1)
    keep = norms > 1e-12
    return v[keep] / norms[keep, None]


def refine(objective: BatchObjective, start: np.ndarray, config: SphereSearchConfig) -> Tuple[float, np.ndarray]:
    def f(angles: np.ndarray) -> float:
        return float(objective(from_spherical(angles)[None, :])[0])

    result = minimize(
        f,
        to_spherical(start),
        method="Nelder-Mead",
        options={"xatol": config.xatol, "fatol": config.fatol, "maxiter": config.max_iter},
    )
    p = from_spherical(result.x)
    p = p / np.linalg.norm(p)
    return float(objective(p[None, :])[0]), p


def minimize_on_sphere(
    objective: BatchObjective,
    config: SphereSearchConfig,
    *,
    extra_starts: Optional[np.ndarray] = None,
    lipschitz: Optional[float] = None,
) -> Tuple[float, np.ndarray]:
    """
    Lattice search followed by local refinement.

    Args:
        objective: maps an (m, 3) array of unit vectors to (m,) values.
        config: lattice size and refinement settings.
        extra_starts: additional starting directions, refined alongside the
            lattice minima in order of value.
        lipschitz: Lipschitz constant of the objective in the chord distance;
            enables skipping starts that cannot improve on the best value.

    Returns:
        (minimum value, unit minimizer)
    """
    grid, neighbours = _lattice(config.grid_points)
    values = objective(grid)
    minima = np.flatnonzero(lattice_minima(values, neighbours))
    minima = minima[np.argsort(values[minima], kind="stable")][: max(config.refine_starts, 1)]
    starts, start_values = grid[minima], values[minima]
    if extra_starts is not None and len(extra_starts):
        extra = normalize_rows(extra_starts)
        starts = np.vstack([extra, starts])
        start_values = np.concatenate([objective(extra), start_values])

    order = np.argsort(start_values, kind="stable")
    slack = math.inf if lipschitz is None else float(lipschitz) * covering_radius(config.grid_points)
    best_value = float(start_values[order[0]])
    best_p = starts[order[0]].copy()
    refined = 0
    for k in order:
        if refined and start_values[k] - slack >= best_value:
            break
        value, p = refine(objective, starts[k], config)
        refined += 1
        if value < best_value:
            best_value, best_p = value, p
    logger.debug(
        "sphere search: %d lattice minima, %d refined, lattice min %.3e, refined min %.3e",
        minima.size,
        refined,
        float(values.min()),
        best_value,
    )
    return best_value, best_p
