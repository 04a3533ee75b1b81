import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest
from scipy.spatial import cKDTree

from quantifiers.sphere import (
    SphereSearchConfig,
    covering_radius,
    fibonacci_sphere,
    from_spherical,
    lattice_minima,
    minimize_on_sphere,
    normalize_rows,
    to_spherical,
)


def test_lattice_is_unit_and_balanced():
    pts = fibonacci_sphere(5000)
    assert pts.shape == (5000, 3)
    np.testing.assert_allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(pts.mean(axis=0), 0.0, atol=1e-3)


def test_lattice_needs_points():
    with pytest.raises(ValueError):
        fibonacci_sphere(0)


def test_spherical_round_trip():
    p = np.array([0.2, -0.6, 0.3])
    p /= np.linalg.norm(p)
    np.testing.assert_allclose(from_spherical(to_spherical(p)), p, atol=1e-15)


def test_normalize_rows_drops_zero_rows():
    out = normalize_rows([[3.0, 0, 4.0], [0, 0, 0]])
    np.testing.assert_allclose(out, [[0.6, 0, 0.8]])


def test_finds_smooth_minimum():
    target = np.array([1.0, 2.0, -2.0]) / 3.0
    value, p = minimize_on_sphere(lambda pts: -(pts @ target), SphereSearchConfig(grid_points=500, refine_starts=3))
    assert value == pytest.approx(-1.0, abs=1e-12)
    np.testing.assert_allclose(p, target, atol=1e-6)


def test_extra_starts_are_refined():
    target = np.array([0.0, 0.0, 1.0])
    cfg = SphereSearchConfig(grid_points=10, refine_starts=1)
    value, _ = minimize_on_sphere(lambda pts: np.linalg.norm(pts - target, axis=1), cfg, extra_starts=np.array([[0.1, 0.0, 1.0]]))
    assert value <= 1e-6


def test_config_from_settings():
    cfg = SphereSearchConfig.from_settings()
    assert cfg.grid_points >= 20000
    assert cfg.refine_starts == 20


def test_covering_radius_reaches_every_direction():
    grid = fibonacci_sphere(2000)
    directions = normalize_rows(np.random.default_rng(5).standard_normal((500, 3)))
    nearest = np.min(np.linalg.norm(directions[:, None, :] - grid[None, :, :], axis=2), axis=1)
    assert np.max(nearest) <= covering_radius(2000)


def test_lattice_minima_of_even_objective_come_in_pairs():
    target = np.array([0.0, 0.6, 0.8])
    grid = fibonacci_sphere(4000)
    _, idx = cKDTree(grid).query(grid, k=7)
    mask = lattice_minima(-np.abs(grid @ target), idx[:, 1:])
    picked = grid[mask]
    assert 2 <= picked.shape[0] <= 4
    assert np.all(np.abs(picked @ target) >= 0.99)


def test_lipschitz_pruning_keeps_global_minimum():
    # two wells, the deeper one in the southern hemisphere
    shallow, deep = np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.28, -0.96])

    def objective(pts):
        return np.minimum(np.linalg.norm(pts - shallow, axis=1) - 0.5, np.linalg.norm(pts - deep, axis=1) - 1.0)

    cfg = SphereSearchConfig(grid_points=3000, refine_starts=10)
    value, p = minimize_on_sphere(objective, cfg, extra_starts=shallow[None, :], lipschitz=1.0)
    assert value == pytest.approx(-1.0, abs=1e-7)
    np.testing.assert_allclose(p, deep, atol=1e-4)


def test_zero_objective_refines_once(caplog):
    cfg = SphereSearchConfig(grid_points=200, refine_starts=20)
    with caplog.at_level("DEBUG", logger="quantifiers.sphere"):
        value, _ = minimize_on_sphere(lambda pts: np.zeros(len(pts)), cfg, lipschitz=0.0)
    assert value == 0.0
    assert " 1 refined" in caplog.text
