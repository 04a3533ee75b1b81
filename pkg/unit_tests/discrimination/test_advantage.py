import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from discrimination.advantage import (
    advantage_ratio,
    affine_coefficients,
    best_real_reference,
    frame_to_y,
    multi_task_average,
    optimal_frame,
    search_projective_tasks,
)
from discrimination.tasks import (
    Instrument,
    Measurement,
    dephasing_vs_identity_task,
    random_instrument,
    random_measurement,
    y_task,
)
from errors import DimensionMismatchError, ZeroDenominatorError
from qstate.bloch import from_bloch, multistate_from_bloch
from qstate.density import random_state
from quantifiers.single import im_robustness_single
from quantifiers.sphere import SphereSearchConfig

FAST = SphereSearchConfig(grid_points=2000, refine_starts=1)


def test_y_task_coefficients_and_reference():
    t, m = y_task()
    c0, c = affine_coefficients(t, m)
    assert c0 == pytest.approx(0.5, abs=1e-12)
    np.testing.assert_allclose(c, [0.0, 0.5, 0.0], atol=1e-12)
    best, argmax = best_real_reference(t, m)
    assert best == pytest.approx(0.5, abs=1e-12)
    assert abs(argmax.entries[0, 1].imag) <= 1e-15


def test_sigma_y_eigenstate_doubles_success():
    t, m = y_task()
    assert advantage_ratio(from_bloch([0.0, 1.0, 0.0]), t, m) == pytest.approx(2.0, abs=1e-9)


def test_dephasing_task_reference():
    t, m = dephasing_vs_identity_task()
    best, _ = best_real_reference(t, m)
    assert best == pytest.approx(0.75, abs=1e-9)
    assert advantage_ratio(from_bloch([1.0, 0.0, 0.0]), t, m) == pytest.approx(1.0, abs=1e-9)


def test_ratio_never_beats_one_plus_im_r():
    rng = np.random.default_rng(911)
    for _ in range(200):
        t, m = random_instrument(rng=rng), random_measurement(rng=rng)
        reference = best_real_reference(t, m)
        for _ in range(200):
            rho = random_state(2, rng=rng)
            ratio = advantage_ratio(rho, t, m, reference=reference)
            assert ratio <= 1.0 + im_robustness_single(rho) + 1e-6
        real = from_bloch([0.6, 0.0, -0.8])
        assert advantage_ratio(real, t, m, reference=reference) <= 1.0 + 1e-6


def test_zero_denominator():
    p0, p1 = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
    t, m = Instrument(((p0,), (p1,))), Measurement((p1, p0))
    with pytest.raises(ZeroDenominatorError):
        advantage_ratio(from_bloch([0.0, 1.0, 0.0]), t, m)


def test_frame_to_y():
    p = np.array([0.48, -0.6, 0.64])
    np.testing.assert_allclose(frame_to_y(p).apply(p), [0.0, 1.0, 0.0], atol=1e-12)


def test_optimal_frame_for_pauli_triple():
    ms = multistate_from_bloch(np.eye(3))
    frame = optimal_frame(ms, FAST)
    assert frame.value == pytest.approx(1 / 3, abs=1e-6)
    np.testing.assert_allclose(frame.rotation.apply(frame.direction), [0.0, 1.0, 0.0], atol=1e-9)
    report = multi_task_average(ms, [y_task()] * 3, frame.unitary)
    assert report.ceiling == pytest.approx(4 / 3, abs=1e-6)
    assert report.average_ratio <= report.ceiling + 1e-9
    assert len(report.ratios) == 3


def test_multi_task_needs_one_task_per_state():
    with pytest.raises(DimensionMismatchError):
        multi_task_average(multistate_from_bloch(np.eye(3)), [y_task()])


def test_projective_search_reaches_ceiling():
    result = search_projective_tasks(from_bloch([0.3, 0.4, 0.0]))
    assert result.ceiling == pytest.approx(1.4, abs=1e-12)
    assert result.ratio == pytest.approx(1.4, abs=1e-3)
    assert result.ratio <= result.ceiling + 1e-6
    assert result.evaluated > 500


def test_qutrit_tasks_rejected():
    t = random_instrument(3, seed=2)
    m = random_measurement(3, seed=2)
    with pytest.raises(DimensionMismatchError):
        best_real_reference(t, m)
