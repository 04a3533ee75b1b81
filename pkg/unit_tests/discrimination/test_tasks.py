import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from discrimination.tasks import (
    Instrument,
    Measurement,
    depolarizing_task,
    dephasing_vs_identity_task,
    halving_task,
    identity_task,
    p_succ,
    projective_task,
    random_instrument,
    random_measurement,
    y_task,
)
from errors import (
    DimensionMismatchError,
    InvalidMeasurementError,
    LabelCountMismatchError,
    NotTracePreservingError,
)
from qstate.bloch import from_bloch
from qstate.density import random_multistate, random_state

PLUS = from_bloch([1.0, 0.0, 0.0])


@pytest.fixture
def states():
    return random_multistate(2, 20, seed=77)


def test_identity_task_always_succeeds(states):
    t, m = identity_task()
    for rho in states:
        assert p_succ(rho, t, m) == pytest.approx(1.0, abs=1e-12)


def test_halving_and_depolarizing_are_coin_flips(states):
    for t, m in (halving_task(), depolarizing_task()):
        for rho in states:
            assert p_succ(rho, t, m) == pytest.approx(0.5, abs=1e-12)


def test_dephasing_versus_identity_on_plus():
    t, m = dephasing_vs_identity_task()
    assert p_succ(PLUS, t, m) == pytest.approx(0.75, abs=1e-12)


def test_y_task_tracks_r_y(states):
    t, m = y_task()
    for rho in states:
        r_y = float(np.real(np.trace(rho.entries @ np.array([[0, -1j], [1j, 0]]))))
        assert p_succ(rho, t, m) == pytest.approx((1.0 + r_y) / 2.0, abs=1e-12)


def test_projective_task_needs_direction():
    with pytest.raises(ValueError, match="nonzero"):
        projective_task([0.0, 0.0, 0.0])


def test_random_tasks_are_valid():
    rng = np.random.default_rng(5)
    for _ in range(50):
        t = random_instrument(rng=rng, labels=3)
        m = random_measurement(outcomes=3, rng=rng)
        p = p_succ(random_state(2, rng=rng), t, m)
        assert 0.0 <= p <= 1.0
    assert random_instrument(3, seed=1).dim == 3


class TestValidation:
    def test_instrument_must_be_trace_preserving(self):
        with pytest.raises(NotTracePreservingError):
            Instrument(((0.5 * np.eye(2),),))

    def test_instrument_needs_maps(self):
        with pytest.raises(LabelCountMismatchError):
            Instrument(())

    def test_instrument_dimensions_agree(self):
        with pytest.raises(DimensionMismatchError):
            Instrument(((np.eye(2) / np.sqrt(2),), (np.eye(3) / np.sqrt(2),)))

    @pytest.mark.parametrize(
        "effects",
        [
            (0.5 * np.eye(2),),
            (np.array([[0.5, 0.1], [0.0, 0.5]]), np.array([[0.5, -0.1], [0.0, 0.5]])),
            (np.diag([1.5, -0.5]), np.diag([-0.5, 1.5])),
        ],
        ids=["incomplete", "non-hermitian", "negative"],
    )
    def test_bad_measurements(self, effects):
        with pytest.raises(InvalidMeasurementError):
            Measurement(effects)

    def test_label_counts_must_match(self):
        t, _ = identity_task()
        _, m = halving_task()
        with pytest.raises(LabelCountMismatchError):
            p_succ(PLUS, t, m)

    def test_dimensions_must_match(self):
        t, m = identity_task()
        with pytest.raises(DimensionMismatchError):
            p_succ(random_state(3, seed=4), t, m)


def test_to_dict_encodes_complex_pairs():
    t, m = identity_task()
    assert t.to_dict()["maps"][0][0][0] == [[1.0, 0.0], [0.0, 0.0]]
    assert m.to_dict()["effects"][0][1][1] == [1.0, 0.0]
