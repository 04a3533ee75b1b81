import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import DimensionMismatchError, OutsideBallError
from qstate.bloch import (
    QUBIT_PAULI,
    BlochVector,
    bloch_coordinates,
    from_bloch,
    multistate_from_bloch,
    to_bloch,
)
from qstate.density import random_multistate, validate

coordinate = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(coordinate, coordinate, coordinate)
def test_round_trip_inside_ball(x, y, z):
    r = np.array([x, y, z])
    norm = np.linalg.norm(r)
    if norm > 1.0:
        r = r / norm
    back = to_bloch(from_bloch(r)).coords
    np.testing.assert_allclose(back, r, atol=1e-12)


def test_axes():
    np.testing.assert_allclose(to_bloch(validate(np.full((2, 2), 0.5))).coords, [1, 0, 0], atol=1e-15)
    plus_y = 0.5 * np.array([[1, -1j], [1j, 1]])
    np.testing.assert_allclose(to_bloch(validate(plus_y)).coords, [0, 1, 0], atol=1e-15)


def test_outside_ball():
    with pytest.raises(OutsideBallError, match="norm"):
        from_bloch([0.8, 0.8, 0.0])


def test_boundary_tolerance_accepts_unit_vector_rounding():
    r = np.array([1.0, 1.0, 1.0]) / np.sqrt(3.0)
    assert from_bloch(r * (1 + 1e-11)).dim == 2


def test_qutrit_rejected():
    with pytest.raises(DimensionMismatchError):
        to_bloch(validate(np.eye(3) / 3))


def test_vector_validation():
    with pytest.raises(ValueError, match="basis tag"):
        BlochVector("spin", [0, 0, 1])
    with pytest.raises(DimensionMismatchError):
        BlochVector(QUBIT_PAULI, [0, 1])


def test_coordinates_matrix():
    ms = random_multistate(2, 5, seed=8)
    coords = bloch_coordinates(ms)
    assert coords.shape == (5, 3)
    rebuilt = multistate_from_bloch(coords)
    np.testing.assert_allclose(rebuilt.matrices(), ms.matrices(), atol=1e-12)
