import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import NotRotationError, NotSpecialUnitaryError
from qstate.bloch import to_bloch
from qstate.density import random_state, random_unitary
from qstate.rotations import (
    Rotation3,
    check_special_unitary,
    random_rotation,
    rotation_about,
    so3_to_su2,
    su2_to_so3,
    to_special_unitary,
)

seeds = st.integers(min_value=0, max_value=2**31 - 1)


def _su2(seed: int) -> np.ndarray:
    return random_unitary(2, seed=seed, special=True)


@settings(max_examples=100, deadline=None)
@given(seeds, seeds)
def test_homomorphism(s1, s2):
    u, v = _su2(s1), _su2(s2)
    lhs = su2_to_so3(u @ v).entries
    rhs = (su2_to_so3(u) @ su2_to_so3(v)).entries
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_rotation_acts_on_bloch_vectors(seed):
    u = _su2(seed)
    rho = random_state(2, seed=seed + 1)
    rotated = to_bloch(rho.rotated(u)).coords
    np.testing.assert_allclose(rotated, su2_to_so3(u).apply(to_bloch(rho).coords), atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_lift_is_a_preimage(seed):
    r = random_rotation(np.random.default_rng(seed))
    u = so3_to_su2(r)
    np.testing.assert_allclose(su2_to_so3(u).entries, r.entries, atol=1e-12)
    np.testing.assert_allclose(su2_to_so3(-u).entries, r.entries, atol=1e-12)


def test_rotation_about_z():
    r = rotation_about([0, 0, 2], np.pi / 2)
    np.testing.assert_allclose(r.apply([1, 0, 0]), [0, 1, 0], atol=1e-15)


def test_z_phase_unitary_matches_rotation_about_z():
    theta = 0.7
    u = np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])
    np.testing.assert_allclose(su2_to_so3(u).entries, rotation_about([0, 0, 1], theta).entries, atol=1e-12)


def test_lift_of_identity_is_identity():
    np.testing.assert_allclose(so3_to_su2(np.eye(3)), np.eye(2), atol=1e-15)


def test_inverse_and_composition():
    r = rotation_about([1, 1, 0], 1.1)
    np.testing.assert_allclose((r @ r.inverse()).entries, np.eye(3), atol=1e-12)


def test_not_rotation():
    with pytest.raises(NotRotationError, match="determinant"):
        Rotation3(np.diag([1.0, 1.0, -1.0]))
    with pytest.raises(NotRotationError, match="orthogonal"):
        Rotation3(2 * np.eye(3))


def test_not_special_unitary():
    with pytest.raises(NotSpecialUnitaryError, match="determinant"):
        check_special_unitary(np.diag([1.0, -1.0]))
    with pytest.raises(NotSpecialUnitaryError, match="unitary"):
        su2_to_so3(2 * np.eye(2))


def test_to_special_unitary_fixes_phase():
    u = to_special_unitary(1j * random_unitary(2, seed=3))
    assert abs(np.linalg.det(u) - 1.0) < 1e-12
