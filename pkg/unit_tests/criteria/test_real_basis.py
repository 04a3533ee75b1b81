import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from criteria.qubit_tests import qubit_imaginarity_test
from criteria.real_basis import construct_real_basis, imaginary_residual, residual_bound
from errors import HasImaginarityError
from qstate.bloch import multistate_from_bloch
from qstate.density import MultiState, validate
from qstate.rotations import rotation_about, so3_to_su2


def test_xz_plane_needs_no_rotation_to_be_real():
    ms = multistate_from_bloch([[1, 0, 0], [0, 0, 1], [0.6, 0, -0.8]])
    assert imaginary_residual(np.eye(2), ms) == 0.0
    cert = construct_real_basis(ms)
    assert cert.residual <= 1e-9


def test_xy_plane_is_rotated_real():
    ms = multistate_from_bloch([[1, 0, 0], [0, 1, 0], [0.5, -0.5, 0]])
    assert imaginary_residual(np.eye(2), ms) > 0.4
    cert = construct_real_basis(ms)
    assert cert.residual <= 1e-9
    assert np.max(np.abs(cert.apply(ms).matrices().imag)) <= 1e-9


def test_maximally_mixed_states():
    ms = MultiState((validate(np.eye(2) / 2), validate(np.eye(2) / 2)))
    cert = construct_real_basis(ms)
    np.testing.assert_allclose(cert.unitary, np.eye(2))


def test_unitary_is_special():
    cert = construct_real_basis(multistate_from_bloch([[0, 1, 0], [0, 0.3, 0.4]]))
    assert abs(np.linalg.det(cert.unitary) - 1.0) <= 1e-12


def test_imaginarity_has_no_certificate():
    with pytest.raises(HasImaginarityError, match="no real basis"):
        construct_real_basis(multistate_from_bloch(np.eye(3)))


def test_near_coplanar_residual_stays_within_rank_resolution():
    ms = multistate_from_bloch([[1, 0, 0], [0, 0, 1], [0.5, 1e-5, 0.5]])
    cert = construct_real_basis(ms)
    assert not cert.exact
    assert 1e-9 < cert.residual <= cert.bound
    assert cert.bound == pytest.approx(residual_bound(qubit_imaginarity_test(ms).threshold))


def test_residual_bound_floor():
    assert residual_bound(0.0) == 1e-9
    assert residual_bound(4e-8) == pytest.approx(1e-4, rel=1e-5)


@pytest.mark.parametrize("angle", [0.3, 1.7, -2.9])
def test_certificate_survives_rotation_about_y(angle):
    rng = np.random.default_rng(int(abs(angle) * 10))
    normal = rng.standard_normal(3)
    v = rng.uniform(-0.5, 0.5, size=(4, 3))
    v -= np.outer(v @ normal, normal) / (normal @ normal)
    ms = multistate_from_bloch(v)
    cert = construct_real_basis(ms)
    spin = so3_to_su2(rotation_about([0.0, 1.0, 0.0], angle))
    assert imaginary_residual(spin @ cert.unitary, ms) <= 1e-9
