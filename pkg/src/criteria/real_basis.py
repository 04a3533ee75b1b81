"""
Constructive real basis for imaginarity-free qubit multi-states.

Take an orthonormal frame {s, u, t} whose s, t span the Bloch vectors
(left singular vectors of the n×3 coordinate matrix) and u = t x s, so the
frame is right-handed. R = e1 s^T + e2 u^T + e3 t^T sends every Bloch vector
into the X-Z plane, and its SU(2) lift makes every state real.

A set the rank test calls coplanar may still stick out of the plane by up to
the third singular value of the coordinate matrix, sqrt(sigma_3) of the Gram
matrix. The imaginary entries of a rotated state are r_y / 2, so the residual
is bounded by sqrt(rank tolerance) / 2 rather than by machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from criteria.qubit_tests import qubit_imaginarity_test
from errors import HasImaginarityError, InternalDisagreementError
from qstate.bloch import bloch_coordinates
from qstate.density import MultiState
from qstate.rotations import Rotation3, so3_to_su2

CERTIFICATE_TOLERANCE = 1e-9


def imaginary_residual(unitary: np.ndarray, ms: MultiState) -> float:
    """Largest |Im| entry of U rho U^dagger over the multi-state."""
    u = np.asarray(unitary, dtype=np.complex128)
    mats = ms.matrices()
    rotated = np.einsum("ij,njk,lk->nil", u, mats, u.conj())
    return float(np.max(np.abs(rotated.imag)))


def residual_bound(rank_tolerance: float) -> float:
    """Largest residual consistent with a Gram singular value at the rank tolerance."""
    return max(CERTIFICATE_TOLERANCE, 0.5 * math.sqrt(max(rank_tolerance, 0.0)) * (1.0 + 1e-6))


@dataclass(frozen=True, eq=False)
class RealBasisCertificate:
    unitary: np.ndarray
    residual: float
    rotation: Rotation3
    bound: float = CERTIFICATE_TOLERANCE

    def apply(self, ms: MultiState) -> MultiState:
        return ms.rotated(self.unitary)

    @property
    def exact(self) -> bool:
        """True when the rotated states are real to machine precision."""
        return self.residual <= CERTIFICATE_TOLERANCE


def construct_real_basis(ms: MultiState, tol: Optional[float] = None) -> RealBasisCertificate:
    """
    Raises:
        HasImaginarityError: the multi-state is not imaginarity-free.
        InternalDisagreementError: the residual exceeds ``residual_bound`` of the rank tolerance.
    """
    verdict = qubit_imaginarity_test(ms, tol)
    if verdict.has_resource:
        raise HasImaginarityError(
            f"Bloch vectors span 3 dimensions (sigma_3 = {verdict.evidence:.3e}); no real basis exists"
        )
    bound = residual_bound(verdict.threshold)
    coords = bloch_coordinates(ms)
    if np.allclose(coords, 0.0, atol=1e-15):
        eye = np.eye(2, dtype=np.complex128)
        return RealBasisCertificate(eye, imaginary_residual(eye, ms), Rotation3(np.eye(3)), bound)

    frame, _, _ = np.linalg.svd(coords.T)
    s, t = frame[:, 0], frame[:, 1]
    u = np.cross(t, s)
    rotation = Rotation3(np.vstack([s, u, t]))
    unitary = so3_to_su2(rotation)
    residual = imaginary_residual(unitary, ms)
    if residual > bound:
        raise InternalDisagreementError(f"Real-basis certificate residual {residual:.3e} exceeds {bound:.3e}")
    return RealBasisCertificate(unitary, residual, rotation, bound)
