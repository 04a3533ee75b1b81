"""
Single-qubit robustness closed forms.

Im_R(rho) = |r_y| = 1/2 ||rho - rho^T||_1 and C_R(rho) = sqrt(r_x^2 + r_y^2).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import linalg as sla

from errors import DimensionMismatchError, InternalDisagreementError
from qstate.bloch import to_bloch
from qstate.density import DensityMatrix

CROSS_CHECK_TOLERANCE = 1e-10


def _require_qubit(rho: DensityMatrix) -> None:
    if rho.dim != 2:
        raise DimensionMismatchError(f"Single-state robustness closed forms need d=2, got d={rho.dim}")


def transpose_distance(rho: DensityMatrix) -> float:
    """1/2 ||rho - rho^T||_1."""
    return 0.5 * float(np.sum(sla.svdvals(rho.entries - rho.entries.T)))


def im_robustness_single(rho: DensityMatrix) -> float:
    _require_qubit(rho)
    value = abs(float(to_bloch(rho).coords[1]))
    check = transpose_distance(rho)
    if abs(value - check) > CROSS_CHECK_TOLERANCE:
        raise InternalDisagreementError(f"|r_y| = {value:.12g} but 1/2||rho - rho^T||_1 = {check:.12g}")
    return value


def coh_robustness_single(rho: DensityMatrix) -> float:
    _require_qubit(rho)
    r = to_bloch(rho).coords
    return math.hypot(float(r[0]), float(r[1]))
