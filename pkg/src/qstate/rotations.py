"""
SU(2) <-> SO(3).

For U = [[alpha, beta], [-conj(beta), conj(alpha)]] with alpha = a + ib and
beta = c + id, the Bloch vector of U rho U^dagger is Phi_U r where Phi_U is the
quaternion rotation matrix built below. The map is two-to-one: U and -U give
the same rotation. The inverse picks the preimage with a >= 0 (ties broken by
the first nonzero of b, c, d being positive).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from scipy.spatial.transform import Rotation

from errors import DimensionMismatchError, NotRotationError, NotSpecialUnitaryError

GROUP_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class Rotation3:
    """A 3×3 real orthogonal matrix with determinant +1."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        r = np.array(self.entries, dtype=np.float64, copy=True)
        if r.shape != (3, 3):
            raise NotRotationError(f"Rotation needs shape (3, 3), got {r.shape!r}")
        orth = float(np.max(np.abs(r.T @ r - np.eye(3))))
        if orth > GROUP_TOLERANCE:
            raise NotRotationError(f"Matrix is not orthogonal: max |R^T R - 1| = {orth:.3e}")
        det = float(np.linalg.det(r))
        if abs(det - 1.0) > GROUP_TOLERANCE:
            raise NotRotationError(f"Rotation must have determinant +1, got {det:.12g}")
        r.setflags(write=False)
        object.__setattr__(self, "entries", r)

    def apply(self, v: Union[np.ndarray, Sequence[float]]) -> np.ndarray:
        return self.entries @ np.asarray(v, dtype=np.float64)

    def __matmul__(self, other: "Rotation3") -> "Rotation3":
        return Rotation3(self.entries @ other.entries)

    def inverse(self) -> "Rotation3":
        return Rotation3(self.entries.T)


def rotation_about(axis: Union[np.ndarray, Sequence[float]], angle: float) -> Rotation3:
    """Right-handed rotation by ``angle`` radians about ``axis``."""
    n = np.asarray(axis, dtype=np.float64)
    norm = float(np.linalg.norm(n))
    if norm == 0.0:
        raise ValueError("Rotation axis must be nonzero")
    return Rotation3(Rotation.from_rotvec(float(angle) * n / norm).as_matrix())


def random_rotation(rng: np.random.Generator) -> Rotation3:
    return Rotation3(Rotation.random(random_state=rng).as_matrix())


def check_special_unitary(u: np.ndarray) -> np.ndarray:
    m = np.asarray(u, dtype=np.complex128)
    if m.shape != (2, 2):
        raise DimensionMismatchError(f"Expected a 2x2 matrix, got shape {m.shape!r}")
    unit = float(np.max(np.abs(m @ m.conj().T - np.eye(2))))
    if unit > GROUP_TOLERANCE:
        raise NotSpecialUnitaryError(f"Matrix is not unitary: max |U U^dagger - 1| = {unit:.3e}")
    det = complex(np.linalg.det(m))
    if abs(det - 1.0) > GROUP_TOLERANCE:
        raise NotSpecialUnitaryError(f"Unitary must have determinant 1, got {det:.12g}")
    return m


def to_special_unitary(u: np.ndarray) -> np.ndarray:
    """Rescale a 2×2 unitary by a global phase so that det = 1."""
    m = np.asarray(u, dtype=np.complex128)
    return m / np.sqrt(np.linalg.det(m))


def su2_to_so3(u: np.ndarray) -> Rotation3:
    m = check_special_unitary(u)
    alpha, beta = m[0, 0], m[0, 1]
    a, b = float(alpha.real), float(alpha.imag)
    c, d = float(beta.real), float(beta.imag)
    phi = np.array(
        [
            [a * a - b * b - c * c + d * d, 2 * (a * b + c * d), 2 * (b * d - a * c)],
            [2 * (c * d - a * b), a * a - b * b + c * c - d * d, 2 * (b * c + a * d)],
            [2 * (b * d + a * c), 2 * (b * c - a * d), a * a + b * b - c * c - d * d],
        ]
    )
    return Rotation3(phi)


def _canonical_sign(q: np.ndarray) -> np.ndarray:
    for x in q:
        if abs(x) > 1e-12:
            return q if x > 0 else -q
    return q


def so3_to_su2(r: Union[Rotation3, np.ndarray]) -> np.ndarray:
    """
    Lift a rotation to the SU(2) preimage with a >= 0.

    The other preimage is the negation of the result.
    """
    rot = r if isinstance(r, Rotation3) else Rotation3(np.asarray(r, dtype=np.float64))
    m = rot.entries
    # 4a^2, 4b^2, 4c^2, 4d^2 read off the diagonal; pick the largest for stability.
    squares = np.array(
        [
            1.0 + m[0, 0] + m[1, 1] + m[2, 2],
            1.0 - m[0, 0] - m[1, 1] + m[2, 2],
            1.0 - m[0, 0] + m[1, 1] - m[2, 2],
            1.0 + m[0, 0] - m[1, 1] - m[2, 2],
        ]
    )
    k = int(np.argmax(squares))
    pivot = 0.5 * np.sqrt(max(squares[k], 0.0))
    q = np.zeros(4)
    if k == 0:
        q[0] = pivot
        q[1] = (m[0, 1] - m[1, 0]) / (4 * pivot)
        q[2] = (m[2, 0] - m[0, 2]) / (4 * pivot)
        q[3] = (m[1, 2] - m[2, 1]) / (4 * pivot)
    elif k == 1:
        q[1] = pivot
        q[0] = (m[0, 1] - m[1, 0]) / (4 * pivot)
        q[2] = (m[1, 2] + m[2, 1]) / (4 * pivot)
        q[3] = (m[0, 2] + m[2, 0]) / (4 * pivot)
    elif k == 2:
        q[2] = pivot
        q[0] = (m[2, 0] - m[0, 2]) / (4 * pivot)
        q[1] = (m[1, 2] + m[2, 1]) / (4 * pivot)
        q[3] = (m[0, 1] + m[1, 0]) / (4 * pivot)
    else:
        q[3] = pivot
        q[0] = (m[1, 2] - m[2, 1]) / (4 * pivot)
        q[1] = (m[0, 2] + m[2, 0]) / (4 * pivot)
        q[2] = (m[0, 1] + m[1, 0]) / (4 * pivot)
    q = _canonical_sign(q / np.linalg.norm(q))
    a, b, c, d = q
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]], dtype=np.complex128)
