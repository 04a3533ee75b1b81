"""
Qubit Bloch vectors: rho = (1 + r . sigma) / 2 with r_k = Tr(rho sigma_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from errors import DimensionMismatchError, OutsideBallError
from qstate.density import DensityMatrix, MultiState

QUBIT_PAULI = "qubit-pauli"
GELLMANN = "gellmann"
GELLMANN_LAMBDA = "gellmann-lambda"
BASIS_TAGS = (QUBIT_PAULI, GELLMANN, GELLMANN_LAMBDA)

IDENTITY2 = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = np.stack([PAULI_X, PAULI_Y, PAULI_Z])

BALL_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class BlochVector:
    """Real coordinates of a state in a tagged traceless Hermitian basis."""

    basis: str
    coords: np.ndarray
    dim: int = 2

    def __post_init__(self) -> None:
        if self.basis not in BASIS_TAGS:
            raise ValueError(f"Unknown basis tag: {self.basis!r}")
        c = np.array(self.coords, dtype=np.float64, copy=True).reshape(-1)
        expected = 3 if self.basis == QUBIT_PAULI else self.dim * self.dim - 1
        if self.basis == QUBIT_PAULI and self.dim != 2:
            raise DimensionMismatchError(f"qubit-pauli vectors describe d=2, got d={self.dim}")
        if c.shape[0] != expected:
            raise DimensionMismatchError(f"{self.basis} vector for d={self.dim} needs {expected} coordinates, got {c.shape[0]}")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


def _require_qubit(rho: DensityMatrix) -> None:
    if rho.dim != 2:
        raise DimensionMismatchError(f"Qubit operation needs d=2, got d={rho.dim}")


def to_bloch(rho: DensityMatrix) -> BlochVector:
    _require_qubit(rho)
    coords = np.real(np.einsum("ij,kji->k", rho.entries, PAULIS))
    return BlochVector(QUBIT_PAULI, coords)


def from_bloch(v: Union[BlochVector, Sequence[float], np.ndarray]) -> DensityMatrix:
    """
    Inverse of to_bloch.

    Raises:
        OutsideBallError: if the vector is longer than 1 + 1e-10.
    """
    if isinstance(v, BlochVector):
        if v.basis != QUBIT_PAULI:
            raise DimensionMismatchError(f"from_bloch expects a qubit-pauli vector, got {v.basis!r}")
        r = v.coords
    else:
        r = np.asarray(v, dtype=np.float64).reshape(-1)
        if r.shape[0] != 3:
            raise DimensionMismatchError(f"Bloch vector needs 3 coordinates, got {r.shape[0]}")
    length = float(np.linalg.norm(r))
    if length > 1.0 + BALL_TOLERANCE:
        raise OutsideBallError(f"Bloch vector has norm {length:.12g} > 1")
    return DensityMatrix(0.5 * (IDENTITY2 + np.einsum("k,kij->ij", r, PAULIS)))


def bloch_coordinates(ms: MultiState) -> np.ndarray:
    """Bloch vectors of a qubit multi-state as the rows of an (n, 3) array."""
    if ms.dim != 2:
        raise DimensionMismatchError(f"Qubit operation needs d=2, got d={ms.dim}")
    return np.stack([to_bloch(s).coords for s in ms])


def multistate_from_bloch(vectors: Union[np.ndarray, Sequence[Sequence[float]]]) -> MultiState:
    return MultiState(tuple(from_bloch(r) for r in np.asarray(vectors, dtype=np.float64)))
