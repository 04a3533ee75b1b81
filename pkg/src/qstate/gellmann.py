"""
Generalized Gell-Mann bases and generalized Bloch vectors.

Slot order for the ``gellmann`` tag (any d): symmetric pairs (j<k,
lexicographic), then antisymmetric pairs in the same order, then the d-1
diagonal matrices. Operators are scaled so that Tr(U_i U_j) = d delta_ij and
rho = (1/d)(1 + sum_j r_j U_j) with r_j = Tr(rho U_j).

The ``gellmann-lambda`` tag is only defined for d = 3: the conventional
lambda_1..lambda_8 in their usual order, Tr(lambda_i lambda_j) = 2 delta_ij, and
rho = (1/3)(1 + sum_j r_j lambda_j), so r_j = (3/2) Tr(rho lambda_j).
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

import numpy as np

from errors import DimensionMismatchError
from qstate.bloch import GELLMANN, GELLMANN_LAMBDA, QUBIT_PAULI, BlochVector
from qstate.density import DensityMatrix


def _symmetric(j: int, k: int, d: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=np.complex128)
    m[j, k] = m[k, j] = 1.0
    return m


def _antisymmetric(j: int, k: int, d: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=np.complex128)
    m[j, k] = -1j
    m[k, j] = 1j
    return m


def _diagonal(level: int, d: int) -> np.ndarray:
    # level in 1..d-1: sqrt(2/(l(l+1))) diag(1, ..., 1, -l, 0, ..., 0)
    diag = np.zeros(d, dtype=np.complex128)
    diag[:level] = 1.0
    diag[level] = -level
    return np.sqrt(2.0 / (level * (level + 1))) * np.diag(diag)


def _pairs(d: int) -> List[Tuple[int, int]]:
    return [(j, k) for j in range(d) for k in range(j + 1, d)]


@lru_cache(maxsize=16)
def _generalized_gellmann(d: int) -> np.ndarray:
    pairs = _pairs(d)
    ops = [_symmetric(j, k, d) for j, k in pairs]
    ops += [_antisymmetric(j, k, d) for j, k in pairs]
    ops += [_diagonal(level, d) for level in range(1, d)]
    out = np.stack(ops)
    out.setflags(write=False)
    return out


def generalized_gellmann(d: int) -> np.ndarray:
    """Conventionally normalized (Tr = 2 delta) generalized Gell-Mann matrices, shape (d^2-1, d, d)."""
    if int(d) < 2:
        raise DimensionMismatchError(f"Gell-Mann basis needs d >= 2, got {d!r}")
    return _generalized_gellmann(int(d))


@lru_cache(maxsize=1)
def lambda_matrices() -> np.ndarray:
    """lambda_1 .. lambda_8 in the standard order."""
    order = [
        _symmetric(0, 1, 3),
        _antisymmetric(0, 1, 3),
        _diagonal(1, 3),
        _symmetric(0, 2, 3),
        _antisymmetric(0, 2, 3),
        _symmetric(1, 2, 3),
        _antisymmetric(1, 2, 3),
        _diagonal(2, 3),
    ]
    out = np.stack(order)
    out.setflags(write=False)
    return out


def basis_operators(d: int, basis: str = GELLMANN) -> np.ndarray:
    """Operators U_j used for the given tag."""
    if basis == GELLMANN:
        return np.sqrt(d / 2.0) * generalized_gellmann(d)
    if basis == GELLMANN_LAMBDA:
        if d != 3:
            raise DimensionMismatchError(f"The gellmann-lambda tag is defined for d=3, got d={d}")
        return lambda_matrices()
    if basis == QUBIT_PAULI and d == 2:
        return generalized_gellmann(2)
    raise DimensionMismatchError(f"Basis {basis!r} is not available for d={d}")


def _coordinate_scale(d: int, basis: str) -> float:
    # r_j = scale * Tr(rho U_j)
    return d / 2.0 if basis == GELLMANN_LAMBDA else 1.0


def to_generalized_bloch(rho: DensityMatrix, basis: str = GELLMANN) -> BlochVector:
    d = rho.dim
    ops = basis_operators(d, basis)
    coords = _coordinate_scale(d, basis) * np.real(np.einsum("ij,kji->k", rho.entries, ops))
    if basis == QUBIT_PAULI:
        return BlochVector(QUBIT_PAULI, coords)
    return BlochVector(basis, coords, dim=d)


def from_generalized_bloch(v: BlochVector) -> DensityMatrix:
    d = v.dim
    ops = basis_operators(d, v.basis)
    m = (np.eye(d, dtype=np.complex128) + np.einsum("k,kij->ij", v.coords, ops)) / d
    return DensityMatrix(m)


def overlap_to_inner_product(overlap: np.ndarray, d: int, basis: str = GELLMANN) -> np.ndarray:
    """
    Bloch inner products from two-state overlaps Tr(rho_i rho_j).

    ``gellmann`` (and qubit-pauli): d Tr - 1. ``gellmann-lambda``: (d^2 Tr - d) / 2.
    """
    o = np.asarray(overlap, dtype=np.float64)
    if basis == GELLMANN_LAMBDA:
        if d != 3:
            raise DimensionMismatchError(f"The gellmann-lambda tag is defined for d=3, got d={d}")
        return (d * d * o - d) / 2.0
    return d * o - 1.0
