"""
Gram matrices of (generalized) Bloch vectors, built from overlaps only.

Entries come from <r_i, r_j> = d Tr(rho_i rho_j) - 1 (the conventional
Gell-Mann tag uses (d^2 Tr - d) / 2), so measured overlap tables and exact
states share one code path. Numerical rank counts singular values above
``rank_tolerance``; the default is 1e-8 * n * max(sigma_max, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg as sla

from bargmann.invariants import pairwise_overlaps
from errors import AsymmetricInputError, EntryOutOfRangeError, InternalDisagreementError
from qstate.bloch import GELLMANN, GELLMANN_LAMBDA, QUBIT_PAULI
from qstate.density import MultiState
from qstate.gellmann import overlap_to_inner_product
from settings import get_settings

SYMMETRY_TOLERANCE = 1e-12
PSD_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class GramMatrix:
    entries: np.ndarray
    singular_values: np.ndarray
    numerical_rank: int
    rank_tolerance: float
    dim: int = 2
    basis: str = GELLMANN

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in decreasing order, clipped at zero."""
        w = np.linalg.eigvalsh(self.entries)[::-1]
        return np.clip(w, 0.0, None)

    def padded_eigenvalues(self, count: int = 3) -> np.ndarray:
        """The ``count`` largest eigenvalues, zero-padded when n < count."""
        w = self.eigenvalues()
        out = np.zeros(max(count, w.shape[0]))
        out[: w.shape[0]] = w
        return out[:count]

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[0])

    def singular_value(self, position: int) -> float:
        """1-based singular value, 0 beyond the matrix size."""
        if position <= self.singular_values.shape[0]:
            return float(self.singular_values[position - 1])
        return 0.0


def default_rank_tolerance(singular_values: np.ndarray, n: int) -> float:
    top = float(singular_values[0]) if singular_values.size else 0.0
    return get_settings().rank_tolerance_scale * n * max(top, 1.0)


def numerical_rank(singular_values: np.ndarray, tolerance: float) -> int:
    return int(np.sum(singular_values > tolerance))


def _build(entries: np.ndarray, d: int, basis: str, tolerance: Optional[float]) -> GramMatrix:
    entries = 0.5 * (entries + entries.T)
    entries.setflags(write=False)
    sv = sla.svdvals(entries)
    tol = default_rank_tolerance(sv, entries.shape[0]) if tolerance is None else float(tolerance)
    if tol <= 0:
        raise ValueError(f"Rank tolerance must be positive, got {tolerance!r}")
    return GramMatrix(
        entries=entries,
        singular_values=sv,
        numerical_rank=numerical_rank(sv, tol),
        rank_tolerance=tol,
        dim=d,
        basis=basis,
    )


def gram(ms: MultiState, tolerance: Optional[float] = None, *, basis: Optional[str] = None) -> GramMatrix:
    """
    Gram matrix of the multi-state's Bloch vectors.

    Args:
        ms: the multi-state.
        tolerance: absolute rank threshold; None uses the relative default.
        basis: ``gellmann`` (default, qubit-pauli for d=2) or ``gellmann-lambda`` (d=3).
    """
    d = ms.dim
    tag = basis or (QUBIT_PAULI if d == 2 else GELLMANN)
    entries = overlap_to_inner_product(pairwise_overlaps(ms), d, tag)
    g = _build(np.array(entries), d, tag, tolerance)
    if g.min_eigenvalue() < -PSD_TOLERANCE:
        raise InternalDisagreementError(f"Gram matrix of valid states has eigenvalue {g.min_eigenvalue():.3e}")
    return g


def gram_from_overlaps(
    overlaps: np.ndarray,
    d: int,
    tolerance: Optional[float] = None,
    *,
    basis: Optional[str] = None,
) -> GramMatrix:
    """
    Gram matrix from an externally supplied overlap table.

    Raises:
        AsymmetricInputError: table not square or not symmetric within 1e-12.
        EntryOutOfRangeError: entries outside [0, 1] or purities outside [1/d, 1].
    """
    o = np.asarray(overlaps, dtype=np.float64)
    if o.ndim != 2 or o.shape[0] != o.shape[1] or o.shape[0] == 0:
        raise AsymmetricInputError(f"Overlap table must be a non-empty square matrix, got shape {o.shape!r}")
    asym = float(np.max(np.abs(o - o.T)))
    if asym > SYMMETRY_TOLERANCE:
        raise AsymmetricInputError(f"Overlap table is not symmetric: max |O - O^T| = {asym:.3e}")
    slack = SYMMETRY_TOLERANCE
    if np.any(o < -slack) or np.any(o > 1.0 + slack):
        i, j = np.argwhere((o < -slack) | (o > 1.0 + slack))[0]
        raise EntryOutOfRangeError(f"Overlap entry ({i + 1}, {j + 1}) = {o[i, j]!r} outside [0, 1]")
    diag = np.diag(o)
    low = 1.0 / d - slack
    if np.any(diag < low):
        i = int(np.argmax(diag < low))
        raise EntryOutOfRangeError(f"Purity of state {i + 1} is {diag[i]!r}, below 1/d = {1.0 / d:.12g}")
    tag = basis or (QUBIT_PAULI if d == 2 else GELLMANN)
    return _build(np.array(overlap_to_inner_product(o, d, tag)), d, tag, tolerance)
