"""
Quadratic certificates and invariant reconstruction from overlaps.

Complex conjugation of every state preserves all overlaps and conjugates every
invariant, so overlaps can fix an invariant only up to that sign. The returned
pairs put the root with nonnegative imaginary part first and never claim which
of the two is the true value.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from bargmann.gram import gram_from_overlaps
from bargmann.recursion import product_state, qubit_invariant_recursive
from errors import DimensionMismatchError, InternalDisagreementError, NotQubitRealizableError
from qstate.density import Label, MultiState
from reconstruct.polynomials import SUPPORTED_ORDERS, overlap_polynomials
from reconstruct.tables import OverlapTable

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-9
CONJUGATE_TOLERANCE = 1e-11
REALIZABILITY_TOLERANCE = 1e-8


def conjugate_pair(p: float, q: float) -> Tuple[complex, complex]:
    """Roots of x^2 - 2 p x + q, upper half-plane first."""
    im = math.sqrt(max(0.0, q - p * p))
    return complex(p, im), complex(p, -im)


@dataclass(frozen=True)
class QuadraticCertificate:
    n: int
    P: float
    Q: float
    roots: Tuple[complex, complex]
    residual: float
    invariant: complex
    conjugate_gap: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "P": self.P,
            "Q": self.Q,
            "roots": [[z.real, z.imag] for z in self.roots],
            "residual": self.residual,
            "invariant": [self.invariant.real, self.invariant.imag],
            "conjugate_gap": self.conjugate_gap,
        }


def quadratic_certificate(ms: MultiState, seq: Sequence[Label]) -> QuadraticCertificate:
    """
    Certify that Tr(rho_{i1} ... rho_{in}) solves x^2 - 2Px + Q = 0 with P, Q overlap-determined.

    P and Q are recomputed on the conjugated copy of the multi-state, which has
    the same overlaps; they must agree.

    Raises:
        DimensionMismatchError: d != 2.
    """
    if ms.dim != 2:
        raise DimensionMismatchError(f"Quadratic certificates need qubits, got d={ms.dim}")
    delta = qubit_invariant_recursive(ms, seq).value
    mirror = qubit_invariant_recursive(ms.conjugated(), seq).value
    p, q = delta.real, abs(delta) ** 2
    gap = max(abs(p - mirror.real), abs(q - abs(mirror) ** 2))
    if gap > CONJUGATE_TOLERANCE:
        raise InternalDisagreementError(f"P, Q change under conjugation by {gap:.3e}; they are not overlap-determined")
    residual = abs(delta * delta - 2.0 * p * delta + q)
    if residual > RESIDUAL_TOLERANCE:
        raise InternalDisagreementError(f"Invariant misses its quadratic by {residual:.3e}")
    return QuadraticCertificate(len(seq), float(p), float(q), conjugate_pair(p, q), float(residual), delta, float(gap))


def check_realizable(t: OverlapTable) -> np.ndarray:
    """
    Qubit Gram matrix of the table, or an error if no qubit states produce it.

    Raises:
        NotQubitRealizableError: the Gram matrix is not PSD or has rank above 3.
    """
    g = gram_from_overlaps(t.entries, 2)
    lowest = g.min_eigenvalue()
    if lowest < -REALIZABILITY_TOLERANCE:
        raise NotQubitRealizableError(f"Gram matrix has eigenvalue {lowest:.3e}; no states have these overlaps")
    if g.numerical_rank > 3:
        raise NotQubitRealizableError(f"Gram matrix has rank {g.numerical_rank}; qubit Bloch vectors span at most 3")
    return np.array(g.entries)


def reconstruct_from_overlaps(t: OverlapTable, seq: Optional[Sequence[Label]] = None) -> Tuple[complex, complex]:
    """
    {Delta, conj Delta} for a sequence of order 3, 4 or 5, from overlaps alone.

    Raises:
        NotQubitRealizableError: see ``check_realizable``.
        WrongOrderError: unsupported sequence length.
    """
    check_realizable(t)
    p, q = overlap_polynomials(t, seq)
    return conjugate_pair(p, q)


def realize_bloch_vectors(t: OverlapTable) -> np.ndarray:
    """Bloch vectors (n×3) with the table's overlaps, unique up to an O(3) transformation."""
    g = check_realizable(t)
    w, v = np.linalg.eigh(g)
    w, v = np.clip(w[::-1][:3], 0.0, None), v[:, ::-1][:, :3]
    coords = v * np.sqrt(w)
    if coords.shape[1] < 3:
        coords = np.hstack([coords, np.zeros((coords.shape[0], 3 - coords.shape[1]))])
    norms = np.linalg.norm(coords, axis=1)
    over = norms > 1.0
    coords[over] /= norms[over, None]
    return coords


def reconstruct_by_realization(t: OverlapTable, seq: Optional[Sequence[Label]] = None) -> Tuple[complex, complex]:
    """
    {Delta, conj Delta} for a sequence of any length.

    Factorizes the Gram matrix into Bloch vectors and runs the product
    recursion. Any factorization differs from the true vectors by an
    orthogonal map, which at most conjugates the invariant. Orders 3 to 5 are
    cross-checked against the closed-form polynomials.

    Raises:
        NotQubitRealizableError: see ``check_realizable``.
        InternalDisagreementError: the realized value misses the closed-form pair.
    """
    coords = realize_bloch_vectors(t)
    idx = t.resolve_all(seq)
    value = product_state([coords[i] for i in idx]).trace
    if len(idx) in SUPPORTED_ORDERS:
        expected = conjugate_pair(*overlap_polynomials(t, seq))
        err = min(abs(value - z) for z in expected)
        # dropped and clipped eigenvalues move each vector by at most sqrt(discarded)
        w = np.linalg.eigvalsh(check_realizable(t))[::-1]
        discarded = float(np.sum(np.abs(w[3:])) + np.sum(np.clip(-w[:3], 0.0, None)))
        allowed = RESIDUAL_TOLERANCE + len(idx) * math.sqrt(discarded)
        logger.debug("realization vs closed form: %.3e (allowed %.3e)", err, allowed)
        if err > allowed:
            raise InternalDisagreementError(
                f"Realized invariant {value:.12g} is {err:.3e} from the closed-form pair; allowed {allowed:.3e}"
            )
    return conjugate_pair(value.real, abs(value) ** 2)
