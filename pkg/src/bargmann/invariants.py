"""
Bargmann invariants Tr(rho_{i1} ... rho_{im}) and two-state overlaps.

Products are evaluated left to right; sequences are short, so no
re-association is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from errors import BadLabelError, DimensionMismatchError, InternalDisagreementError
from qstate.density import DensityMatrix, Label, MultiState

MAGNITUDE_TOLERANCE = 1e-10
REALITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BargmannInvariant:
    order: int
    value: complex
    index_sequence: Tuple[Label, ...]

    def __post_init__(self) -> None:
        if abs(self.value) > 1.0 + MAGNITUDE_TOLERANCE:
            raise InternalDisagreementError(
                f"|Tr(product of states)| = {abs(self.value):.12g} exceeds 1 for sequence {self.index_sequence!r}"
            )

    @property
    def real(self) -> float:
        return float(self.value.real)

    @property
    def imag(self) -> float:
        return float(self.value.imag)


def overlap(a: DensityMatrix, b: DensityMatrix) -> float:
    """Tr(ab), asserted real."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Cannot overlap states of dimension {a.dim} and {b.dim}")
    value = complex(np.sum(a.entries * b.entries.T))
    if abs(value.imag) > REALITY_TOLERANCE:
        raise InternalDisagreementError(f"Overlap has imaginary residual {value.imag:.3e}")
    return float(value.real)


def pairwise_overlaps(ms: MultiState) -> np.ndarray:
    """Symmetric n×n matrix of Tr(rho_i rho_j)."""
    mats = ms.matrices()
    table = np.real(np.einsum("aij,bji->ab", mats, mats))
    return 0.5 * (table + table.T)


def _check_sequence(seq: Sequence[Label]) -> Tuple[Label, ...]:
    labels = tuple(seq)
    if not labels:
        raise BadLabelError("Index sequence must contain at least one label")
    return labels


def invariant(ms: MultiState, seq: Sequence[Label]) -> BargmannInvariant:
    labels = _check_sequence(seq)
    idx = ms.resolve_all(labels)
    product = reduce(np.matmul, (ms[i].entries for i in idx))
    return BargmannInvariant(order=len(idx), value=complex(np.trace(product)), index_sequence=labels)


def invariants(ms: MultiState, seqs: Iterable[Sequence[Label]]) -> List[BargmannInvariant]:
    return [invariant(ms, s) for s in seqs]
