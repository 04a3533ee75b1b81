"""
Qubit overlap tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from bargmann.invariants import pairwise_overlaps
from errors import AsymmetricInputError, BadLabelError, DimensionMismatchError, EntryOutOfRangeError
from qstate.density import Label, MultiState

SYMMETRY_TOLERANCE = 1e-12
RANGE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class OverlapTable:
    """
    Symmetric n×n table of Tr(rho_i rho_j) for qubit states.

    The diagonal holds purities, which lie in [1/2, 1] for qubits.
    """

    entries: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        o = np.array(self.entries, dtype=np.float64)
        if o.ndim != 2 or o.shape[0] != o.shape[1] or o.shape[0] == 0:
            raise AsymmetricInputError(f"Overlap table must be a non-empty square matrix, got shape {o.shape!r}")
        asym = float(np.max(np.abs(o - o.T)))
        if asym > SYMMETRY_TOLERANCE:
            raise AsymmetricInputError(f"Overlap table is not symmetric: max |O - O^T| = {asym:.3e}")
        bad = np.argwhere((o < -RANGE_TOLERANCE) | (o > 1.0 + RANGE_TOLERANCE))
        if bad.size:
            i, j = bad[0]
            raise EntryOutOfRangeError(f"Overlap entry ({i + 1}, {j + 1}) = {o[i, j]!r} outside [0, 1]")
        diag = np.diag(o)
        low = np.flatnonzero(diag < 0.5 - RANGE_TOLERANCE)
        if low.size:
            i = int(low[0])
            raise EntryOutOfRangeError(f"Purity of state {i + 1} is {diag[i]!r}, below 1/2")
        o = 0.5 * (o + o.T)
        o.setflags(write=False)
        object.__setattr__(self, "entries", o)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != o.shape[0] or len(set(labels)) != len(labels):
                raise BadLabelError(f"Labels {list(labels)!r} do not name {o.shape[0]} distinct states")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_multistate(cls, ms: MultiState) -> "OverlapTable":
        if ms.dim != 2:
            raise DimensionMismatchError(f"Overlap tables here describe qubits, got d={ms.dim}")
        return cls(pairwise_overlaps(ms), ms.labels)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def inner_products(self) -> np.ndarray:
        """Bloch Gram entries 2 Tr(rho_i rho_j) - 1."""
        return 2.0 * self.entries - 1.0

    def resolve(self, label: Label) -> int:
        if isinstance(label, str):
            if self.labels is not None and label in self.labels:
                return self.labels.index(label)
            if label.strip().isdigit():
                return self.resolve(int(label))
            raise BadLabelError(f"Unknown state label {label!r}")
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool) and 1 <= int(label) <= self.n:
            return int(label) - 1
        raise BadLabelError(f"State label {label!r} out of range 1..{self.n}")

    def resolve_all(self, seq: Optional[Sequence[Label]]) -> List[int]:
        if seq is None:
            return list(range(self.n))
        return [self.resolve(x) for x in seq]

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"overlaps": self.entries.tolist()}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out
