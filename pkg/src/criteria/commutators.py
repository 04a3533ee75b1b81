"""Pairwise commutators: a set of states is incoherent iff all of them commute."""

from __future__ import annotations

import numpy as np

from qstate.density import MultiState


def commutator_norms(ms: MultiState) -> np.ndarray:
    """Symmetric n×n matrix of Frobenius norms ||[rho_i, rho_j]||."""
    mats = ms.matrices()
    n = len(ms)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            c = mats[i] @ mats[j] - mats[j] @ mats[i]
            out[i, j] = out[j, i] = float(np.linalg.norm(c))
    return out


def max_commutator_norm(ms: MultiState) -> float:
    return float(np.max(commutator_norms(ms))) if len(ms) > 1 else 0.0
