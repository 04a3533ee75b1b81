"""
Recursive evaluation of qubit Bargmann invariants from Bloch vectors.

Write the running product rho_1 ... rho_k as 2^{-k} (x_0 + x . sigma) with
x_0 = a_0 + i b_0 and x = a + i b. Multiplying by (1 + r . sigma) gives

    a_0' = a_0 + a . r            b_0' = b_0 + b . r
    a'   = a_0 r + a - b x r      b'   = b_0 r + b + a x r

starting from a_0 = 1, b_0 = 0, a = r_1, b = 0, and the trace of the n-fold
product is (a_0 + i b_0) / 2^{n-1}.

The three vector identities used when the scalars are rewritten in terms of
inner products are exposed as helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from bargmann.invariants import BargmannInvariant, _check_sequence
from errors import DimensionMismatchError
from qstate.bloch import bloch_coordinates
from qstate.density import Label, MultiState


@dataclass(frozen=True, eq=False)
class QubitProductState:
    scalar_re: float
    scalar_im: float
    vec_re: np.ndarray
    vec_im: np.ndarray
    order: int

    @classmethod
    def start(cls, r: np.ndarray) -> "QubitProductState":
        r = np.asarray(r, dtype=np.float64)
        return cls(1.0, 0.0, r.copy(), np.zeros(3), 1)

    def step(self, r: np.ndarray) -> "QubitProductState":
        r = np.asarray(r, dtype=np.float64)
        a0, b0, a, b = self.scalar_re, self.scalar_im, self.vec_re, self.vec_im
        return QubitProductState(
            scalar_re=float(a0 + a @ r),
            scalar_im=float(b0 + b @ r),
            vec_re=a0 * r + a - np.cross(b, r),
            vec_im=b0 * r + b + np.cross(a, r),
            order=self.order + 1,
        )

    @property
    def trace(self) -> complex:
        return complex(self.scalar_re, self.scalar_im) / 2.0 ** (self.order - 1)


def product_state(vectors: Sequence[np.ndarray]) -> QubitProductState:
    """Run the recursion over Bloch vectors in order."""
    vs = [np.asarray(v, dtype=np.float64) for v in vectors]
    if not vs:
        raise ValueError("Need at least one Bloch vector")
    state = QubitProductState.start(vs[0])
    for r in vs[1:]:
        state = state.step(r)
    return state


def qubit_invariant_recursive(ms: MultiState, seq: Sequence[Label]) -> BargmannInvariant:
    if ms.dim != 2:
        raise DimensionMismatchError(f"Recursive evaluation needs qubits, got d={ms.dim}")
    labels = _check_sequence(seq)
    idx = ms.resolve_all(labels)
    coords = bloch_coordinates(ms)
    state = product_state([coords[i] for i in idx])
    return BargmannInvariant(order=len(idx), value=state.trace, index_sequence=labels)


def triple_product(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """<a, b x c> = det[a; b; c]."""
    return float(np.dot(a, np.cross(b, c)))


def vector_triple_product(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """a x (b x c) = b <a, c> - c <a, b>."""
    a, b, c = (np.asarray(x, dtype=np.float64) for x in (a, b, c))
    return b * np.dot(a, c) - c * np.dot(a, b)


def triple_product_pairing(gram_block: np.ndarray) -> float:
    """
    det[a1; a2; a3] * det[b1; b2; b3] from the 3×3 block (<a_i, b_j>).

    This is how products of two triple products are written with inner
    products only.
    """
    block = np.asarray(gram_block, dtype=np.float64)
    if block.shape != (3, 3):
        raise DimensionMismatchError(f"Pairing needs a 3x3 block, got shape {block.shape!r}")
    return float(np.linalg.det(block))
