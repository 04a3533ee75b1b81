"""
Overlap-only polynomials for qubit Bargmann invariants of order 3, 4 and 5.

Running the product recursion symbolically gives the invariant as
(a_0 + i b_0) / 2^{n-1}, where a_0 is a polynomial in the Bloch inner products
g_ij = <r_i, r_j> and b_0 = sum_T c_T det[r_T] is a combination of triple
products whose coefficients c_T are again polynomials in the g_ij. Products of
two triple products are Gram determinants, so

    P = a_0 / 2^{n-1},   Q = P^2 + (sum_{T,T'} c_T c_T' det g[T, T']) / 4^{n-1}

depend on the two-state overlaps alone, and the invariant is a root of
x^2 - 2 P x + Q.

Indices below are 0-based positions in the index sequence.
"""

from __future__ import annotations

import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np

from bargmann.recursion import triple_product, triple_product_pairing
from errors import DimensionMismatchError, WrongOrderError
from qstate.bloch import bloch_coordinates
from qstate.density import Label, MultiState
from reconstruct.tables import OverlapTable

SUPPORTED_ORDERS = (3, 4, 5)

Triple = Tuple[int, int, int]


def _check_order(n: int) -> None:
    if n not in SUPPORTED_ORDERS:
        raise WrongOrderError(f"Closed-form polynomials exist for orders 3, 4 and 5, got {n}")


def a0_polynomial(g: np.ndarray) -> float:
    """a_0 from the inner products of an order-3, 4 or 5 sequence."""
    n = g.shape[0]
    _check_order(n)
    if n == 3:
        return float(1.0 + g[0, 1] + g[0, 2] + g[1, 2])
    if n == 4:
        return float(
            (1.0 + g[0, 1]) * (1.0 + g[2, 3]) - (1.0 - g[0, 2]) * (1.0 - g[1, 3]) + (1.0 + g[0, 3]) * (1.0 + g[1, 2])
        )
    pair_sum = sum(g[i, j] for i, j in itertools.combinations(range(5), 2))
    return float(
        1.0
        + pair_sum
        + g[0, 1] * g[2, 3]
        - g[0, 2] * g[1, 3]
        + g[0, 3] * g[1, 2]
        + (g[1, 2] + g[1, 3] + g[2, 3]) * g[0, 4]
        + (-g[0, 2] - g[0, 3] + g[2, 3]) * g[1, 4]
        + (g[0, 1] - g[0, 3] - g[1, 3]) * g[2, 4]
        + (g[0, 1] + g[0, 2] + g[1, 2]) * g[3, 4]
    )


def b0_terms(g: np.ndarray) -> List[Tuple[float, Triple]]:
    """(c_T, T) pairs with b_0 = sum c_T det[r_T]."""
    n = g.shape[0]
    _check_order(n)
    triples = list(itertools.combinations(range(n), 3))
    if n < 5:
        return [(1.0, t) for t in triples]
    shift = {
        (0, 1, 2): g[3, 4],
        (0, 3, 4): g[1, 2],
        (1, 3, 4): -g[0, 2],
        (2, 3, 4): g[0, 1],
    }
    return [(1.0 + float(shift.get(t, 0.0)), t) for t in triples]


def _sequence_coordinates(ms: MultiState, seq: Optional[Sequence[Label]]) -> np.ndarray:
    if ms.dim != 2:
        raise DimensionMismatchError(f"Closed-form polynomials describe qubits, got d={ms.dim}")
    idx = list(range(len(ms))) if seq is None else ms.resolve_all(seq)
    _check_order(len(idx))
    return bloch_coordinates(ms)[idx]


def a0_b0_explicit(ms: MultiState, seq: Optional[Sequence[Label]] = None) -> Tuple[float, float]:
    """
    (a_0, b_0) from Bloch coordinates via the closed forms.

    Args:
        seq: labels of the sequence; defaults to every state in order.

    Raises:
        WrongOrderError: the sequence length is not 3, 4 or 5.
    """
    r = _sequence_coordinates(ms, seq)
    g = r @ r.T
    b0 = sum(c * triple_product(r[i], r[j], r[k]) for c, (i, j, k) in b0_terms(g))
    return a0_polynomial(g), float(b0)


def overlap_polynomials(t: OverlapTable, seq: Optional[Sequence[Label]] = None) -> Tuple[float, float]:
    """(P, Q) for the sequence, from the overlap table only."""
    idx = t.resolve_all(seq)
    n = len(idx)
    _check_order(n)
    g = t.inner_products()[np.ix_(idx, idx)]
    terms = b0_terms(g)
    b0_squared = 0.0
    for c1, t1 in terms:
        for c2, t2 in terms:
            b0_squared += c1 * c2 * triple_product_pairing(g[np.ix_(t1, t2)])
    p = a0_polynomial(g) / 2.0 ** (n - 1)
    q = p * p + b0_squared / 4.0 ** (n - 1)
    return float(p), float(q)


def p3_q3(t: OverlapTable) -> Tuple[float, float]:
    """
    P_3 = (D_12 + D_13 + D_23 - 1) / 2 and Q_3 = det(2D - 1) / 16 + P_3^2.

    Raises:
        WrongOrderError: the table does not describe three states.
    """
    if t.n != 3:
        raise WrongOrderError(f"P_3 and Q_3 need a 3-state table, got {t.n} states")
    d = t.entries
    p = 0.5 * (d[0, 1] + d[0, 2] + d[1, 2] - 1.0)
    q = float(np.linalg.det(t.inner_products())) / 16.0 + p * p
    return float(p), float(q)
