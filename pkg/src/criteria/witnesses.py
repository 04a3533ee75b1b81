"""
Invariant-based witnesses.

A Bargmann invariant with a nonzero imaginary part cannot come from real
states, in any dimension. For qubits the third-order invariants are enough:
a qubit multi-state has imaginarity iff some triple has Im Tr(rho_k rho_l rho_m) != 0,
and for real qubit triples the value lies in [-1/8, 1].

Equality of an invariant with a permuted copy holds for commuting states, so a
gap witnesses coherence. For three states and one transposition the gap is
2i Im Tr(rho_1 rho_2 rho_3) (weak commutativity).

On qubits the witnessing quantities are linear in how far the Bloch vectors
leave a plane (or line), while the exact rank tests threshold a quadratic
quantity. A qubit witness value is therefore confirmed against the exact test
at the same rank tolerance; one the rank test cannot resolve is reported with
the exact decision and ``below_rank_resolution`` set in ``details``.
"""

from __future__ import annotations

import itertools
from typing import Any, Dict, Optional, Sequence

from bargmann.invariants import invariant
from criteria.qubit_tests import qubit_coherence_test, qubit_imaginarity_test
from criteria.verdicts import COHERENCE, HAS_RESOURCE, IMAGINARITY, INCONCLUSIVE, RESOURCE_FREE, Verdict
from errors import BadLabelError, BadPermutationError
from qstate.density import Label, MultiState
from settings import get_settings

REAL_THIRD_ORDER_RANGE = (-0.125, 1.0)


def _tol(tol: Optional[float]) -> float:
    return get_settings().witness_tolerance if tol is None else float(tol)


def _confirm_on_qubits(
    ms: MultiState,
    prop: str,
    decision: str,
    rank_tol: Optional[float],
    details: Dict[str, Any],
) -> str:
    """Replace a qubit has-resource call the exact rank test does not resolve by the exact decision."""
    if ms.dim != 2 or decision != HAS_RESOURCE:
        return decision
    exact = qubit_imaginarity_test(ms, rank_tol) if prop == IMAGINARITY else qubit_coherence_test(ms, rank_tol)
    if exact.has_resource:
        return decision
    details.update(
        {"below_rank_resolution": True, "rank_evidence": exact.evidence, "rank_tolerance": exact.threshold}
    )
    return exact.decision


def imaginarity_witness(
    ms: MultiState,
    seq: Sequence[Label],
    tol: Optional[float] = None,
    *,
    rank_tol: Optional[float] = None,
) -> Verdict:
    """Im Tr(rho_{i1} ... rho_{im}) != 0 implies imaginarity; otherwise inconclusive."""
    t = _tol(tol)
    inv = invariant(ms, seq)
    evidence = abs(inv.imag)
    details: Dict[str, Any] = {"sequence": [str(x) for x in inv.index_sequence], "invariant": [inv.real, inv.imag]}
    decision = HAS_RESOURCE if evidence > t else INCONCLUSIVE
    decision = _confirm_on_qubits(ms, IMAGINARITY, decision, rank_tol, details)
    return Verdict(IMAGINARITY, decision, evidence, t, "imaginarity_witness", details)


def third_order_witness(
    ms: MultiState,
    k: Label,
    l: Label,
    m: Label,
    tol: Optional[float] = None,
    *,
    rank_tol: Optional[float] = None,
) -> Verdict:
    """
    Witness from Tr(rho_k rho_l rho_m).

    Qubits: a vanishing imaginary part makes the triple imaginarity-free, which
    settles the whole multi-state only when the triple covers all of it.
    """
    t = _tol(tol)
    inv = invariant(ms, (k, l, m))
    evidence = abs(inv.imag)
    lo, hi = REAL_THIRD_ORDER_RANGE
    in_real_set = evidence <= t and lo - t <= inv.real <= hi + t
    covered = set(ms.resolve_all((k, l, m))) == set(range(len(ms)))
    if evidence > t:
        decision = HAS_RESOURCE
    elif ms.dim == 2 and covered:
        decision = RESOURCE_FREE
    else:
        decision = INCONCLUSIVE
    details: Dict[str, Any] = {
        "sequence": [str(k), str(l), str(m)],
        "invariant": [inv.real, inv.imag],
        "in_real_third_order_set": bool(in_real_set),
        "covers_multistate": bool(covered),
    }
    decision = _confirm_on_qubits(ms, IMAGINARITY, decision, rank_tol, details)
    return Verdict(IMAGINARITY, decision, evidence, t, "third_order_witness", details)


def third_order_scan(
    ms: MultiState,
    tol: Optional[float] = None,
    *,
    rank_tol: Optional[float] = None,
) -> Verdict:
    """
    Scan every triple of distinct states; exact for qubits.

    For d > 2 a clean scan is only inconclusive.
    """
    t = _tol(tol)
    best = 0.0
    best_triple = None
    for triple in itertools.combinations(range(1, len(ms) + 1), 3):
        value = abs(invariant(ms, triple).imag)
        if value > best:
            best, best_triple = value, triple
    if best > t:
        decision = HAS_RESOURCE
    else:
        decision = RESOURCE_FREE if ms.dim == 2 else INCONCLUSIVE
    details: Dict[str, Any] = {
        "triple": None if best_triple is None else [ms.label_of(i - 1) for i in best_triple]
    }
    decision = _confirm_on_qubits(ms, IMAGINARITY, decision, rank_tol, details)
    return Verdict(IMAGINARITY, decision, best, t, "third_order_scan", details)


def _check_permutation(perm: Sequence[int], m: int) -> list:
    p = [int(x) for x in perm]
    if sorted(p) != list(range(m)):
        raise BadPermutationError(f"{list(perm)!r} is not a permutation of positions 0..{m - 1}")
    return p


def permutation_equality_witness(
    ms: MultiState,
    seq: Sequence[Label],
    perm: Sequence[int],
    tol: Optional[float] = None,
    *,
    rank_tol: Optional[float] = None,
) -> Verdict:
    """
    Compare Tr(rho_{i1} ... rho_{im}) with the invariant of the reordered sequence.

    Args:
        perm: 0-based positions; the reordered sequence is ``[seq[p] for p in perm]``.
        rank_tol: Gram rank tolerance used to confirm a qubit gap.
    """
    labels = list(seq)
    if not labels:
        raise BadLabelError("Index sequence must contain at least one label")
    p = _check_permutation(perm, len(labels))
    permuted = [labels[i] for i in p]
    original = invariant(ms, labels)
    other = invariant(ms, permuted)
    diff = original.value - other.value
    t = _tol(tol)
    details: Dict[str, Any] = {
        "sequence": [str(x) for x in labels],
        "permuted_sequence": [str(x) for x in permuted],
        "difference": [diff.real, diff.imag],
    }
    decision = HAS_RESOURCE if abs(diff) > t else INCONCLUSIVE
    decision = _confirm_on_qubits(ms, COHERENCE, decision, rank_tol, details)
    return Verdict(COHERENCE, decision, abs(diff), t, "permutation_equality_witness", details)


def weak_commutativity_witness(
    ms: MultiState,
    i: Label,
    j: Label,
    k: Label,
    tol: Optional[float] = None,
    *,
    rank_tol: Optional[float] = None,
) -> Verdict:
    """Tr(rho_i rho_j rho_k) against Tr(rho_i rho_k rho_j)."""
    return permutation_equality_witness(ms, (i, j, k), (0, 2, 1), tol, rank_tol=rank_tol)
