"""
Necessary rank conditions in dimension d.

Real states live in the d(d+1)/2 - 1 dimensional space of real symmetric
traceless generators, and commuting states in a (d-1)-dimensional Cartan
subalgebra, so larger Gram ranks witness the resource. Small ranks prove
nothing for d >= 3. For d = 2 both tests delegate to the exact qubit criteria.
"""

from __future__ import annotations

from typing import Optional

from bargmann.gram import gram
from criteria.commutators import max_commutator_norm
from criteria.qubit_tests import qubit_coherence_test, qubit_imaginarity_test
from criteria.verdicts import COHERENCE, IMAGINARITY, Verdict, rank_verdict
from qstate.density import MultiState


def imaginarity_rank_bound(d: int) -> int:
    return d * (d + 1) // 2 - 1


def coherence_rank_bound(d: int) -> int:
    return d - 1


def high_dim_imaginarity_necessary(ms: MultiState, tol: Optional[float] = None) -> Verdict:
    if ms.dim == 2:
        return qubit_imaginarity_test(ms, tol)
    g = gram(ms, tol)
    bound = imaginarity_rank_bound(ms.dim)
    return rank_verdict(
        prop=IMAGINARITY,
        singular_value=g.singular_value(bound + 1),
        tolerance=g.rank_tolerance,
        rank=g.numerical_rank,
        bound=bound,
        source="high_dim_imaginarity_necessary",
        exact=False,
    )


def high_dim_coherence_necessary(ms: MultiState, tol: Optional[float] = None) -> Verdict:
    if ms.dim == 2:
        return qubit_coherence_test(ms, tol)
    g = gram(ms, tol)
    bound = coherence_rank_bound(ms.dim)
    comm = max_commutator_norm(ms)
    return rank_verdict(
        prop=COHERENCE,
        singular_value=g.singular_value(bound + 1),
        tolerance=g.rank_tolerance,
        rank=g.numerical_rank,
        bound=bound,
        source="high_dim_coherence_necessary",
        exact=False,
        details={"max_commutator_norm": comm, "states_commute": bool(comm <= g.rank_tolerance)},
    )
