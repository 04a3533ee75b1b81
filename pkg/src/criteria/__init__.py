"""
Decision procedures and witnesses for multi-state imaginarity and coherence.

- Exact Gram-rank criteria for qubits, with a real-basis certificate
- Necessary rank conditions in dimension d
- Invariant-based witnesses valid in every dimension
- Named reference fixtures with expected values
"""

from .commutators import commutator_norms, max_commutator_norm
from .fixtures import FIXTURE_NAMES, CheckOutcome, FixtureCheck, ReferenceFixture, reference_fixture, run_fixture_checks
from .high_dim import (
    coherence_rank_bound,
    high_dim_coherence_necessary,
    high_dim_imaginarity_necessary,
    imaginarity_rank_bound,
)
from .qubit_tests import qubit_coherence_test, qubit_imaginarity_test
from .real_basis import RealBasisCertificate, construct_real_basis, imaginary_residual, residual_bound
from .verdicts import COHERENCE, HAS_RESOURCE, IMAGINARITY, INCONCLUSIVE, RESOURCE_FREE, Verdict, rank_verdict
from .witnesses import (
    REAL_THIRD_ORDER_RANGE,
    imaginarity_witness,
    permutation_equality_witness,
    third_order_scan,
    third_order_witness,
    weak_commutativity_witness,
)

__all__ = [
    "commutator_norms",
    "max_commutator_norm",
    "FIXTURE_NAMES",
    "CheckOutcome",
    "FixtureCheck",
    "ReferenceFixture",
    "reference_fixture",
    "run_fixture_checks",
    "coherence_rank_bound",
    "high_dim_coherence_necessary",
    "high_dim_imaginarity_necessary",
    "imaginarity_rank_bound",
    "qubit_coherence_test",
    "qubit_imaginarity_test",
    "RealBasisCertificate",
    "construct_real_basis",
    "imaginary_residual",
    "residual_bound",
    "COHERENCE",
    "HAS_RESOURCE",
    "IMAGINARITY",
    "INCONCLUSIVE",
    "RESOURCE_FREE",
    "Verdict",
    "rank_verdict",
    "REAL_THIRD_ORDER_RANGE",
    "imaginarity_witness",
    "permutation_equality_witness",
    "third_order_scan",
    "third_order_witness",
    "weak_commutativity_witness",
]
