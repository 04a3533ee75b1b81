import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from bargmann.invariants import BargmannInvariant, invariant, invariants, overlap, pairwise_overlaps
from errors import BadLabelError, DimensionMismatchError, InternalDisagreementError
from qstate.bloch import bloch_coordinates, multistate_from_bloch
from qstate.density import MultiState, random_multistate, random_state, random_unitary


@pytest.fixture
def rho_triple():
    return MultiState.from_matrices(
        [
            [[1 / 3, 1j / 3], [-1j / 3, 2 / 3]],
            [[1 / 4, 1j / 5], [-1j / 5, 3 / 4]],
            [[1 / 6, 1 / 7], [1 / 7, 5 / 6]],
        ]
    )


def test_rational_triple_value(rho_triple):
    value = invariant(rho_triple, (1, 2, 3)).value
    assert abs(value - (1253 + 36j) / 2520) <= 1e-12


def test_repeated_entry_value(rho_triple):
    assert abs(invariant(rho_triple, (1, 1, 2, 3)).value - (3199 + 108j) / 7560) <= 1e-12


def test_pauli_triple_value():
    ms = multistate_from_bloch(np.eye(3))
    assert abs(invariant(ms, [1, 2, 3]).value - (1 + 1j) / 4) <= 1e-14


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cyclic_shift_invariance(d):
    ms = random_multistate(d, 4, seed=d)
    seq = [1, 3, 2, 4, 4]
    base = invariant(ms, seq).value
    for k in range(1, len(seq)):
        assert abs(invariant(ms, seq[k:] + seq[:k]).value - base) <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 5])
def test_unitary_invariance(d):
    ms = random_multistate(d, 3, seed=10 + d)
    u = random_unitary(d, seed=99)
    assert abs(invariant(ms.rotated(u), (1, 2, 3)).value - invariant(ms, (1, 2, 3)).value) <= 1e-12


def test_reversed_sequence_is_conjugate():
    ms = random_multistate(3, 3, seed=4)
    forward = invariant(ms, (1, 2, 3)).value
    backward = invariant(ms, (3, 2, 1)).value
    assert abs(backward - forward.conjugate()) <= 1e-12


def test_chirality_identity_on_random_triples():
    rng = np.random.default_rng(17)
    for _ in range(1000):
        ms = random_multistate(2, 3, rng=rng)
        r = bloch_coordinates(ms)
        assert abs(invariant(ms, (1, 2, 3)).imag - 0.25 * np.linalg.det(r)) <= 1e-12


def test_order_one_and_two():
    ms = random_multistate(2, 2, seed=6)
    assert invariant(ms, [1]).value == pytest.approx(1.0, abs=1e-15)
    assert invariant(ms, [1, 2]).real == pytest.approx(overlap(ms[0], ms[1]), abs=1e-15)


def test_labels_and_batches():
    ms = MultiState(random_multistate(2, 3, seed=1).states, ("a", "b", "c"))
    values = invariants(ms, [("a", "b"), ("c", "a", "b")])
    assert [v.order for v in values] == [2, 3]
    assert values[1].index_sequence == ("c", "a", "b")


def test_empty_sequence():
    with pytest.raises(BadLabelError, match="at least one"):
        invariant(random_multistate(2, 2, seed=1), [])


def test_out_of_range_label():
    with pytest.raises(BadLabelError):
        invariant(random_multistate(2, 2, seed=1), [1, 3])


def test_magnitude_guard():
    with pytest.raises(InternalDisagreementError, match="exceeds 1"):
        BargmannInvariant(order=2, value=1.5 + 0j, index_sequence=(1, 2))


def test_overlap_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        overlap(random_state(2, seed=1), random_state(3, seed=1))


def test_pairwise_overlaps_symmetric_with_purities_on_diagonal():
    ms = random_multistate(3, 4, seed=12)
    table = pairwise_overlaps(ms)
    np.testing.assert_array_equal(table, table.T)
    np.testing.assert_allclose(np.diag(table), [s.purity() for s in ms], atol=1e-14)
