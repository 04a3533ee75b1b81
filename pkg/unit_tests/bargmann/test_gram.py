import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from bargmann.gram import default_rank_tolerance, gram, gram_from_overlaps, numerical_rank
from bargmann.invariants import pairwise_overlaps
from criteria.fixtures import reference_fixture
from errors import AsymmetricInputError, EntryOutOfRangeError
from qstate.bloch import GELLMANN, GELLMANN_LAMBDA, bloch_coordinates, multistate_from_bloch
from qstate.density import random_multistate


def test_pauli_triple_is_orthonormal():
    g = gram(multistate_from_bloch(np.eye(3)))
    np.testing.assert_allclose(g.entries, np.eye(3), atol=1e-15)
    assert g.numerical_rank == 3
    assert g.basis == "qubit-pauli"


def test_qubit_gram_is_bloch_inner_products():
    ms = random_multistate(2, 5, seed=2)
    r = bloch_coordinates(ms)
    np.testing.assert_allclose(gram(ms).entries, r @ r.T, atol=1e-14)
    assert gram(ms).numerical_rank == 3


def test_qutrit_fixture_under_both_tags():
    ms = reference_fixture("qutrit-lambda").multistates["rho"]
    np.testing.assert_allclose(gram(ms, basis=GELLMANN_LAMBDA).entries, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(gram(ms, basis=GELLMANN).entries, 2.0 / 3.0 * np.eye(3), atol=1e-12)
    assert gram(ms).numerical_rank == 3


def test_coplanar_vectors_have_rank_two():
    ms = multistate_from_bloch([[1, 0, 0], [0, 0, 1], [0.6, 0, 0.8], [0.3, 0, -0.1]])
    g = gram(ms)
    assert g.numerical_rank == 2
    assert g.singular_value(3) <= g.rank_tolerance


def test_explicit_tolerance_overrides_default():
    ms = multistate_from_bloch([[1, 0, 0], [0, 1e-3, 0.0]])
    assert gram(ms).numerical_rank == 2
    assert gram(ms, 1e-5).numerical_rank == 1


def test_non_positive_tolerance_rejected():
    with pytest.raises(ValueError, match="positive"):
        gram(random_multistate(2, 2, seed=1), 0.0)


def test_default_tolerance_is_relative():
    sv = np.array([4.0, 1.0])
    assert default_rank_tolerance(sv, 2) == pytest.approx(1e-8 * 2 * 4.0)
    assert default_rank_tolerance(np.array([0.1]), 3) == pytest.approx(3e-8)
    assert numerical_rank(np.array([1.0, 1e-9, 0.0]), 1e-8) == 1


def test_spectrum_helpers():
    g = gram(multistate_from_bloch([[1, 0, 0], [0, 1, 0]]))
    np.testing.assert_allclose(g.padded_eigenvalues(3), [1, 1, 0], atol=1e-15)
    assert g.singular_value(5) == 0.0
    assert g.min_eigenvalue() == pytest.approx(1.0)


def test_from_overlaps_matches_states():
    ms = random_multistate(3, 4, seed=5)
    a = gram_from_overlaps(pairwise_overlaps(ms), 3)
    np.testing.assert_allclose(a.entries, gram(ms).entries, atol=1e-14)


def test_from_overlaps_asymmetric():
    with pytest.raises(AsymmetricInputError, match="symmetric"):
        gram_from_overlaps(np.array([[1.0, 0.5], [0.4, 1.0]]), 2)


def test_from_overlaps_not_square():
    with pytest.raises(AsymmetricInputError, match="square"):
        gram_from_overlaps(np.ones((2, 3)), 2)


def test_from_overlaps_out_of_range():
    with pytest.raises(EntryOutOfRangeError, match=r"\(1, 2\)"):
        gram_from_overlaps(np.array([[1.0, 1.2], [1.2, 1.0]]), 2)


def test_from_overlaps_purity_below_one_over_d():
    with pytest.raises(EntryOutOfRangeError, match="Purity of state 2"):
        gram_from_overlaps(np.array([[1.0, 0.3], [0.3, 0.2]]), 3)
