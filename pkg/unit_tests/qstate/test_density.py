import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

import numpy as np
import pytest

from errors import (
    BadLabelError,
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    StateValidationError,
    TraceNotOneError,
    WeightOutOfRangeError,
)
from qstate.density import (
    DensityMatrix,
    MultiState,
    direct_sum,
    mix,
    mix_multistates,
    random_multistate,
    random_state,
    random_unitary,
    validate,
)

PLUS = np.full((2, 2), 0.5)
ZERO = np.diag([1.0, 0.0])


class TestValidation:
    def test_accepts_pure_and_mixed(self):
        assert validate(PLUS).is_pure()
        assert validate(np.eye(3) / 3).purity() == pytest.approx(1 / 3)

    def test_not_hermitian_reports_residual(self):
        m = np.array([[0.5, 0.1], [0.0, 0.5]])
        with pytest.raises(NotHermitianError) as info:
            validate(m)
        assert info.value.residual == pytest.approx(0.1)
        assert info.value.invariant == "Hermitian"

    def test_trace(self):
        with pytest.raises(TraceNotOneError, match="Trace"):
            validate(np.diag([0.5, 0.6]))

    def test_negative_eigenvalue(self):
        with pytest.raises(NotPositiveError) as info:
            validate(np.array([[1.2, 0.0], [0.0, -0.2]]))
        assert info.value.residual == pytest.approx(0.2)

    def test_all_are_state_validation_errors(self):
        with pytest.raises(StateValidationError):
            validate(np.diag([2.0, -1.0]))

    def test_shape(self):
        with pytest.raises(DimensionMismatchError):
            validate(np.ones((2, 3)) / 2)

    def test_entries_are_read_only_copy(self):
        source = np.array(PLUS)
        rho = validate(source)
        source[0, 0] = 7.0
        assert rho.entries[0, 0] == 0.5
        with pytest.raises(ValueError):
            rho.entries[0, 0] = 1.0


class TestMultiState:
    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatchError, match="mixed dimensions"):
            MultiState((validate(PLUS), validate(np.eye(3) / 3)))

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatchError):
            MultiState(())

    def test_labels_resolve(self):
        ms = MultiState.from_matrices([PLUS, ZERO], labels=["plus", "zero"])
        assert ms.resolve("zero") == 1
        assert ms.resolve(1) == 0
        assert ms.resolve("2") == 1
        assert ms.label_of(0) == "plus"

    @pytest.mark.parametrize("label", [0, 3, "other", True, 1.5])
    def test_bad_labels(self, label):
        ms = MultiState.from_matrices([PLUS, ZERO])
        with pytest.raises(BadLabelError):
            ms.resolve(label)

    def test_duplicate_labels(self):
        with pytest.raises(BadLabelError, match="unique"):
            MultiState.from_matrices([PLUS, ZERO], labels=["a", "a"])

    def test_select_and_rotate_preserve_length(self):
        ms = random_multistate(2, 4, seed=3)
        assert len(ms.select([4, 1])) == 2
        u = random_unitary(2, seed=5)
        assert len(ms.rotated(u)) == 4

    def test_conjugated_is_transpose(self):
        rho = random_state(3, seed=11)
        np.testing.assert_allclose(rho.conjugated().entries, rho.entries.T, atol=0)


class TestMixing:
    def test_mix_endpoints(self):
        a, b = validate(PLUS), validate(ZERO)
        assert mix(a, b, 1.0).allclose(a)
        assert mix(a, b, 0.0).allclose(b)

    @pytest.mark.parametrize("w", [-0.1, 1.5])
    def test_weight_range(self, w):
        with pytest.raises(WeightOutOfRangeError):
            mix(validate(PLUS), validate(ZERO), w)

    def test_mix_multistates_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            mix_multistates(random_multistate(2, 2, seed=1), random_multistate(2, 3, seed=1), 0.5)

    def test_direct_sum_dimension_and_trace(self):
        s = direct_sum(validate(PLUS), validate(np.eye(3) / 3), 0.25)
        assert s.dim == 5
        assert np.trace(s.entries).real == pytest.approx(1.0)


class TestRandom:
    def test_seeded_draws_repeat(self):
        a = random_multistate(3, 2, seed=9)
        b = random_multistate(3, 2, seed=9)
        np.testing.assert_array_equal(a.matrices(), b.matrices())

    def test_pure_mode(self):
        ms = random_multistate(4, 5, "pure", seed=2)
        assert all(abs(s.purity() - 1.0) <= 1e-12 for s in ms)

    def test_bad_inputs(self):
        with pytest.raises(DimensionMismatchError):
            random_state(1)
        with pytest.raises(ValueError, match="purity mode"):
            random_state(2, "thermal")
        with pytest.raises(DimensionMismatchError):
            random_multistate(2, 0)

    def test_special_unitary(self):
        u = random_unitary(3, seed=4, special=True)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(3), atol=1e-12)
        assert abs(np.linalg.det(u) - 1.0) < 1e-12
