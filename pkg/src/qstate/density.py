"""
Density matrices and multi-states.

A ``DensityMatrix`` is validated once, at construction, and keeps a read-only
copy of its entries. A ``MultiState`` is an ordered tuple of density matrices
of one dimension. Nothing here mutates its inputs; every transformation
returns a new value.

Labels: operations that take state labels accept 1-based integers or, when the
multi-state was built with string labels, those strings.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg as sla
from scipy.stats import unitary_group

from errors import (
    BadLabelError,
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    TraceNotOneError,
    WeightOutOfRangeError,
)
from settings import get_settings

logger = logging.getLogger(__name__)

Label = Union[int, str]
PurityMode = Literal["pure", "mixed"]


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A d×d complex matrix that passed the state invariants."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.entries)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise DimensionMismatchError(f"Expected a non-empty square matrix, got shape {m.shape!r}")
        m = _readonly(m)
        cfg = get_settings()

        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > cfg.hermitian_tolerance:
            raise NotHermitianError("Hermitian", herm, f"Matrix is not Hermitian: max |M - M^dagger| = {herm:.3e}")

        trace_residual = float(abs(np.trace(m) - 1.0))
        if trace_residual > cfg.trace_tolerance:
            raise TraceNotOneError("unit trace", trace_residual, f"Trace differs from 1 by {trace_residual:.3e}")

        lowest = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
        if lowest < -cfg.positivity_tolerance:
            raise NotPositiveError(
                "positive semidefinite", -lowest, f"Matrix has negative eigenvalue {lowest:.3e}"
            )
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def purity(self) -> float:
        return float(np.real(np.sum(self.entries * self.entries.T)))

    def is_pure(self, atol: float = 1e-12) -> bool:
        return abs(self.purity() - 1.0) <= atol

    def rotated(self, unitary: np.ndarray) -> "DensityMatrix":
        """U rho U^dagger."""
        u = np.asarray(unitary, dtype=np.complex128)
        if u.shape != (self.dim, self.dim):
            raise DimensionMismatchError(f"Unitary of shape {u.shape!r} cannot act on dimension {self.dim}")
        return DensityMatrix(u @ self.entries @ u.conj().T)

    def conjugated(self) -> "DensityMatrix":
        """Entrywise complex conjugate (equal to the transpose for states)."""
        return DensityMatrix(self.entries.conj())

    def allclose(self, other: "DensityMatrix", atol: float = 1e-12) -> bool:
        return self.dim == other.dim and bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))


def validate(m: Union[np.ndarray, Sequence[Sequence[complex]]]) -> DensityMatrix:
    """
    Validate a candidate matrix as a quantum state.

    Raises:
        DimensionMismatchError: not a square matrix.
        NotHermitianError, TraceNotOneError, NotPositiveError: a state invariant
            fails; the exception carries the measured residual.
    """
    return DensityMatrix(np.asarray(m, dtype=np.complex128))


@dataclass(frozen=True, eq=False)
class MultiState:
    """Ordered tuple of states sharing one dimension, with optional labels."""

    states: Tuple[DensityMatrix, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if not states:
            raise DimensionMismatchError("A multi-state needs at least one state")
        dims = {s.dim for s in states}
        if len(dims) != 1:
            raise DimensionMismatchError(f"States have mixed dimensions {sorted(dims)!r}")
        object.__setattr__(self, "states", states)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != len(states):
                raise BadLabelError(f"Got {len(labels)} labels for {len(states)} states")
            if len(set(labels)) != len(labels):
                raise BadLabelError(f"Labels must be unique: {list(labels)!r}")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[Union[np.ndarray, Sequence[Sequence[complex]]]],
        labels: Optional[Sequence[str]] = None,
    ) -> "MultiState":
        return cls(tuple(validate(m) for m in matrices), None if labels is None else tuple(labels))

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[DensityMatrix]:
        return iter(self.states)

    def __getitem__(self, index: int) -> DensityMatrix:
        return self.states[index]

    def resolve(self, label: Label) -> int:
        """Map a 1-based integer label or a string label to a 0-based index."""
        if isinstance(label, (bool, np.bool_)):
            raise BadLabelError(f"Invalid state label {label!r}")
        if isinstance(label, (int, np.integer)):
            if 1 <= int(label) <= len(self.states):
                return int(label) - 1
            raise BadLabelError(f"State label {int(label)} out of range 1..{len(self.states)}")
        if isinstance(label, str):
            if self.labels is not None and label in self.labels:
                return self.labels.index(label)
            if label.strip().isdigit():
                return self.resolve(int(label))
            raise BadLabelError(f"Unknown state label {label!r}")
        raise BadLabelError(f"Invalid state label {label!r}")

    def resolve_all(self, seq: Sequence[Label]) -> List[int]:
        return [self.resolve(x) for x in seq]

    def matrices(self) -> np.ndarray:
        """Stacked entries, shape (n, d, d)."""
        return np.stack([s.entries for s in self.states])

    def select(self, seq: Sequence[Label]) -> "MultiState":
        idx = self.resolve_all(seq)
        labels = None if self.labels is None else tuple(self.labels[i] for i in idx)
        if labels is not None and len(set(labels)) != len(labels):
            labels = None
        return MultiState(tuple(self.states[i] for i in idx), labels)

    def rotated(self, unitary: np.ndarray) -> "MultiState":
        return MultiState(tuple(s.rotated(unitary) for s in self.states), self.labels)

    def conjugated(self) -> "MultiState":
        return MultiState(tuple(s.conjugated() for s in self.states), self.labels)

    def label_of(self, index: int) -> str:
        return self.labels[index] if self.labels is not None else str(index + 1)


def _check_weight(weight: float) -> float:
    w = float(weight)
    if not 0.0 <= w <= 1.0:
        raise WeightOutOfRangeError(f"Weight must lie in [0, 1], got {weight!r}")
    return w


def mix(a: DensityMatrix, b: DensityMatrix, weight: float) -> DensityMatrix:
    """weight * a + (1 - weight) * b."""
    w = _check_weight(weight)
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Cannot mix dimensions {a.dim} and {b.dim}")
    return DensityMatrix(w * a.entries + (1.0 - w) * b.entries)


def mix_multistates(first: MultiState, second: MultiState, weight: float) -> MultiState:
    """Componentwise convex combination of two multi-states of equal length."""
    if len(first) != len(second):
        raise DimensionMismatchError(f"Cannot mix multi-states of lengths {len(first)} and {len(second)}")
    return MultiState(tuple(mix(x, y, weight) for x, y in zip(first, second)))


def direct_sum(a: DensityMatrix, b: DensityMatrix, weight: float) -> DensityMatrix:
    """Block-diagonal state weight*a (+) (1-weight)*b of dimension d_a + d_b."""
    w = _check_weight(weight)
    return DensityMatrix(sla.block_diag(w * a.entries, (1.0 - w) * b.entries))


def _rng(seed: Optional[int], rng: Optional[np.random.Generator]) -> np.random.Generator:
    if rng is not None:
        return rng
    return np.random.default_rng(get_settings().seed if seed is None else seed)


def random_state(
    d: int,
    purity_mode: PurityMode = "mixed",
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
) -> DensityMatrix:
    """
    Draw a random state.

    Pure mode normalizes a complex Gaussian vector (Haar-distributed). Mixed
    mode uses G G^dagger / Tr for a complex Gaussian G, which is full rank with
    probability one. Pass ``rng`` to draw several states from one stream.
    """
    if int(d) < 2:
        raise DimensionMismatchError(f"Random states need d >= 2, got {d!r}")
    if purity_mode not in ("pure", "mixed"):
        raise ValueError(f"Unknown purity mode: {purity_mode!r}")
    gen = _rng(seed, rng)
    d = int(d)
    if purity_mode == "pure":
        v = gen.standard_normal(d) + 1j * gen.standard_normal(d)
        v = v / np.linalg.norm(v)
        return DensityMatrix(np.outer(v, v.conj()))
    g = gen.standard_normal((d, d)) + 1j * gen.standard_normal((d, d))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.real(np.trace(m)))


def random_multistate(
    d: int,
    n: int,
    purity_mode: PurityMode = "mixed",
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
) -> MultiState:
    if int(n) < 1:
        raise DimensionMismatchError(f"A multi-state needs n >= 1, got {n!r}")
    gen = _rng(seed, rng)
    return MultiState(tuple(random_state(d, purity_mode, rng=gen) for _ in range(int(n))))


def random_unitary(
    d: int,
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
    special: bool = False,
) -> np.ndarray:
    """Haar-random d×d unitary; ``special=True`` rescales to determinant 1."""
    gen = _rng(seed, rng)
    u = unitary_group.rvs(int(d), random_state=gen)
    if special:
        u = u / np.linalg.det(u) ** (1.0 / int(d))
    return u
