"""
Instruments, measurements and sub-channel discrimination tasks.

A task is an instrument {T_a} (completely positive maps in Kraus form whose
sum is trace preserving) paired with a measurement {E_a}; the success
probability for input rho is sum_a Tr[T_a(rho) E_a].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg as sla
from scipy.stats import unitary_group

from errors import (
    DimensionMismatchError,
    InternalDisagreementError,
    InvalidMeasurementError,
    LabelCountMismatchError,
    NotTracePreservingError,
)
from qstate.bloch import IDENTITY2, PAULIS
from qstate.density import DensityMatrix
from settings import get_settings

COMPLETENESS_TOLERANCE = 1e-10
PROBABILITY_TOLERANCE = 1e-10

KrausMap = Tuple[np.ndarray, ...]


def _as_square(m: Any, what: str) -> np.ndarray:
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"{what} must be a square matrix, got shape {a.shape!r}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Instrument:
    maps: Tuple[KrausMap, ...]

    def __post_init__(self) -> None:
        if not self.maps:
            raise LabelCountMismatchError("An instrument needs at least one map")
        maps = tuple(
            tuple(_as_square(k, f"Kraus operator of map {a}") for k in kraus) for a, kraus in enumerate(self.maps)
        )
        dims = {k.shape[0] for kraus in maps for k in kraus}
        if any(len(kraus) == 0 for kraus in maps):
            raise NotTracePreservingError("Every map needs at least one Kraus operator")
        if len(dims) != 1:
            raise DimensionMismatchError(f"Kraus operators have mixed dimensions {sorted(dims)!r}")
        d = dims.pop()
        total = sum(k.conj().T @ k for kraus in maps for k in kraus)
        residual = float(np.max(np.abs(total - np.eye(d))))
        if residual > COMPLETENESS_TOLERANCE:
            raise NotTracePreservingError(f"sum K^dagger K differs from the identity by {residual:.3e}")
        object.__setattr__(self, "maps", maps)

    @property
    def dim(self) -> int:
        return int(self.maps[0][0].shape[0])

    @property
    def label_count(self) -> int:
        return len(self.maps)

    def apply(self, rho: DensityMatrix, label: int) -> np.ndarray:
        """T_a(rho) = sum_m K rho K^dagger (subnormalized)."""
        return sum(k @ rho.entries @ k.conj().T for k in self.maps[label])

    def to_dict(self) -> Dict[str, Any]:
        return {"maps": [[_encode(k) for k in kraus] for kraus in self.maps]}


@dataclass(frozen=True, eq=False)
class Measurement:
    effects: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if not self.effects:
            raise InvalidMeasurementError("A measurement needs at least one effect")
        effects = tuple(_as_square(e, "Effect") for e in self.effects)
        if len({e.shape[0] for e in effects}) != 1:
            raise DimensionMismatchError("Effects have mixed dimensions")
        for a, e in enumerate(effects):
            herm = float(np.max(np.abs(e - e.conj().T)))
            if herm > COMPLETENESS_TOLERANCE:
                raise InvalidMeasurementError(f"Effect {a} is not Hermitian: residual {herm:.3e}")
            lowest = float(np.linalg.eigvalsh(0.5 * (e + e.conj().T))[0])
            if lowest < -COMPLETENESS_TOLERANCE:
                raise InvalidMeasurementError(f"Effect {a} has negative eigenvalue {lowest:.3e}")
        d = effects[0].shape[0]
        residual = float(np.max(np.abs(sum(effects) - np.eye(d))))
        if residual > COMPLETENESS_TOLERANCE:
            raise InvalidMeasurementError(f"Effects sum to the identity only within {residual:.3e}")
        object.__setattr__(self, "effects", effects)

    @property
    def dim(self) -> int:
        return int(self.effects[0].shape[0])

    @property
    def label_count(self) -> int:
        return len(self.effects)

    def to_dict(self) -> Dict[str, Any]:
        return {"effects": [_encode(e) for e in self.effects]}


def _encode(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def p_succ(rho: DensityMatrix, t: Instrument, m: Measurement) -> float:
    """
    sum_a Tr[T_a(rho) E_a].

    Raises:
        DimensionMismatchError: state, instrument and measurement dimensions differ.
        LabelCountMismatchError: the instrument and measurement have different label counts.
    """
    if not rho.dim == t.dim == m.dim:
        raise DimensionMismatchError(f"Dimensions differ: state {rho.dim}, instrument {t.dim}, measurement {m.dim}")
    if t.label_count != m.label_count:
        raise LabelCountMismatchError(f"Instrument has {t.label_count} labels, measurement has {m.label_count}")
    value = sum(float(np.real(np.sum(t.apply(rho, a) * e.T))) for a, e in enumerate(m.effects))
    if not -PROBABILITY_TOLERANCE <= value <= 1.0 + PROBABILITY_TOLERANCE:
        raise InternalDisagreementError(f"Success probability {value!r} outside [0, 1]")
    return float(min(max(value, 0.0), 1.0))


# Fixture tasks (qubits).


def identity_task() -> Tuple[Instrument, Measurement]:
    return Instrument(((IDENTITY2,),)), Measurement((IDENTITY2,))


def halving_task() -> Tuple[Instrument, Measurement]:
    """Two branches that each halve the state; guessing is a coin flip."""
    k = IDENTITY2 / np.sqrt(2.0)
    return Instrument(((k,), (k,))), Measurement((IDENTITY2 / 2.0, IDENTITY2 / 2.0))


def depolarizing_task(effects: Optional[Sequence[np.ndarray]] = None) -> Tuple[Instrument, Measurement]:
    """Both branches output 1/4 whatever the input."""
    units = np.eye(2)
    kraus = tuple(np.outer(units[i], units[j]) / 2.0 for i in range(2) for j in range(2))
    e = effects if effects is not None else (np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
    return Instrument((kraus, kraus)), Measurement(tuple(e))


def dephasing_vs_identity_task() -> Tuple[Instrument, Measurement]:
    """Branch 0 is the identity, branch 1 dephases in the computational basis; measured in the |+>, |-> basis."""
    s = 1.0 / np.sqrt(2.0)
    plus = np.full((2, 2), 0.5)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]])
    instrument = Instrument(((s * IDENTITY2,), (s * np.diag([1.0, 0.0]), s * np.diag([0.0, 1.0]))))
    return instrument, Measurement((plus, minus))


def projective_task(direction: Sequence[float]) -> Tuple[Instrument, Measurement]:
    """
    Branches are the projectors onto +-n; only branch 0 is rewarded.

    p_succ = (1 + <r, n>) / 2.
    """
    n = np.asarray(direction, dtype=np.float64)
    norm = float(np.linalg.norm(n))
    if norm == 0.0:
        raise ValueError("Task direction must be nonzero")
    n = n / norm
    ns = np.einsum("k,kij->ij", n, PAULIS)
    up, down = 0.5 * (IDENTITY2 + ns), 0.5 * (IDENTITY2 - ns)
    return Instrument(((up,), (down,))), Measurement((IDENTITY2, np.zeros((2, 2))))


def y_task() -> Tuple[Instrument, Measurement]:
    """Projective task along sigma_y: success (1 + r_y) / 2, best real 1/2."""
    return projective_task([0.0, 1.0, 0.0])


# Random tasks.


def _generator(seed: Optional[int], rng: Optional[np.random.Generator]) -> np.random.Generator:
    if rng is not None:
        return rng
    return np.random.default_rng(get_settings().seed if seed is None else seed)


def random_instrument(
    d: int = 2,
    labels: int = 2,
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
    max_kraus: int = 2,
) -> Instrument:
    """
    Random instrument with 1..max_kraus Kraus operators per label.

    The stacked Kraus operators form the first d columns of a Haar unitary,
    so they are an isometry and the total map is trace preserving.
    """
    gen = _generator(seed, rng)
    counts = gen.integers(1, max_kraus + 1, size=labels)
    total = int(np.sum(counts))
    v = unitary_group.rvs(total * d, random_state=gen)[:, :d]
    blocks = [v[i * d : (i + 1) * d, :] for i in range(total)]
    maps, start = [], 0
    for c in counts:
        maps.append(tuple(blocks[start : start + int(c)]))
        start += int(c)
    return Instrument(tuple(maps))


def random_measurement(
    d: int = 2,
    outcomes: int = 2,
    seed: Optional[int] = None,
    *,
    rng: Optional[np.random.Generator] = None,
) -> Measurement:
    """Random POVM E_a = S^{-1/2} A_a S^{-1/2} from random positive A_a with S = sum A_a."""
    gen = _generator(seed, rng)
    parts = []
    for _ in range(outcomes):
        g = gen.standard_normal((d, d)) + 1j * gen.standard_normal((d, d))
        parts.append(g @ g.conj().T)
    s_inv_half = sla.inv(sla.sqrtm(sum(parts)))
    effects = []
    for a in parts:
        e = s_inv_half @ a @ s_inv_half.conj().T
        effects.append(0.5 * (e + e.conj().T))
    return Measurement(tuple(effects))
