"""
Quantum state values.

- DensityMatrix / MultiState with validation on construction
- Qubit Bloch vectors and generalized Gell-Mann coordinates
- The SU(2) -> SO(3) double cover and its inverse
- Seeded random states and unitaries
"""

from .bloch import (
    GELLMANN,
    GELLMANN_LAMBDA,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    PAULIS,
    QUBIT_PAULI,
    BlochVector,
    bloch_coordinates,
    from_bloch,
    multistate_from_bloch,
    to_bloch,
)
from .density import (
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
from .gellmann import (
    basis_operators,
    from_generalized_bloch,
    generalized_gellmann,
    lambda_matrices,
    overlap_to_inner_product,
    to_generalized_bloch,
)
from .rotations import (
    Rotation3,
    random_rotation,
    rotation_about,
    so3_to_su2,
    su2_to_so3,
    to_special_unitary,
)

__all__ = [
    "GELLMANN",
    "GELLMANN_LAMBDA",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "PAULIS",
    "QUBIT_PAULI",
    "BlochVector",
    "bloch_coordinates",
    "from_bloch",
    "multistate_from_bloch",
    "to_bloch",
    "DensityMatrix",
    "MultiState",
    "direct_sum",
    "mix",
    "mix_multistates",
    "random_multistate",
    "random_state",
    "random_unitary",
    "validate",
    "basis_operators",
    "from_generalized_bloch",
    "generalized_gellmann",
    "lambda_matrices",
    "overlap_to_inner_product",
    "to_generalized_bloch",
    "Rotation3",
    "random_rotation",
    "rotation_about",
    "so3_to_su2",
    "su2_to_so3",
    "to_special_unitary",
]
