"""
Bargmann invariants, overlaps and Gram matrices.

Everything here is unitary invariant: invariants and Gram entries are
functions of the multi-state's orbit under a common unitary.
"""

from .gram import GramMatrix, default_rank_tolerance, gram, gram_from_overlaps, numerical_rank
from .invariants import BargmannInvariant, invariant, invariants, overlap, pairwise_overlaps
from .recursion import (
    QubitProductState,
    product_state,
    qubit_invariant_recursive,
    triple_product,
    triple_product_pairing,
    vector_triple_product,
)

__all__ = [
    "GramMatrix",
    "default_rank_tolerance",
    "gram",
    "gram_from_overlaps",
    "numerical_rank",
    "BargmannInvariant",
    "invariant",
    "invariants",
    "overlap",
    "pairwise_overlaps",
    "QubitProductState",
    "product_state",
    "qubit_invariant_recursive",
    "triple_product",
    "triple_product_pairing",
    "vector_triple_product",
]
