"""
Reconstruction of qubit Bargmann invariants from two-state overlaps.

Overlaps determine every invariant up to complex conjugation. For orders
3 to 5 closed-form polynomials give the conjugate pair directly; longer
sequences go through a Bloch-vector realization of the overlap table.
"""

from .certificates import (
    QuadraticCertificate,
    check_realizable,
    conjugate_pair,
    quadratic_certificate,
    realize_bloch_vectors,
    reconstruct_by_realization,
    reconstruct_from_overlaps,
)
from .polynomials import a0_b0_explicit, a0_polynomial, b0_terms, overlap_polynomials, p3_q3
from .tables import OverlapTable

__all__ = [
    "QuadraticCertificate",
    "check_realizable",
    "conjugate_pair",
    "quadratic_certificate",
    "realize_bloch_vectors",
    "reconstruct_by_realization",
    "reconstruct_from_overlaps",
    "a0_b0_explicit",
    "a0_polynomial",
    "b0_terms",
    "overlap_polynomials",
    "p3_q3",
    "OverlapTable",
]
