"""
Robustness quantifiers for qubit states and multi-states.
"""

from .robustness import (
    BOTH_AGREE,
    CANDIDATE_ENUMERATION,
    GRID_REFINE,
    ProgramComparison,
    QuantifierResult,
    c_r1,
    c_r1_bounds,
    c_r1_overlap_objective,
    im_r1,
    im_r1_bounds,
    im_r1_overlap_objective,
    im_r1_sdp_form,
)
from .single import coh_robustness_single, im_robustness_single, transpose_distance
from .sphere import SphereSearchConfig, fibonacci_sphere, minimize_on_sphere

__all__ = [
    "BOTH_AGREE",
    "CANDIDATE_ENUMERATION",
    "GRID_REFINE",
    "ProgramComparison",
    "QuantifierResult",
    "c_r1",
    "c_r1_bounds",
    "c_r1_overlap_objective",
    "im_r1",
    "im_r1_bounds",
    "im_r1_overlap_objective",
    "im_r1_sdp_form",
    "coh_robustness_single",
    "im_robustness_single",
    "transpose_distance",
    "SphereSearchConfig",
    "fibonacci_sphere",
    "minimize_on_sphere",
]
