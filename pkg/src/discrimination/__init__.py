"""
Sub-channel discrimination tasks and the advantage of imaginarity in them.
"""

from .advantage import (
    MultiTaskReport,
    OptimalFrame,
    TaskSearchResult,
    advantage_ratio,
    affine_coefficients,
    best_real_reference,
    frame_to_y,
    multi_task_average,
    optimal_frame,
    search_projective_tasks,
)
from .tasks import (
    Instrument,
    Measurement,
    dephasing_vs_identity_task,
    depolarizing_task,
    halving_task,
    identity_task,
    p_succ,
    projective_task,
    random_instrument,
    random_measurement,
    y_task,
)

__all__ = [
    "MultiTaskReport",
    "OptimalFrame",
    "TaskSearchResult",
    "advantage_ratio",
    "affine_coefficients",
    "best_real_reference",
    "frame_to_y",
    "multi_task_average",
    "optimal_frame",
    "search_projective_tasks",
    "Instrument",
    "Measurement",
    "dephasing_vs_identity_task",
    "depolarizing_task",
    "halving_task",
    "identity_task",
    "p_succ",
    "projective_task",
    "random_instrument",
    "random_measurement",
    "y_task",
]
