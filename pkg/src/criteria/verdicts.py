"""
Verdict records shared by every decision procedure and witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from errors import InternalDisagreementError

IMAGINARITY = "imaginarity"
COHERENCE = "coherence"

HAS_RESOURCE = "has-resource"
RESOURCE_FREE = "resource-free"
INCONCLUSIVE = "inconclusive-necessary-only"


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of a test for one resource.

    ``evidence`` is compared against ``threshold``: a rank test uses the first
    singular value beyond the allowed rank, a witness uses the absolute value of
    the witnessing quantity. ``source`` names the operation that decided.
    """

    property: str
    decision: str
    evidence: float
    threshold: float
    source: str
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.property not in (IMAGINARITY, COHERENCE):
            raise ValueError(f"Unknown resource property: {self.property!r}")
        if self.decision not in (HAS_RESOURCE, RESOURCE_FREE, INCONCLUSIVE):
            raise ValueError(f"Unknown decision: {self.decision!r}")
        if self.decision == HAS_RESOURCE and not self.evidence > self.threshold:
            raise InternalDisagreementError(
                f"{self.source}: has-resource with evidence {self.evidence:.3e} <= threshold {self.threshold:.3e}"
            )

    @property
    def margin(self) -> float:
        return float(self.evidence - self.threshold)

    @property
    def has_resource(self) -> bool:
        return self.decision == HAS_RESOURCE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "decision": self.decision,
            "evidence": float(self.evidence),
            "threshold": float(self.threshold),
            "margin": self.margin,
            "source": self.source,
            "details": dict(self.details),
        }


def rank_verdict(
    *,
    prop: str,
    singular_value: float,
    tolerance: float,
    rank: int,
    bound: int,
    source: str,
    exact: bool,
    details: Optional[Dict[str, Any]] = None,
) -> Verdict:
    """
    Verdict from "rank > bound implies the resource".

    When ``exact`` the converse also holds and a low rank means resource-free.
    """
    info = {"rank": int(rank), "rank_bound": int(bound), "rank_tolerance": float(tolerance)}
    info.update(details or {})
    if singular_value > tolerance:
        decision = HAS_RESOURCE
    else:
        decision = RESOURCE_FREE if exact else INCONCLUSIVE
    return Verdict(prop, decision, float(singular_value), float(tolerance), source, info)
