"""
Numerical settings shared by every package.

Defaults are the documented tolerances and search sizes. Any field can be
overridden from the environment, or from a ``.env`` file in the working
directory, using the ``MULTISTATE_`` prefix and the upper-cased field name:

    MULTISTATE_SPHERE_GRID_POINTS=40000
    MULTISTATE_WITNESS_TOLERANCE=1e-9
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv

TOOL_VERSION = "1.0.0"
ENV_PREFIX = "MULTISTATE_"


@dataclass(frozen=True)
class Settings:
    hermitian_tolerance: float = 1e-12
    trace_tolerance: float = 1e-12
    positivity_tolerance: float = 1e-10
    rank_tolerance_scale: float = 1e-8
    witness_tolerance: float = 1e-10
    sphere_grid_points: int = 20000
    refine_starts: int = 20
    refine_xatol: float = 1e-10
    sign_enumeration_cap: int = 12
    method_agreement: float = 1e-6
    method_disagreement: float = 1e-4
    real_reference_grid: int = 4096
    seed: int = 343

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def settings_from_env(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Build Settings from an environment mapping.

    Args:
        environ: mapping to read; defaults to ``os.environ``.

    Raises:
        ValueError: if an override cannot be parsed as the field's type.
    """
    env = os.environ if environ is None else environ
    defaults = Settings()
    overrides: Dict[str, Any] = {}
    for f in fields(Settings):
        key = ENV_PREFIX + f.name.upper()
        raw = env.get(key)
        if raw is None or not raw.strip():
            continue
        caster = type(getattr(defaults, f.name))
        try:
            value = caster(raw) if caster is not int else int(float(raw))
        except ValueError as exc:
            raise ValueError(f"Invalid value for {key}: {raw!r}") from exc
        if value < 0 or (value == 0 and f.name != "seed"):
            raise ValueError(f"{key} must be positive, got {raw!r}")
        overrides[f.name] = value
    return replace(defaults, **overrides)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings (``.env`` is read once)."""
    load_dotenv()
    return settings_from_env()
