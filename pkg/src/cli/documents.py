"""
JSON documents read and written by the command-line tool.

Multi-state document:

    {"dim": 2, "states": [[[[re, im], [re, im]], [[re, im], [re, im]]], ...], "labels": ["a", ...]}

Overlap document:

    {"overlaps": [[1.0, 0.5, ...], ...], "labels": [...]}

Parse errors carry a JSONPath-like location ("$.states[1][0][1]") so a bad
entry can be found in a large file. Floats are written with Python's shortest
round-trip representation, so a written document parses back to bit-identical
matrices.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from errors import DocumentValidationError, MultiStateError, ParseError, StateValidationError
from qstate.density import DensityMatrix, MultiState
from reconstruct.tables import OverlapTable
from settings import TOOL_VERSION, get_settings


def parse_json_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc


def _number(value: Any, location: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number, got {value!r}", location)
    x = float(value)
    if not math.isfinite(x):
        raise ParseError(f"number must be finite, got {value!r}", location)
    return x


def _complex(value: Any, location: str) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"expected an [re, im] pair, got {value!r}", location)
    return complex(_number(value[0], f"{location}[0]"), _number(value[1], f"{location}[1]"))


def _list(value: Any, location: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", location)
    return value


def _labels(obj: Dict[str, Any], count: int) -> Optional[Tuple[str, ...]]:
    if "labels" not in obj or obj["labels"] is None:
        return None
    raw = _list(obj["labels"], "$.labels")
    for i, x in enumerate(raw):
        if not isinstance(x, str):
            raise ParseError(f"label must be a string, got {x!r}", f"$.labels[{i}]")
    if len(raw) != count:
        raise DocumentValidationError(f"{len(raw)} labels for {count} entries", "$.labels")
    if len(set(raw)) != len(raw):
        raise DocumentValidationError(f"labels must be unique: {raw!r}", "$.labels")
    return tuple(raw)


def _object(obj: Any) -> Dict[str, Any]:
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}", "$")
    return obj


@dataclass(frozen=True, eq=False)
class MultiStateDocument:
    dim: int
    states: Tuple[np.ndarray, ...]
    labels: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_json(cls, obj: Any) -> "MultiStateDocument":
        """
        Raises:
            ParseError: the structure or an entry is malformed.
            DocumentValidationError: the document is well formed but inconsistent.
        """
        obj = _object(obj)
        if "dim" not in obj:
            raise ParseError("missing field 'dim'", "$")
        dim = obj["dim"]
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 2:
            raise DocumentValidationError(f"dim must be an integer >= 2, got {dim!r}", "$.dim")
        if "states" not in obj:
            raise ParseError("missing field 'states'", "$")
        raw_states = _list(obj["states"], "$.states")
        if not raw_states:
            raise DocumentValidationError("at least one state is required", "$.states")
        states = []
        for s, raw in enumerate(raw_states):
            loc = f"$.states[{s}]"
            rows = _list(raw, loc)
            if len(rows) != dim:
                raise DocumentValidationError(f"expected {dim} rows, got {len(rows)}", loc)
            matrix = np.zeros((dim, dim), dtype=np.complex128)
            for i, row in enumerate(rows):
                entries = _list(row, f"{loc}[{i}]")
                if len(entries) != dim:
                    raise DocumentValidationError(f"expected {dim} entries, got {len(entries)}", f"{loc}[{i}]")
                for j, entry in enumerate(entries):
                    matrix[i, j] = _complex(entry, f"{loc}[{i}][{j}]")
            states.append(matrix)
        return cls(dim, tuple(states), _labels(obj, len(states)))

    @classmethod
    def from_multistate(cls, ms: MultiState) -> "MultiStateDocument":
        return cls(ms.dim, tuple(np.array(s.entries) for s in ms), ms.labels)

    def to_multistate(self) -> MultiState:
        """
        Raises:
            DocumentValidationError: a matrix fails a state invariant; the location names the state.
        """
        validated = []
        for s, m in enumerate(self.states):
            try:
                validated.append(DensityMatrix(m))
            except StateValidationError as exc:
                raise DocumentValidationError(str(exc), f"$.states[{s}]") from exc
        return MultiState(tuple(validated), self.labels)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "dim": self.dim,
            "states": [[[[float(z.real), float(z.imag)] for z in row] for row in m] for m in self.states],
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


def parse_overlap_table(obj: Any) -> OverlapTable:
    obj = _object(obj)
    if "overlaps" not in obj:
        raise ParseError("missing field 'overlaps'", "$")
    rows = _list(obj["overlaps"], "$.overlaps")
    if not rows:
        raise DocumentValidationError("overlap table is empty", "$.overlaps")
    table = []
    for i, row in enumerate(rows):
        entries = _list(row, f"$.overlaps[{i}]")
        if len(entries) != len(rows):
            raise DocumentValidationError(f"expected {len(rows)} entries, got {len(entries)}", f"$.overlaps[{i}]")
        table.append([_number(x, f"$.overlaps[{i}][{j}]") for j, x in enumerate(entries)])
    labels = _labels(obj, len(rows))
    try:
        return OverlapTable(np.array(table), labels)
    except MultiStateError as exc:
        raise DocumentValidationError(str(exc), "$.overlaps") from exc


def _check_finite(value: Any, location: str) -> None:
    if isinstance(value, float) and not math.isfinite(value):
        raise DocumentValidationError(f"non-finite number {value!r}", location)
    if isinstance(value, dict):
        for k, v in value.items():
            _check_finite(v, f"{location}.{k}")
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _check_finite(v, f"{location}[{i}]")


def _check_sources(value: Any, location: str) -> None:
    if isinstance(value, dict):
        if "decision" in value and not value.get("source"):
            raise DocumentValidationError("verdict does not name the operation that produced it", location)
        for k, v in value.items():
            _check_sources(v, f"{location}.{k}")
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _check_sources(v, f"{location}[{i}]")


def provenance(*, seed: Optional[int] = None, tolerance: Optional[float] = None) -> Dict[str, Any]:
    return {
        "tool_version": TOOL_VERSION,
        "settings": get_settings().as_dict(),
        "seed": seed,
        "tolerance": tolerance,
    }


@dataclass(frozen=True)
class ReportDocument:
    """Machine-readable result of one command."""

    command: str
    payload: Dict[str, Any]
    provenance: Dict[str, Any] = field(default_factory=provenance)

    def __post_init__(self) -> None:
        _check_finite(self.payload, "$.payload")
        _check_sources(self.payload, "$.payload")

    def to_json(self) -> Dict[str, Any]:
        return {"command": self.command, "payload": self.payload, "provenance": self.provenance}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False)


def load_document(path: Optional[str], stdin_text: Optional[str] = None) -> Any:
    """Parsed JSON from ``path``, or from ``stdin_text`` when no path is given."""
    if path is None:
        return parse_json_text(stdin_text or "")
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc.strerror}", str(p)) from exc
    return parse_json_text(text)


def write_text(path: str, text: str) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text + "\n", encoding="utf-8")


def complex_pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]
