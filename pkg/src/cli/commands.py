"""
Subcommand implementations.

Each ``cmd_*`` takes parsed inputs and returns a ``ReportDocument`` (or a
document to emit); printing and exit codes live in ``app_cli``.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from bargmann.gram import GramMatrix, gram
from bargmann.invariants import invariant
from cli.documents import MultiStateDocument, ReportDocument, complex_pair, provenance
from criteria.fixtures import FIXTURE_NAMES, run_fixture_checks
from criteria.high_dim import high_dim_coherence_necessary, high_dim_imaginarity_necessary
from criteria.qubit_tests import qubit_coherence_test, qubit_imaginarity_test
from criteria.real_basis import construct_real_basis
from criteria.witnesses import (
    imaginarity_witness,
    permutation_equality_witness,
    third_order_scan,
    weak_commutativity_witness,
)
from errors import BadFlagError, DimensionMismatchError, InternalDisagreementError
from qstate.density import Label, MultiState, random_multistate
from quantifiers.robustness import c_r1, c_r1_bounds, im_r1, im_r1_bounds
from quantifiers.single import coh_robustness_single, im_robustness_single
from quantifiers.sphere import SphereSearchConfig
from reconstruct.certificates import quadratic_certificate, reconstruct_by_realization, reconstruct_from_overlaps
from reconstruct.polynomials import SUPPORTED_ORDERS, overlap_polynomials
from reconstruct.tables import OverlapTable

logger = logging.getLogger(__name__)


def _gram_dict(g: GramMatrix) -> Dict[str, Any]:
    return {
        "entries": g.entries.tolist(),
        "singular_values": [float(x) for x in g.singular_values],
        "rank": g.numerical_rank,
        "rank_tolerance": g.rank_tolerance,
        "basis": g.basis,
    }


def _quantifiers(ms: MultiState, g: GramMatrix, config: Optional[SphereSearchConfig]) -> Dict[str, Any]:
    im_lo, im_hi = im_r1_bounds(g)
    c_lo, c_hi = c_r1_bounds(g)
    return {
        "im_r1": im_r1(ms, config).to_dict(),
        "c_r1": c_r1(ms, config).to_dict(),
        "im_r1_bounds": [im_lo, im_hi],
        "c_r1_bounds": [c_lo, c_hi],
        "single_state": [
            {"label": ms.label_of(i), "im_r": im_robustness_single(s), "c_r": coh_robustness_single(s)}
            for i, s in enumerate(ms)
        ],
    }


def _real_basis_dict(ms: MultiState, tolerance: Optional[float], rank_margin: float) -> Dict[str, Any]:
    try:
        cert = construct_real_basis(ms, tolerance)
    except InternalDisagreementError as exc:
        logger.warning("real-basis certificate failed: %s", exc)
        return {"certificate_failed": True, "error": str(exc), "rank_margin": rank_margin}
    return {
        "unitary": [[complex_pair(z) for z in row] for row in cert.unitary],
        "residual": cert.residual,
        "residual_bound": cert.bound,
        "exact": cert.exact,
        "certificate_failed": False,
        "rank_margin": rank_margin,
    }


def cmd_analyze(
    doc: MultiStateDocument,
    *,
    tolerance: Optional[float] = None,
    quantify: bool = False,
    config: Optional[SphereSearchConfig] = None,
) -> ReportDocument:
    ms = doc.to_multistate()
    g = gram(ms, tolerance)
    payload: Dict[str, Any] = {"dim": ms.dim, "count": len(ms), "gram": _gram_dict(g)}
    if ms.dim == 2:
        im_verdict = qubit_imaginarity_test(ms, tolerance)
        coh_verdict = qubit_coherence_test(ms, tolerance)
    else:
        im_verdict = high_dim_imaginarity_necessary(ms, tolerance)
        coh_verdict = high_dim_coherence_necessary(ms, tolerance)
    payload["verdicts"] = {"imaginarity": im_verdict.to_dict(), "coherence": coh_verdict.to_dict()}
    payload["witnesses"] = {"third_order": third_order_scan(ms, rank_tol=tolerance).to_dict()}

    if ms.dim == 2 and not im_verdict.has_resource:
        payload["real_basis"] = _real_basis_dict(ms, tolerance, im_verdict.margin)
    if quantify:
        if ms.dim == 2:
            payload["quantifiers"] = _quantifiers(ms, g, config)
        else:
            logger.warning("quantifiers are defined for qubits; skipped for d=%d", ms.dim)
    return ReportDocument("analyze", payload, provenance(tolerance=tolerance))


def cmd_invariant(doc: MultiStateDocument, seq: Sequence[Label]) -> ReportDocument:
    ms = doc.to_multistate()
    inv = invariant(ms, seq)
    payload: Dict[str, Any] = {
        "sequence": [str(x) for x in inv.index_sequence],
        "order": inv.order,
        "value": complex_pair(inv.value),
        "real": inv.real,
        "imag": inv.imag,
    }
    if ms.dim == 2:
        payload["quadratic_certificate"] = quadratic_certificate(ms, seq).to_dict()
    return ReportDocument("invariant", payload)


def cmd_quantify(doc: MultiStateDocument, config: Optional[SphereSearchConfig] = None) -> ReportDocument:
    ms = doc.to_multistate()
    if ms.dim != 2:
        raise DimensionMismatchError(f"quantify needs qubit states, got d={ms.dim}")
    return ReportDocument("quantify", _quantifiers(ms, gram(ms), config))


def cmd_witness(
    doc: MultiStateDocument,
    seq: Sequence[Label],
    perm: Optional[Sequence[int]] = None,
    tolerance: Optional[float] = None,
) -> ReportDocument:
    """
    Invariant witnesses for one sequence.

    With ``perm`` the permutation-equality witness runs; otherwise the
    imaginarity witness runs, plus the weak-commutativity witness for triples.
    """
    ms = doc.to_multistate()
    verdicts = []
    if perm is not None:
        verdicts.append(permutation_equality_witness(ms, seq, perm, tolerance))
    else:
        verdicts.append(imaginarity_witness(ms, seq, tolerance))
        if len(seq) == 3:
            verdicts.append(weak_commutativity_witness(ms, *seq, tol=tolerance))
    return ReportDocument(
        "witness", {"verdicts": [v.to_dict() for v in verdicts]}, provenance(tolerance=tolerance)
    )


def cmd_reproduce(names: Optional[Sequence[str]] = None) -> Tuple[ReportDocument, int]:
    """
    Run fixture checks; ``None`` runs every fixture.

    Returns the report and the exit code (0 when every check passes, 1 otherwise).
    """
    selected = list(FIXTURE_NAMES) if names is None else list(names)
    fixtures: Dict[str, List[Dict[str, Any]]] = {}
    failed = 0
    for name in selected:
        outcomes = run_fixture_checks(name)
        fixtures[name] = [o.to_dict() for o in outcomes]
        failed += sum(1 for o in outcomes if not o.passed)
    payload = {"fixtures": fixtures, "failed": failed, "passed": failed == 0}
    return ReportDocument("reproduce", payload), 0 if failed == 0 else 1


def cmd_random(dim: int, count: int, *, pure: bool = False, seed: Optional[int] = None) -> MultiStateDocument:
    if dim < 2:
        raise BadFlagError(f"--dim must be at least 2, got {dim!r}")
    if count < 1:
        raise BadFlagError(f"--count must be at least 1, got {count!r}")
    ms = random_multistate(dim, count, "pure" if pure else "mixed", seed)
    return MultiStateDocument.from_multistate(ms)


def cmd_reconstruct(table: OverlapTable, seq: Optional[Sequence[Label]] = None) -> ReportDocument:
    """
    Invariant and its conjugate from an overlap table.

    Orders 3 to 5 use the closed-form polynomials; other orders factorize the
    Gram matrix into Bloch vectors.
    """
    idx = table.resolve_all(seq)
    payload: Dict[str, Any] = {"sequence": [str(i + 1) for i in idx] if seq is None else [str(x) for x in seq]}
    if len(idx) in SUPPORTED_ORDERS:
        roots = reconstruct_from_overlaps(table, seq)
        p, q = overlap_polynomials(table, seq)
        payload.update({"method": "overlap-polynomials", "P": p, "Q": q})
    else:
        roots = reconstruct_by_realization(table, seq)
        payload["method"] = "realization"
    payload["roots"] = [complex_pair(z) for z in roots]
    return ReportDocument("reconstruct", payload)


# Human-readable output.


def _scalar(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, list) and len(value) == 2 and all(isinstance(x, float) for x in value):
        re, im = value
        return f"{re:.12g} {'-' if im < 0 else '+'} {abs(im):.12g}i"
    return str(value)


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    out: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and not _is_leaf(item):
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, indent + 1))
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for i, item in enumerate(value):
            if _is_leaf(item):
                out.append(f"{pad}[{i}] {_scalar(item)}")
            else:
                out.append(f"{pad}[{i}]")
                out.extend(_lines(item, indent + 1))
    else:
        out.append(f"{pad}{_scalar(value)}")
    return out


def _is_leaf(value: Any) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(isinstance(x, (int, float, str, bool)) or x is None for x in value)
    return True


def render_report(report: ReportDocument) -> str:
    return "\n".join(_lines(report.payload, 0) + ["provenance:"] + _lines(report.provenance, 1))


def render_reproduce(report: ReportDocument) -> str:
    rows = [f"{'fixture':<26} {'check':<38} {'error':>10}  result"]
    for name, outcomes in sorted(report.payload["fixtures"].items()):
        for o in outcomes:
            rows.append(f"{name:<26} {o['key']:<38} {o['error']:>10.2e}  {'PASS' if o['passed'] else 'FAIL'}")
            rows.append(f"{'':<26}   expected {o['expected']}  computed {o['computed']}")
            rows.append(f"{'':<26}   source: {o['provenance']}")
    rows.append(f"failed checks: {report.payload['failed']}")
    rows.append(f"tool version: {report.provenance['tool_version']}")
    return "\n".join(rows)
