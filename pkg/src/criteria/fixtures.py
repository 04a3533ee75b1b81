"""
Named reference constructions with their expected quantities.

Each fixture builds its multi-states from exact matrices and lists checks:
a quantity to compute, the value it should take, and where that value comes
from. ``run_fixture_checks`` evaluates them; the CLI ``reproduce`` command
prints the outcome table.

Decision checks compare verdict strings; numeric checks compare complex or
real values against an absolute tolerance.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple, Union

import numpy as np
from scipy.optimize import bisect

from bargmann.gram import gram
from bargmann.invariants import invariant, overlap
from criteria.commutators import max_commutator_norm
from criteria.high_dim import high_dim_coherence_necessary, high_dim_imaginarity_necessary
from criteria.qubit_tests import qubit_coherence_test, qubit_imaginarity_test
from criteria.verdicts import HAS_RESOURCE, INCONCLUSIVE, RESOURCE_FREE
from criteria.witnesses import (
    imaginarity_witness,
    permutation_equality_witness,
    third_order_witness,
    weak_commutativity_witness,
)
from errors import UnknownFixtureError
from qstate.bloch import GELLMANN, GELLMANN_LAMBDA, bloch_coordinates, multistate_from_bloch
from qstate.density import MultiState, direct_sum, mix_multistates
from qstate.gellmann import lambda_matrices
from quantifiers.robustness import im_r1
from quantifiers.single import im_robustness_single

logger = logging.getLogger(__name__)

Value = Union[complex, float, str]

EQUALS = "equals"
EXCEEDS = "exceeds"
AT_MOST = "at_most"

EXACT = 1e-12
DEFAULT_TOLERANCE = 1e-9
QUANTIFIER_TOLERANCE = 1e-6

SWEEP = tuple(round(0.1 * k, 1) for k in range(1, 10))


@dataclass(frozen=True)
class FixtureCheck:
    key: str
    expected: Value
    provenance: str
    compute: Callable[[], Value]
    tolerance: float = DEFAULT_TOLERANCE
    comparison: str = EQUALS


@dataclass(frozen=True)
class CheckOutcome:
    fixture: str
    key: str
    expected: Value
    computed: Value
    error: float
    tolerance: float
    comparison: str
    provenance: str
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fixture": self.fixture,
            "key": self.key,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "error": self.error,
            "tolerance": self.tolerance,
            "comparison": self.comparison,
            "provenance": self.provenance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ReferenceFixture:
    name: str
    description: str
    multistates: Dict[str, MultiState]
    checks: Tuple[FixtureCheck, ...]
    parameters: Dict[str, float] = field(default_factory=dict)


def _jsonable(value: Value) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _evaluate(name: str, check: FixtureCheck) -> CheckOutcome:
    computed = check.compute()
    if isinstance(check.expected, str):
        error = 0.0 if computed == check.expected else 1.0
        passed = error == 0.0
    elif check.comparison == EXCEEDS:
        error = float(check.expected) - float(np.real(computed))
        passed = float(np.real(computed)) > float(check.expected)
    elif check.comparison == AT_MOST:
        error = float(np.real(computed)) - float(check.expected)
        passed = error <= 0.0
    else:
        error = float(abs(complex(computed) - complex(check.expected)))
        passed = error <= check.tolerance
    return CheckOutcome(
        fixture=name,
        key=check.key,
        expected=check.expected,
        computed=computed,
        error=error,
        tolerance=check.tolerance,
        comparison=check.comparison,
        provenance=check.provenance,
        passed=bool(passed),
    )


def _from_matrices(*mats: Any) -> MultiState:
    return MultiState.from_matrices([np.array(m, dtype=np.complex128) for m in mats])


# --- qutrit-lambda ------------------------------------------------------------


def _qutrit_lambda() -> ReferenceFixture:
    lam = lambda_matrices()
    eye = np.eye(3)
    ms = _from_matrices((eye + lam[0]) / 3.0, (eye + lam[3]) / 3.0, (eye + lam[6]) / 3.0)
    src = "qutrits (1 + lambda_k)/3 for lambda_1, lambda_4 (symmetric) and lambda_7 (antisymmetric)"
    checks: List[FixtureCheck] = [
        FixtureCheck("Tr(rho1 rho2 rho3)", (3 + 1j) / 27, src, lambda: invariant(ms, (1, 2, 3)).value, EXACT),
    ]
    for i in (1, 2, 3):
        checks.append(
            FixtureCheck(f"Tr(rho{i}^2)", 5 / 9, src, lambda i=i: overlap(ms[i - 1], ms[i - 1]), EXACT)
        )
    for i, j in ((1, 2), (1, 3), (2, 3)):
        checks.append(
            FixtureCheck(f"Tr(rho{i} rho{j})", 1 / 3, src, lambda i=i, j=j: overlap(ms[i - 1], ms[j - 1]), EXACT)
        )
    checks += [
        FixtureCheck(
            "Gram rank (gellmann-lambda)", 3.0, src, lambda: float(gram(ms, basis=GELLMANN_LAMBDA).numerical_rank)
        ),
        FixtureCheck(
            "max |Gram - 1| (gellmann-lambda)",
            0.0,
            "conventional Gell-Mann coordinates give orthonormal Bloch vectors",
            lambda: float(np.max(np.abs(gram(ms, basis=GELLMANN_LAMBDA).entries - np.eye(3)))),
            EXACT,
        ),
        FixtureCheck("Gram rank (gellmann)", 3.0, src, lambda: float(gram(ms, basis=GELLMANN).numerical_rank)),
        FixtureCheck(
            "rank test",
            INCONCLUSIVE,
            "rank 3 does not exceed the real-state bound d(d+1)/2 - 1 = 5",
            lambda: high_dim_imaginarity_necessary(ms).decision,
        ),
        FixtureCheck(
            "third-order witness",
            HAS_RESOURCE,
            "Im Tr(rho1 rho2 rho3) = 1/27 is nonzero",
            lambda: third_order_witness(ms, 1, 2, 3).decision,
        ),
        FixtureCheck(
            "|Tr(rho1 rho2 rho3) - Tr(rho1 rho3 rho2)|",
            2 / 27,
            "the transposed order gives the complex conjugate",
            lambda: weak_commutativity_witness(ms, 1, 2, 3).evidence,
            EXACT,
        ),
    ]
    return ReferenceFixture(
        "qutrit-lambda",
        "qutrits with imaginarity that the Gram rank cannot detect",
        {"rho": ms},
        tuple(checks),
    )


# --- qubit-rho-sigma and dim4-counterexample ------------------------------------


def _rho_sigma() -> Tuple[MultiState, MultiState]:
    rho = _from_matrices(
        [[1 / 3, 1j / 3], [-1j / 3, 2 / 3]],
        [[1 / 4, 1j / 5], [-1j / 5, 3 / 4]],
        [[1 / 6, 1 / 7], [1 / 7, 5 / 6]],
    )
    sigma = _from_matrices(
        [[3 / 4, 1j / 4], [-1j / 4, 1 / 4]],
        [[4 / 5, 1 / 8], [1 / 8, 1 / 5]],
        [[1 / 6, 1j / 7], [-1j / 7, 5 / 6]],
    )
    return rho, sigma


def _qubit_rho_sigma() -> ReferenceFixture:
    rho, sigma = _rho_sigma()
    src = "two qubit triples with rational entries"
    checks = (
        FixtureCheck("Tr(rho1 rho2 rho3)", (1253 + 36j) / 2520, src, lambda: invariant(rho, (1, 2, 3)).value, EXACT),
        FixtureCheck("Tr(sigma1 sigma2 sigma3)", (1192 - 200j) / 6720, src, lambda: invariant(sigma, (1, 2, 3)).value, EXACT),
        FixtureCheck("Tr(rho1^2 rho2 rho3)", (3199 + 108j) / 7560, src, lambda: invariant(rho, (1, 1, 2, 3)).value, EXACT),
        FixtureCheck(
            "Tr(sigma1^2 sigma2 sigma3)",
            (3760 - 800j) / 26880,
            "direct product; the normalization is 4^2 * 5 * 6 * 7 * 8 = 26880",
            lambda: invariant(sigma, (1, 1, 2, 3)).value,
            EXACT,
        ),
        FixtureCheck("Im_R(rho1)", 2 / 3, "r_y of rho1 is -2/3", lambda: im_robustness_single(rho[0]), EXACT),
        FixtureCheck("rho imaginarity", HAS_RESOURCE, src, lambda: qubit_imaginarity_test(rho).decision),
        FixtureCheck("sigma imaginarity", HAS_RESOURCE, src, lambda: qubit_imaginarity_test(sigma).decision),
    )
    return ReferenceFixture("qubit-rho-sigma", "qubit triples with opposite chirality", {"rho": rho, "sigma": sigma}, checks)


def cancelling_weight(rho: MultiState, sigma: MultiState) -> float:
    """lambda in (0, 1) with lambda^3 Im T(rho) + (1 - lambda)^3 Im T(sigma) = 0 for T the ordered triple trace."""
    a = invariant(rho, (1, 2, 3)).imag
    b = invariant(sigma, (1, 2, 3)).imag
    return float(bisect(lambda x: x**3 * a + (1.0 - x) ** 3 * b, 0.0, 1.0, xtol=1e-15, maxiter=200))


def _dim4_counterexample() -> ReferenceFixture:
    rho, sigma = _rho_sigma()
    lam = cancelling_weight(rho, sigma)
    phi = MultiState(tuple(direct_sum(r, s, lam) for r, s in zip(rho, sigma)))
    u = (25.0 / 12.0) ** (1.0 / 3.0)
    src = "phi_i = lambda rho_i (+) (1 - lambda) sigma_i with the third-order imaginary parts cancelled"
    checks = (
        FixtureCheck(
            "lambda",
            u / (1.0 + u),
            "root of lambda^3 / (1 - lambda)^3 = 25/12",
            lambda: lam,
            EXACT,
        ),
        FixtureCheck(
            "|Im Tr(phi1 phi2 phi3)|", EXACT, src, lambda: abs(invariant(phi, (1, 2, 3)).imag), comparison=AT_MOST
        ),
        FixtureCheck(
            "|Im Tr(phi1^2 phi2 phi3)|", 1e-4, src, lambda: abs(invariant(phi, (1, 1, 2, 3)).imag), comparison=EXCEEDS
        ),
        FixtureCheck(
            "Im Tr(phi1^2 phi2 phi3)",
            lam**4 / 70.0 - (1.0 - lam) ** 4 * 5.0 / 168.0,
            "lambda^4 Im Tr(rho1^2 rho2 rho3) + (1 - lambda)^4 Im Tr(sigma1^2 sigma2 sigma3)",
            lambda: invariant(phi, (1, 1, 2, 3)).imag,
            EXACT,
        ),
        FixtureCheck(
            "third-order witness",
            INCONCLUSIVE,
            "the third-order invariant is real",
            lambda: third_order_witness(phi, 1, 2, 3).decision,
        ),
        FixtureCheck(
            "fourth-order witness",
            HAS_RESOURCE,
            "a repeated-entry invariant detects the imaginarity",
            lambda: imaginarity_witness(phi, (1, 1, 2, 3)).decision,
        ),
    )
    return ReferenceFixture(
        "dim4-counterexample",
        "ququart triple whose imaginarity only higher-order invariants see",
        {"phi": phi},
        checks,
        {"lambda": lam},
    )


# --- non-convexity ------------------------------------------------------------------


def _nonconvexity_imaginarity() -> ReferenceFixture:
    h = 1.0 / math.sqrt(2.0)
    rho = multistate_from_bloch([[1, 0, 0], [0, 1, 0], [h, h, 0]])
    varsigma = multistate_from_bloch([[0, h, h], [0, 1, 0], [0, 0, 1]])
    src = "componentwise mixture p * rho + (1 - p) * varsigma of two coplanar triples"
    checks: List[FixtureCheck] = [
        FixtureCheck("p=0 imaginarity", RESOURCE_FREE, "varsigma lies in the Y-Z plane", lambda: qubit_imaginarity_test(varsigma).decision),
        FixtureCheck("p=1 imaginarity", RESOURCE_FREE, "rho lies in the X-Y plane", lambda: qubit_imaginarity_test(rho).decision),
        FixtureCheck("p=0 Im_R1", 0.0, "coplanar triple", lambda: im_r1(varsigma).value, QUANTIFIER_TOLERANCE),
        FixtureCheck("p=1 Im_R1", 0.0, "coplanar triple", lambda: im_r1(rho).value, QUANTIFIER_TOLERANCE),
    ]
    mixtures = {}
    for p in SWEEP:
        xi = mix_multistates(rho, varsigma, p)
        mixtures[f"xi(p={p})"] = xi
        checks.append(
            FixtureCheck(
                f"p={p} det(Bloch matrix)",
                p * (1.0 - p) / 2.0,
                "det = p(1 - p)/2",
                lambda xi=xi: float(np.linalg.det(bloch_coordinates(xi))),
                EXACT,
            )
        )
        checks.append(
            FixtureCheck(f"p={p} imaginarity", HAS_RESOURCE, src, lambda xi=xi: qubit_imaginarity_test(xi).decision)
        )
    return ReferenceFixture(
        "nonconvexity-imaginarity",
        "a segment between imaginarity-free triples whose interior has imaginarity",
        {"rho": rho, "varsigma": varsigma, **mixtures},
        tuple(checks),
    )


def _nonconvexity_coherence() -> ReferenceFixture:
    plus = np.full((2, 2), 0.5)
    minus = np.array([[0.5, -0.5], [-0.5, 0.5]])
    rho = _from_matrices(np.diag([1.0, 0.0]), np.diag([1 / 3, 2 / 3]))
    varsigma = _from_matrices(plus, 0.25 * plus + 0.75 * minus)
    src = "componentwise mixture w * rho + (1 - w) * varsigma of two commuting pairs"
    checks: List[FixtureCheck] = [
        FixtureCheck("w=0 coherence", RESOURCE_FREE, "varsigma is diagonal in the |+>, |-> basis", lambda: qubit_coherence_test(varsigma).decision),
        FixtureCheck("w=1 coherence", RESOURCE_FREE, "rho is diagonal", lambda: qubit_coherence_test(rho).decision),
    ]
    mixtures = {}
    for w in SWEEP:
        xi = mix_multistates(rho, varsigma, w)
        mixtures[f"xi(w={w})"] = xi
        checks.append(
            FixtureCheck(
                f"w={w} Tr(x1 x1 x2 x2) - Tr(x1 x2 x1 x2)",
                w * w * (1.0 - w) ** 2 / 144.0,
                "equals |r1 x r2|^2 / 4 with |r1 x r2| = w(1 - w)/6",
                lambda xi=xi: permutation_equality_witness(xi, (1, 1, 2, 2), (0, 2, 1, 3)).details["difference"][0],
                EXACT,
            )
        )
    half = mixtures["xi(w=0.5)"]
    checks.append(
        FixtureCheck(
            "w=0.5 permutation witness",
            HAS_RESOURCE,
            "difference 1/2304 is nonzero",
            lambda: permutation_equality_witness(half, (1, 1, 2, 2), (0, 2, 1, 3)).decision,
        )
    )
    return ReferenceFixture(
        "nonconvexity-coherence",
        "a segment between incoherent pairs whose interior has coherence",
        {"rho": rho, "varsigma": varsigma, **mixtures},
        tuple(checks),
    )


# --- qutrit-coherence-rank ------------------------------------------------------------


def _qutrit_coherence_rank() -> ReferenceFixture:
    lam = lambda_matrices()
    eye = np.eye(3)
    ms = _from_matrices((eye + 0.5 * lam[0]) / 3.0, (eye + 0.5 * lam[2]) / 3.0)
    src = "qutrits (1 + lambda_1/2)/3 and (1 + lambda_3/2)/3"
    checks = (
        FixtureCheck("Gram rank", 2.0, "rank 2 equals the incoherent bound d - 1", lambda: float(gram(ms).numerical_rank)),
        FixtureCheck("rank test", INCONCLUSIVE, src, lambda: high_dim_coherence_necessary(ms).decision),
        FixtureCheck(
            "||[rho1, rho2]||_F",
            math.sqrt(2.0) / 18.0,
            "[lambda_1, lambda_3] = -2i lambda_2 scaled by 1/36",
            lambda: max_commutator_norm(ms),
            EXACT,
        ),
    )
    return ReferenceFixture(
        "qutrit-coherence-rank",
        "a noncommuting qutrit pair within the incoherent rank bound",
        {"rho": ms},
        checks,
    )


_BUILDERS: Dict[str, Callable[[], ReferenceFixture]] = {
    "qutrit-lambda": _qutrit_lambda,
    "qubit-rho-sigma": _qubit_rho_sigma,
    "dim4-counterexample": _dim4_counterexample,
    "nonconvexity-imaginarity": _nonconvexity_imaginarity,
    "nonconvexity-coherence": _nonconvexity_coherence,
    "qutrit-coherence-rank": _qutrit_coherence_rank,
}

FIXTURE_NAMES: Tuple[str, ...] = tuple(_BUILDERS)


def reference_fixture(name: str) -> ReferenceFixture:
    """
    Build a named fixture.

    Raises:
        UnknownFixtureError: ``name`` is not in ``FIXTURE_NAMES``.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownFixtureError(f"Unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None
    return builder()


def run_fixture_checks(name: str) -> List[CheckOutcome]:
    fixture = reference_fixture(name)
    outcomes = [_evaluate(name, check) for check in fixture.checks]
    failed = sum(not o.passed for o in outcomes)
    logger.info("fixture %s: %d checks, %d failed", name, len(outcomes), failed)
    return outcomes
