"""Decide which branch of the period-set trichotomy a homology action allows.

A map f in H(M) whose iterates all have isolated fixed points satisfies
L(f^m) >= #Fix(f^m) for every m. Two consequences are checkable on the
Lefschetz sequence alone:

* L(f^m) < 0 is impossible;
* if L(f^d) >= 1 for some d | m then f^d has a fixed point, which f^m also
  fixes, so L(f^m) >= 1.

A prefix breaking either rule proves that some iterate has infinitely many
fixed points. When f_{*1} is nilpotent (L = 1 always) or has spectrum
{1, 0, ..., 0} (L = 0 always) no such violation exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Collection, Optional

from holoperiods.errors import HypothesisShapeViolated, WitnessNotFound
from holoperiods.homology import GradedHomologyAction, hypothesis_shape
from holoperiods.lefschetz import LefschetzSequence, lefschetz_sequence
from holoperiods.polynomials import IntPolynomial, char_poly, is_nilpotent
from holoperiods.spectrum import RadiusClass, SpectrumSummary, dirichlet_bound, spectrum_summary

DEFAULT_HARD_CAP = 2**16
INITIAL_M = 64
CIRCLE_EPSILON = 0.5


class Verdict(Enum):
    FORCED_CASE_A = "forced_a"
    CASE_B_COMPATIBLE = "b_compatible"
    CASE_C_COMPATIBLE = "c_compatible"


class WitnessKind(Enum):
    NEGATIVE_LEFSCHETZ = "NegativeLefschetz"
    FIXED_POINT_PERSISTENCE = "FixedPointPersistence"


class ProofCase(Enum):
    CASE1 = "1"
    CASE2 = "2"  # max modulus in (0, 1): unreachable for integer matrices
    CASE3A = "3a"
    CASE3B = "3b"
    CASE4 = "4"


@dataclass(frozen=True)
class AdmissibilityViolation:
    m: int
    kind: WitnessKind
    divisor: Optional[int] = None  # the d with L(f^d) >= 1, for persistence


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    proof_case: ProofCase
    narrative: str
    l_prefix: LefschetzSequence
    witness_m: Optional[int] = None
    witness_reason: Optional[WitnessKind] = None
    spectrum: Optional[SpectrumSummary] = None

    def to_fragment(self) -> dict:
        frag = {
            "verdict": self.verdict.value,
            "proof_case": self.proof_case.value,
            "narrative": self.narrative,
        }
        if self.witness_m is not None:
            frag["witness_m"] = self.witness_m
            frag["witness_kind"] = self.witness_reason.value
        return frag


def _proper_divisors(m: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return [d for d in small + large[::-1] if d < m]


def admissibility_violation(
    seq: LefschetzSequence,
    kinds: Collection[WitnessKind] = tuple(WitnessKind),
) -> Optional[AdmissibilityViolation]:
    """Smallest m at which the prefix breaks one of the allowed rules, or None.

    A negative value is reported as NegativeLefschetz even if persistence
    also fails there.
    """
    if not len(seq):
        raise ValueError("empty sequence")
    for m in range(1, seq.max_m + 1):
        value = seq[m]
        if value < 0 and WitnessKind.NEGATIVE_LEFSCHETZ in kinds:
            return AdmissibilityViolation(m, WitnessKind.NEGATIVE_LEFSCHETZ)
        if value <= 0 and WitnessKind.FIXED_POINT_PERSISTENCE in kinds:
            for d in _proper_divisors(m):
                if seq[d] >= 1:
                    return AdmissibilityViolation(m, WitnessKind.FIXED_POINT_PERSISTENCE, d)
    return None


def _attribute(summary: SpectrumSummary) -> ProofCase:
    if summary.radius_class is RadiusClass.ZERO:
        return ProofCase.CASE4
    if summary.outside_count:
        return ProofCase.CASE1
    if summary.radius_class is RadiusClass.ONE:
        return ProofCase.CASE3A if summary.circle_count >= 2 else ProofCase.CASE3B
    return ProofCase.CASE2  # pragma: no cover - excluded by the integer dichotomy


def _is_unipotent_rank_one(p: IntPolynomial, n: int) -> bool:
    return p == IntPolynomial.x_power(n - 1) * IntPolynomial((-1, 1))


_NARRATIVES = {
    ProofCase.CASE1: (
        "f_*1 has an eigenvalue of modulus > 1; the dominant eigenvalues eventually drive "
        "L(f^m) = 1 - sum(lambda_i^m) negative"
    ),
    ProofCase.CASE3A: (
        "f_*1 has {k} eigenvalues on the unit circle and none outside; along a simultaneous "
        "return time their powers nearly sum to {k} >= 2, making L(f^m) negative"
    ),
    ProofCase.CASE3B: (
        "f_*1 has the single circle eigenvalue -1: L(f) = 2 forces a fixed point, which f^2 "
        "also fixes, yet L(f^2) = 0"
    ),
}


def classify(action: GradedHomologyAction, hard_cap: int = DEFAULT_HARD_CAP) -> ClassificationResult:
    """Run the trichotomy decision for a hypothesis-shaped action.

    Raises ``HypothesisShapeViolated`` if H_k != 0 for some k > 1 and
    ``WitnessNotFound`` if case (a) is forced but no violation appears up
    to the cap.
    """
    shape = hypothesis_shape(action)
    if not shape.satisfies_theorem_hypotheses:
        raise HypothesisShapeViolated(shape.violations)
    a = action.h1
    n = a.n
    summary = spectrum_summary(a)

    if is_nilpotent(a):
        seq = lefschetz_sequence(action, min(INITIAL_M, hard_cap))
        return ClassificationResult(
            Verdict.CASE_B_COMPATIBLE,
            ProofCase.CASE4,
            "f_*1 is nilpotent, so L(f^m) = 1 for every m: f has a fixed point and, unless some "
            "iterate has infinitely many fixed points, it is the only periodic point, so Per(f) = {1}",
            seq,
            spectrum=summary,
        )
    chi = char_poly(a)
    if _is_unipotent_rank_one(chi, n):
        seq = lefschetz_sequence(action, min(INITIAL_M, hard_cap))
        return ClassificationResult(
            Verdict.CASE_C_COMPATIBLE,
            ProofCase.CASE3B,
            "f_*1 has spectrum {1, 0, ..., 0}, so L(f^m) = 0 for every m: no iterate has a "
            "fixed point and f has no periodic points, unless some iterate has infinitely "
            "many fixed points",
            seq,
            spectrum=summary,
        )

    proof_case = _attribute(summary)
    cap = hard_cap
    if summary.outside_count == 0 and summary.inside_nonzero_count == 0:
        cap = max(cap, dirichlet_bound(summary.circle_count, CIRCLE_EPSILON))
    # Case 1's own argument produces negativity, so insist on that kind there
    kinds = (WitnessKind.NEGATIVE_LEFSCHETZ,) if proof_case is ProofCase.CASE1 else tuple(WitnessKind)

    m_max = min(INITIAL_M, cap)
    while True:
        seq = lefschetz_sequence(action, m_max)
        violation = admissibility_violation(seq, kinds)
        if violation is not None:
            break
        if m_max >= cap:
            raise WitnessNotFound(cap)
        m_max = min(2 * m_max, cap)

    text = _NARRATIVES[proof_case].format(k=summary.circle_count)
    if violation.kind is WitnessKind.NEGATIVE_LEFSCHETZ:
        text += f"; witness L(f^{violation.m}) = {seq[violation.m]} < 0"
    else:
        text += (
            f"; witness L(f^{violation.divisor}) = {seq[violation.divisor]} >= 1 but "
            f"L(f^{violation.m}) = {seq[violation.m]}"
        )
    iterate = "f" if violation.m == 1 else f"f^{violation.m}"
    text += f". Hence {iterate} has infinitely many fixed points (case (a))"
    return ClassificationResult(
        Verdict.FORCED_CASE_A,
        proof_case,
        text,
        LefschetzSequence(seq.values[: violation.m]),
        violation.m,
        violation.kind,
        summary,
    )


@dataclass(frozen=True)
class PeriodSetStatement:
    """What the verdict says about Per(f); ``periods`` is None when case (a) is forced."""

    periods: Optional[frozenset]
    text: str


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def period_set_statement(result: ClassificationResult) -> PeriodSetStatement:
    if result.verdict is Verdict.CASE_B_COMPATIBLE:
        return PeriodSetStatement(
            frozenset({1}), "Per(f) = {1} and #Fix(f^m) <= 1 for all m, unless case (a)"
        )
    if result.verdict is Verdict.CASE_C_COMPATIBLE:
        return PeriodSetStatement(frozenset(), "Per(f) = ∅ unless case (a)")
    power = "" if result.witness_m == 1 else str(result.witness_m).translate(_SUPERSCRIPT)
    return PeriodSetStatement(
        None,
        f"f{power} has infinitely many fixed points (if f is in H(M) with the stated homology)",
    )
