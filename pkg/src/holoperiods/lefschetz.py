"""Exact Lefschetz numbers of iterates and the Lefschetz zeta function."""

from __future__ import annotations

from dataclasses import dataclass

from holoperiods.homology import GradedHomologyAction, hypothesis_shape
from holoperiods.errors import HypothesisShapeViolated
from holoperiods.polynomials import IntPolynomial, char_poly, poly_gcd, exact_quotient

DEFAULT_MAX_M = 64


@dataclass(frozen=True)
class LefschetzSequence:
    """L(f^1), ..., L(f^M) as exact integers."""

    values: tuple[int, ...]

    @property
    def max_m(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> int:
        # 1-based like the iterate index
        if not 1 <= m <= len(self.values):
            raise IndexError(m)
        return self.values[m - 1]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class RationalFunction:
    numerator: IntPolynomial
    denominator: IntPolynomial


def trace_power_sums(p: IntPolynomial, max_m: int) -> list[int]:
    """Power sums of the roots of monic p for m = 1..max_m (Newton's identities)."""
    if not p.is_monic():
        raise ValueError("trace_power_sums needs a monic polynomial")
    n = p.degree
    # e[j] = coefficient of x^(n-j)
    e = [p.coeffs[n - j] for j in range(n + 1)]
    sums = [0] * (max_m + 1)
    for m in range(1, max_m + 1):
        acc = m * e[m] if m <= n else 0
        for j in range(1, min(m - 1, n) + 1):
            acc += e[j] * sums[m - j]
        sums[m] = -acc
    return sums[1:]


def lefschetz_number(action: GradedHomologyAction, m: int) -> int:
    """Alternating sum of traces of f_{*k}^m over all degrees."""
    if m < 1:
        raise ValueError("m must be positive")
    return sum((-1) ** k * (mat**m).trace() for k, mat in action.degree_matrices.items())


def lefschetz_sequence(action: GradedHomologyAction, max_m: int = DEFAULT_MAX_M) -> LefschetzSequence:
    """L(f^m) for m = 1..max_m.

    For hypothesis-shaped actions this is 1 - p_m with p_m the power sums of
    the eigenvalues of f_{*1}; other actions fall back to matrix powers.
    """
    if max_m < 1:
        raise ValueError("max_m must be positive")
    if hypothesis_shape(action).satisfies_theorem_hypotheses:
        sums = trace_power_sums(char_poly(action.h1), max_m)
        return LefschetzSequence(tuple(1 - s for s in sums))
    return LefschetzSequence(tuple(lefschetz_number(action, m) for m in range(1, max_m + 1)))


def zeta(action: GradedHomologyAction) -> RationalFunction:
    """det(I - t f_{*1}) / (1 - t) in lowest terms."""
    shape = hypothesis_shape(action)
    if not shape.satisfies_theorem_hypotheses:
        raise HypothesisShapeViolated(shape.violations)
    # det(I - tA) = t^n chi(1/t), the reversed characteristic polynomial
    num = IntPolynomial(tuple(reversed(char_poly(action.h1).coeffs)))
    den = IntPolynomial((1, -1))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = exact_quotient(num, g), exact_quotient(den, g)
    if den.coeffs[0] < 0:
        num, den = -num, -den
    return RationalFunction(num, den)
