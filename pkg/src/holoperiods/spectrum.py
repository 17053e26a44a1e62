"""Eigenvalue locations relative to the unit circle, and simultaneous return times.

Counts are exact (polynomial arithmetic only). Angles of circle eigenvalues
are exact fractions of a turn for roots of unity and polished doubles
otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from holoperiods.errors import DegenerateEpsilon
from holoperiods.matrix import IntMatrix
from holoperiods.polynomials import (
    IntPolynomial,
    char_poly,
    count_roots_outside_unit_disk,
    cyclotomic_part,
    euler_phi,
    exact_quotient,
    palindromic_circle_count,
    self_inversive_part,
)

# float comparisons against epsilon keep this much clearance
MARGIN = 1e-12

Angle = Union[Fraction, float]


class RadiusClass(Enum):
    ZERO = "Zero"
    ONE = "One"
    GREATER_THAN_ONE = ">1"


@dataclass(frozen=True)
class SpectrumSummary:
    n: int
    zero_count: int
    unity_orders: tuple[int, ...]
    circle_non_torsion_count: int
    outside_count: int
    inside_nonzero_count: int
    radius_class: RadiusClass

    @property
    def circle_count(self) -> int:
        return len(self.unity_orders) + self.circle_non_torsion_count

    def to_fragment(self) -> dict:
        return {
            "spectrum": {
                "zero": self.zero_count,
                "unity_orders": list(self.unity_orders),
                "circle_non_torsion": self.circle_non_torsion_count,
                "outside": self.outside_count,
                "inside": self.inside_nonzero_count,
                "radius_class": self.radius_class.value,
            }
        }


@dataclass(frozen=True)
class _Decomposition:
    zero_count: int
    cyclotomic: IntPolynomial
    orders: list[int]
    reciprocal_pairs: IntPolynomial  # palindromic, no roots of unity
    rest: IntPolynomial  # coprime to its reciprocal


def _decompose(p: IntPolynomial) -> _Decomposition:
    z = p.valuation()
    q = p.shift_down(z)
    cyc, orders = cyclotomic_part(q)
    q = exact_quotient(q, cyc)
    pairs = self_inversive_part(q)
    rest = exact_quotient(q, pairs)
    return _Decomposition(z, cyc, orders, pairs, rest)


def spectrum_summary(a: IntMatrix) -> SpectrumSummary:
    """Exact counts of eigenvalues of ``a`` by location relative to the unit circle."""
    d = _decompose(char_poly(a))
    unity = tuple(k for k in d.orders for _ in range(euler_phi(k)))
    circle_other = palindromic_circle_count(d.reciprocal_pairs)
    # off-circle roots of the palindromic factor come in pairs r, 1/r
    paired_outside = (d.reciprocal_pairs.degree - circle_other) // 2
    rest_outside = count_roots_outside_unit_disk(d.rest)
    outside = paired_outside + rest_outside
    inside = paired_outside + d.rest.degree - rest_outside
    n = a.n
    if d.zero_count == n:
        radius = RadiusClass.ZERO
    elif outside:
        radius = RadiusClass.GREATER_THAN_ONE
    else:
        # integer matrices: nonzero eigenvalues multiply to a nonzero integer
        assert unity or circle_other, "max modulus strictly inside (0, 1) is impossible for integer matrices"
        radius = RadiusClass.ONE
    summary = SpectrumSummary(n, d.zero_count, unity, circle_other, outside, inside, radius)
    assert d.zero_count + len(unity) + circle_other + outside + inside == n
    return summary


def _polish(p: IntPolynomial, z: complex, steps: int = 3) -> complex:
    dp = p.derivative()
    for _ in range(steps):
        dz = dp(z)
        if dz == 0:
            break
        z = z - p(z) / dz
    return z


def circle_angles(a: IntMatrix) -> list[Angle]:
    """Arguments (as fractions of a full turn, in [0, 1)) of the unit-circle eigenvalues.

    Roots of unity give exact ``Fraction`` values; the others are floats
    from a numerical root finder followed by Newton polishing on the
    palindromic factor.
    """
    d = _decompose(char_poly(a))
    angles: list[Angle] = []
    for k in d.orders:
        angles.extend(Fraction(j, k) for j in range(k) if math.gcd(j, k) == 1)
    count = palindromic_circle_count(d.reciprocal_pairs)
    if count:
        p = d.reciprocal_pairs
        roots = np.roots([float(c) for c in reversed(p.coeffs)])
        roots = sorted(roots, key=lambda r: abs(abs(r) - 1.0))[:count]
        for r in roots:
            r = _polish(p, complex(r))
            angles.append((cmath.phase(r) / (2 * math.pi)) % 1.0)
    return sorted(angles, key=float)


@dataclass(frozen=True)
class ReturnTimeQuery:
    angles: tuple[Angle, ...]
    epsilon: float

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(self.angles))
        if not self.angles:
            raise ValueError("at least one angle is required")
        if not self.epsilon > 0:
            raise DegenerateEpsilon(f"epsilon must be positive, got {self.epsilon}")
        if self.epsilon >= 2:
            raise ValueError("epsilon must be below 2 (every chord is at most 2)")


def chord(angle: Angle, m: int) -> float:
    """|exp(2 pi i angle m) - 1|, exactly 0 when ``angle`` is a Fraction with m*angle integral."""
    if isinstance(angle, Fraction):
        frac = (angle * m) % 1
        if frac == 0:
            return 0.0
        frac = float(frac)
    else:
        frac = (angle * m) % 1.0
    return 2.0 * math.sin(math.pi * min(frac, 1.0 - frac))


def _arc_tolerance(epsilon: float) -> float:
    return 2.0 * math.asin(epsilon / 2.0)


def _cells(epsilon: float) -> int:
    return math.ceil(2 * math.pi / _arc_tolerance(epsilon))


def dirichlet_bound(q: int, epsilon: float) -> int:
    """Pigeonhole bound on the first simultaneous return time of q circle points."""
    if not 0 < epsilon < 2:
        raise DegenerateEpsilon(f"epsilon must lie in (0, 2), got {epsilon}")
    return _cells(epsilon) ** q + 1


def _valid(angles: Sequence[Angle], m: int, epsilon: float) -> bool:
    return all(chord(t, m) < epsilon - MARGIN for t in angles)


def return_time(query: ReturnTimeQuery, mode: str = "scan") -> int:
    """Some m >= 1 with |mu_j^m - 1| < epsilon for every angle.

    ``mode="scan"`` returns the smallest such m (searching up to the
    Dirichlet bound). ``mode="pigeonhole"`` runs the constructive argument:
    iterates m = 0, 1, ... are binned into cells of the q-torus until two
    share a cell, and their difference is returned.
    """
    eps = query.epsilon
    bound = dirichlet_bound(len(query.angles), eps)
    if mode == "scan":
        for m in range(1, bound + 1):
            if _valid(query.angles, m, eps):
                return m
    elif mode == "pigeonhole":
        n_cells = _cells(eps)
        seen: dict[tuple[int, ...], int] = {}
        for m in range(bound):
            cell = tuple(int(float((t * m) % 1) * n_cells) % n_cells for t in query.angles)
            if cell in seen:
                diff = m - seen[cell]
                if _valid(query.angles, diff, eps):
                    return diff
                # a rounding-boundary miss; fall back to the exact minimum
                return return_time(query, "scan")
            seen[cell] = m
    else:
        raise ValueError(f"unknown mode {mode!r}")
    raise AssertionError("no return time below the Dirichlet bound")  # pragma: no cover
