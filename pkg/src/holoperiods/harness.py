"""Numerical checks of the Lefschetz inequality on concrete one-variable holomorphic maps.

Maps are polynomials (affine maps included) and compositions of them on a
disk or rectangle in C. Fixed points of f^m are found by vectorised Newton
iteration from a grid of seeds; the counts are compared with L(f^m) from
the homology action the user declares for the map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence, Union

import numpy as np

from holoperiods.classifier import ClassificationResult, Verdict, classify
from holoperiods.errors import (
    EvaluationOverflow,
    HypothesisShapeViolated,
    MalformedInput,
    PreconditionNotStrictlyInside,
    TheoremViolation,
)
from holoperiods.homology import GradedHomologyAction, from_document, hypothesis_shape, validate_action
from holoperiods.lefschetz import lefschetz_number

RESIDUAL_TOL = 1e-10
DEDUP_RADIUS = 1e-6
MARGIN_TOL = 1e-12
NEWTON_ITERATIONS = 80
DEFAULT_SAMPLES = 4096


@dataclass(frozen=True)
class Disk:
    center: complex = 0j
    radius: float = 1.0

    def __post_init__(self):
        if not self.radius > 0 or not np.isfinite(self.radius):
            raise ValueError("disk radius must be positive and finite")

    def contains(self, z):
        return np.abs(z - self.center) < self.radius

    def boundary(self, samples: int):
        theta = 2 * np.pi * np.arange(samples) / samples
        return self.center + self.radius * np.exp(1j * theta)

    def margin(self, w):
        """Signed distance from points ``w`` to the boundary, positive inside."""
        return self.radius - np.abs(w - self.center)

    def bounding_box(self):
        c, r = self.center, self.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r


UNIT_DISK = Disk()


@dataclass(frozen=True)
class Rectangle:
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValueError("rectangle must have positive width and height")

    def contains(self, z):
        return (z.real > self.x_min) & (z.real < self.x_max) & (z.imag > self.y_min) & (z.imag < self.y_max)

    def boundary(self, samples: int):
        per_side = max(samples // 4, 1)
        t = np.arange(per_side) / per_side
        w, h = self.x_max - self.x_min, self.y_max - self.y_min
        lo = complex(self.x_min, self.y_min)
        return np.concatenate([
            lo + w * t,
            lo + w + 1j * h * t,
            lo + w + 1j * h - w * t,
            lo + 1j * h - 1j * h * t,
        ])

    def margin(self, w):
        return np.minimum.reduce([
            w.real - self.x_min, self.x_max - w.real, w.imag - self.y_min, self.y_max - w.imag,
        ])

    def bounding_box(self):
        return self.x_min, self.x_max, self.y_min, self.y_max


Domain = Union[Disk, Rectangle]


@dataclass(frozen=True)
class DiskPolynomial:
    """z -> sum_j coeffs[j] z^j."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs or not all(np.isfinite(c) for c in coeffs):
            raise ValueError("polynomial coefficients must be finite and non-empty")
        object.__setattr__(self, "coeffs", coeffs)

    def evaluate(self, z):
        """Value and derivative at ``z`` by Horner's scheme."""
        value = np.full_like(z, self.coeffs[-1])
        deriv = np.zeros_like(z)
        for c in reversed(self.coeffs[:-1]):
            deriv = deriv * z + value
            value = value * z + c
        return value, deriv


def DiskAffine(a: complex, b: complex = 0j) -> DiskPolynomial:
    """z -> a z + b."""
    return DiskPolynomial((b, a))


@dataclass(frozen=True)
class Composition:
    """Apply ``maps[0]`` first, then ``maps[1]``, and so on."""

    maps: tuple

    def evaluate(self, z):
        deriv = np.ones_like(z)
        for f in self.maps:
            z, d = f.evaluate(z)
            deriv = deriv * d
        return z, deriv


@dataclass(frozen=True)
class MapSpec:
    function: Union[DiskPolynomial, Composition]
    domain: Domain = UNIT_DISK
    declared_action: GradedHomologyAction = field(default_factory=lambda: validate_action({}))
    name: Optional[str] = None

    def iterate(self, z, m: int):
        """f^m and its derivative at ``z`` (chain rule along the orbit)."""
        z = np.asarray(z, dtype=complex)
        deriv = np.ones_like(z)
        for _ in range(m):
            z, d = self.function.evaluate(z)
            deriv = deriv * d
        return z, deriv


def strictly_inside(spec: MapSpec, samples: int = DEFAULT_SAMPLES) -> tuple[bool, float]:
    """Sampled check that f maps the closed domain strictly inside itself.

    Uses the boundary only: for holomorphic f the image of the closed
    domain lies within the region bounded by the image of its boundary.
    The margin is the smallest distance from f(boundary) to the domain's
    boundary; it is a sampling estimate, not a certified bound.
    """
    z = spec.domain.boundary(samples)
    with np.errstate(all="ignore"):
        w, _ = spec.function.evaluate(z)
    if not np.all(np.isfinite(w)):
        raise EvaluationOverflow("map overflowed on the domain boundary")
    margin = float(np.min(spec.domain.margin(w)))
    if abs(margin) < MARGIN_TOL:
        margin = 0.0
    return margin > 0, margin


@dataclass(frozen=True)
class FixedPointReport:
    m: int
    points: tuple[complex, ...]
    residuals: tuple[float, ...]
    lefschetz_value: int

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def bound_satisfied(self) -> bool:
        return self.count <= self.lefschetz_value


def _dedup(points: np.ndarray, residuals: np.ndarray):
    order = np.lexsort((points.imag, points.real))
    kept_p, kept_r = [], []
    for i in order:
        z = points[i]
        for j, k in enumerate(kept_p):
            if abs(z - k) < DEDUP_RADIUS:
                if residuals[i] < kept_r[j]:
                    kept_p[j], kept_r[j] = z, residuals[i]
                break
        else:
            kept_p.append(z)
            kept_r.append(residuals[i])
    return kept_p, kept_r


def find_fixed_points(spec: MapSpec, m: int, grid_resolution: int = 64) -> FixedPointReport:
    """Fixed points of f^m by Newton's method on f^m(z) - z from a square grid of seeds."""
    inside, margin = strictly_inside(spec)
    if not inside:
        raise PreconditionNotStrictlyInside(margin)
    x0, x1, y0, y1 = spec.domain.bounding_box()
    xs = np.linspace(x0, x1, grid_resolution)
    ys = np.linspace(y0, y1, grid_resolution)
    z = (xs[None, :] + 1j * ys[:, None]).ravel()

    with np.errstate(all="ignore"):
        for _ in range(NEWTON_ITERATIONS):
            w, dw = spec.iterate(z, m)
            step = (w - z) / (dw - 1)
            z = np.where(np.isfinite(step), z - step, np.nan)
        w, _ = spec.iterate(z, m)
        residual = np.abs(w - z)
    ok = np.isfinite(residual) & (residual < RESIDUAL_TOL) & spec.domain.contains(z)
    points, residuals = _dedup(z[ok], residual[ok])
    return FixedPointReport(
        m,
        tuple(complex(p) for p in points),
        tuple(float(r) for r in residuals),
        lefschetz_number(spec.declared_action, m),
    )


def exact_period_points(reports: Mapping[int, FixedPointReport], m: int) -> list[complex]:
    """Points of Fix(f^m) not fixed by f^d for any proper divisor d of m."""
    lower = [p for d, r in reports.items() if d < m and m % d == 0 for p in r.points]
    return [p for p in reports[m].points if all(abs(p - q) >= DEDUP_RADIUS for q in lower)]


@dataclass
class VerificationReport:
    name: Optional[str]
    margin: float
    samples: int
    grid_resolution: int
    classification: ClassificationResult
    reports: dict[int, FixedPointReport]
    exact_period_counts: dict[int, int]
    passed: bool = True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "strictly_inside": {"margin": self.margin, "samples": self.samples, "sampled": True},
            "grid": self.grid_resolution,
            "verdict": self.classification.verdict.value,
            "iterates": [
                {
                    "m": m,
                    "L": r.lefschetz_value,
                    "count": r.count,
                    "exact_period_count": self.exact_period_counts[m],
                    "bound_satisfied": r.bound_satisfied,
                    "points": [[p.real, p.imag] for p in r.points],
                    "residuals": list(r.residuals),
                }
                for m, r in sorted(self.reports.items())
            ],
            "pass": self.passed,
        }


def verify_theorem(spec: MapSpec, max_m: int = 8, grid_resolution: int = 64) -> VerificationReport:
    """Check #Fix(f^m) <= L(f^m) for m = 1..max_m and compare with the classifier verdict.

    Raises ``TheoremViolation`` at the first inconsistent iterate.
    """
    shape = hypothesis_shape(spec.declared_action)
    if not shape.satisfies_theorem_hypotheses:
        raise HypothesisShapeViolated(shape.violations)
    inside, margin = strictly_inside(spec)
    if not inside:
        raise PreconditionNotStrictlyInside(margin)
    result = classify(spec.declared_action)
    reports: dict[int, FixedPointReport] = {}
    exact: dict[int, int] = {}
    for m in range(1, max_m + 1):
        rep = find_fixed_points(spec, m, grid_resolution)
        reports[m] = rep
        exact[m] = len(exact_period_points(reports, m))
        if not rep.bound_satisfied:
            raise TheoremViolation(m, f"observed {rep.count} fixed points of f^{m} > L = {rep.lefschetz_value}")
        if result.verdict is Verdict.CASE_B_COMPATIBLE and (rep.count != 1 or (m > 1 and exact[m])):
            raise TheoremViolation(m, f"verdict b_compatible but f^{m} has {rep.count} fixed points, "
                                      f"{exact[m]} of exact period {m}")
        if result.verdict is Verdict.CASE_C_COMPATIBLE and rep.count:
            raise TheoremViolation(m, f"verdict c_compatible but f^{m} has {rep.count} fixed points")
    return VerificationReport(spec.name, margin, DEFAULT_SAMPLES, grid_resolution, result, reports, exact)


# -- JSON map documents -------------------------------------------------------

def _complex(raw: Any, where: str) -> complex:
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return complex(raw)
    if isinstance(raw, Sequence) and not isinstance(raw, str) and len(raw) == 2:
        try:
            return complex(float(raw[0]), float(raw[1]))
        except (TypeError, ValueError):
            pass
    raise MalformedInput(where, "expected a number or a [re, im] pair")


def _parse_function(doc: Mapping, where: str):
    family = doc.get("family")
    if family == "disk_poly":
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, Sequence) or not coeffs:
            raise MalformedInput(f"{where}coeffs", "expected a non-empty list")
        return DiskPolynomial(tuple(_complex(c, f"{where}coeffs[{i}]") for i, c in enumerate(coeffs)))
    if family == "disk_affine":
        return DiskAffine(_complex(doc.get("a"), f"{where}a"), _complex(doc.get("b", 0), f"{where}b"))
    if family == "composition":
        maps = doc.get("maps")
        if not isinstance(maps, Sequence) or not maps:
            raise MalformedInput(f"{where}maps", "expected a non-empty list")
        return Composition(tuple(_parse_function(m, f"{where}maps[{i}].") for i, m in enumerate(maps)))
    raise MalformedInput(f"{where}family", f"unknown map family {family!r}")


def _parse_domain(doc: Any) -> Domain:
    if doc is None:
        return UNIT_DISK
    if not isinstance(doc, Mapping):
        raise MalformedInput("domain", "expected an object")
    kind = doc.get("type")
    try:
        if kind == "unit_disk":
            return UNIT_DISK
        if kind == "disk":
            return Disk(_complex(doc.get("center", [0, 0]), "domain.center"), float(doc.get("radius", 1.0)))
        if kind == "rectangle":
            bounds = doc.get("bounds")
            if not isinstance(bounds, Sequence) or len(bounds) != 4:
                raise MalformedInput("domain.bounds", "expected [x_min, x_max, y_min, y_max]")
            return Rectangle(*(float(b) for b in bounds))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput("domain", str(exc)) from None
    raise MalformedInput("domain.type", f"unknown domain type {kind!r}")


def map_from_document(doc: Any) -> MapSpec:
    """Parse ``{"family": ..., "domain": ..., "action": <homology document>}``."""
    if not isinstance(doc, Mapping):
        raise MalformedInput("<root>", "expected a JSON object")
    try:
        function = _parse_function(doc, "")
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput("coeffs", str(exc)) from None
    action_doc = doc.get("action", {"h": {}})
    _, action = from_document(action_doc)
    return MapSpec(function, _parse_domain(doc.get("domain")), action, doc.get("name"))


BUILTIN_MAPS = {
    "half": {"name": "z/2 on the unit disk", "family": "disk_affine", "a": [0.5, 0.0],
             "domain": {"type": "disk", "center": [0, 0], "radius": 1}, "action": {"h": {}}},
    "quadratic": {"name": "0.3 z^2 + 0.2 on the unit disk", "family": "disk_poly",
                  "coeffs": [[0.2, 0.0], [0.0, 0.0], [0.3, 0.0]],
                  "domain": {"type": "disk", "center": [0, 0], "radius": 1}, "action": {"h": {}}},
}
