"""Graded homology actions: the integer matrices a self-map induces on rational homology.

Input documents look like::

    {"name": "phi3", "h": {"1": [[0, -1], [1, -1]]}}

Degrees are decimal-string keys; absent degrees are zero groups. Degree 0
defaults to the identity (connected manifold) and any other degree-0
matrix is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping

from holoperiods._jsonint import decode_int, encode_int
from holoperiods.errors import BadDegreeZero, MalformedInput, NonIntegerEntry, NonSquareMatrix
from holoperiods.matrix import IntMatrix

_EMPTY = IntMatrix(())


@dataclass(frozen=True)
class GradedHomologyAction:
    """Validated family ``degree -> f_{*k}``; degrees with zero homology are not stored."""

    degree_matrices: Mapping[int, IntMatrix]

    def __post_init__(self):
        object.__setattr__(self, "degree_matrices", MappingProxyType(dict(sorted(self.degree_matrices.items()))))

    def __eq__(self, other):
        if not isinstance(other, GradedHomologyAction):
            return NotImplemented
        return dict(self.degree_matrices) == dict(other.degree_matrices)

    def __hash__(self):
        return hash(tuple(self.degree_matrices.items()))

    @property
    def top_degree(self) -> int:
        return max(k for k, a in self.degree_matrices.items() if a.n > 0)

    def matrix(self, degree: int) -> IntMatrix:
        return self.degree_matrices.get(degree, _EMPTY)

    @property
    def h1(self) -> IntMatrix:
        return self.matrix(1)

    def powered(self, a: int) -> GradedHomologyAction:
        """The action of the iterate f^a: every matrix raised to the a-th power."""
        return GradedHomologyAction({k: m**a for k, m in self.degree_matrices.items()})


@dataclass(frozen=True)
class ShapeReport:
    satisfies_theorem_hypotheses: bool
    h1_rank: int
    violations: list[str] = field(default_factory=list)


def _parse_matrix(degree: int, raw: Any) -> IntMatrix:
    if not isinstance(raw, (list, tuple)):
        raise MalformedInput(f"h.{degree}", "matrix must be a list of rows")
    n = len(raw)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise NonSquareMatrix(degree)
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(decode_int(x))
            except ValueError:
                raise NonIntegerEntry(degree, (i, j)) from None
        rows.append(tuple(parsed))
    return IntMatrix(tuple(rows))


def validate_action(raw: Mapping[Any, Any]) -> GradedHomologyAction:
    """Validate a degree-indexed family of integer matrices.

    Keys may be ints or decimal strings. Matrices may be nested lists or
    ``IntMatrix`` instances. Empty matrices (zero groups) are dropped.
    """
    if not isinstance(raw, Mapping):
        raise MalformedInput("h", "expected an object mapping degrees to matrices")
    matrices: dict[int, IntMatrix] = {}
    for key, value in raw.items():
        try:
            degree = decode_int(key)
        except ValueError:
            raise MalformedInput(f"h.{key}", "degree key is not an integer") from None
        if degree < 0:
            raise MalformedInput(f"h.{key}", "degree must be non-negative")
        if degree in matrices:
            raise MalformedInput(f"h.{key}", "duplicate degree")
        mat = value if isinstance(value, IntMatrix) else _parse_matrix(degree, value)
        matrices[degree] = mat
    if 0 in matrices:
        if matrices[0] != IntMatrix.identity(1):
            raise BadDegreeZero()
    else:
        matrices[0] = IntMatrix.identity(1)
    return GradedHomologyAction({k: m for k, m in matrices.items() if m.n > 0})


def hypothesis_shape(action: GradedHomologyAction) -> ShapeReport:
    """Check H_0 = Q, H_1 = Q^n and H_k = 0 for k > 1."""
    violations = []
    if action.matrix(0) != IntMatrix.identity(1):
        violations.append("H_0 action is not the identity on Q")
    for k, mat in action.degree_matrices.items():
        if k > 1 and mat.n > 0:
            violations.append(f"H_{k} nonzero")
    return ShapeReport(not violations, action.h1.n, violations)


def to_document(action: GradedHomologyAction, name: str | None = None) -> dict:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc["h"] = {str(k): [[encode_int(x) for x in row] for row in m.rows] for k, m in action.degree_matrices.items()}
    return doc


def from_document(doc: Any) -> tuple[str | None, GradedHomologyAction]:
    """Parse an input document; returns ``(name, action)``."""
    if not isinstance(doc, Mapping):
        raise MalformedInput("<root>", "expected a JSON object")
    if "h" not in doc:
        raise MalformedInput("h", "missing required field")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise MalformedInput("name", "must be a string")
    return name, validate_action(doc["h"])
