"""Square matrices over the integers with arbitrary-precision entries."""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square integer matrix, stored row-major as nested tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("IntMatrix must be square")
            for x in row:
                if type(x) is not int:
                    raise TypeError(f"IntMatrix entries must be int, got {type(x).__name__}")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def companion(cls, coeffs: Sequence[int]) -> IntMatrix:
        """Companion matrix of the monic polynomial with ``coeffs`` (constant first, leading 1)."""
        n = len(coeffs) - 1
        if n < 0 or coeffs[-1] != 1:
            raise ValueError("companion matrix needs a monic polynomial")
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -coeffs[i]
        return cls.of(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def trace_of_product(self, other: IntMatrix) -> int:
        """tr(self @ other) without forming the product."""
        return sum(sum(map(mul, row, col)) for row, col in zip(self.rows, zip(*other.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in self.rows))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def __pow__(self, k: int) -> IntMatrix:
        # binary powering
        if k < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"
