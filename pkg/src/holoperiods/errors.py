"""Exception hierarchy shared across the package."""


class HoloPeriodsError(Exception):
    """Base class for every error raised by this package."""


class MalformedInput(HoloPeriodsError, ValueError):
    """An input document is structurally wrong; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NonSquareMatrix(MalformedInput):
    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"h.{degree}", "matrix is not square")


class NonIntegerEntry(MalformedInput):
    def __init__(self, degree: int, position: tuple[int, int]):
        self.degree = degree
        self.position = position
        super().__init__(f"h.{degree}[{position[0]}][{position[1]}]", "entry is not an integer")


class BadDegreeZero(MalformedInput):
    def __init__(self):
        super().__init__("h.0", "degree-0 action must be the 1x1 identity (connected manifold)")


class HypothesisShapeViolated(HoloPeriodsError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("homology does not have the required shape: " + "; ".join(self.violations))


class ZeroConstantTerm(HoloPeriodsError, ValueError):
    pass


class RootOnCircle(HoloPeriodsError, ValueError):
    """Polynomial shares a factor with its reciprocal (roots on or mirrored across the circle)."""


class DegenerateEpsilon(HoloPeriodsError, ValueError):
    pass


class WitnessNotFound(HoloPeriodsError):
    def __init__(self, hard_cap: int):
        self.hard_cap = hard_cap
        super().__init__(f"no admissibility violation found up to m = {hard_cap}; raise the cap")


class EvaluationOverflow(HoloPeriodsError, ArithmeticError):
    pass


class PreconditionNotStrictlyInside(HoloPeriodsError):
    def __init__(self, margin: float):
        self.margin = margin
        super().__init__(f"map does not send the domain strictly inside itself (margin {margin:.3g})")


class TheoremViolation(HoloPeriodsError):
    """Observed fixed-point data contradicts the Lefschetz inequality or the verdict."""

    def __init__(self, m: int, message: str):
        self.m = m
        super().__init__(f"m={m}: {message}")
