"""Lefschetz numbers of iterates and period-set classification for holomorphic self-maps.

The input is the action a map induces on rational homology. Under the
shape H_0 = Q, H_1 = Q^n, H_k = 0 (k > 1) the package decides whether the
action forces some iterate to have infinitely many fixed points, and if
so produces the iterate that witnesses it.
"""

from holoperiods.classifier import (
    AdmissibilityViolation,
    ClassificationResult,
    ProofCase,
    Verdict,
    WitnessKind,
    admissibility_violation,
    classify,
    period_set_statement,
)
from holoperiods.homology import GradedHomologyAction, ShapeReport, hypothesis_shape, validate_action
from holoperiods.lefschetz import LefschetzSequence, lefschetz_number, lefschetz_sequence, trace_power_sums, zeta
from holoperiods.matrix import IntMatrix
from holoperiods.polynomials import IntPolynomial, char_poly
from holoperiods.spectrum import ReturnTimeQuery, dirichlet_bound, return_time, spectrum_summary

__version__ = "0.1.0"
