import math

import numpy as np
import pytest

from holoperiods.classifier import Verdict
from holoperiods.errors import (
    EvaluationOverflow,
    HypothesisShapeViolated,
    MalformedInput,
    PreconditionNotStrictlyInside,
    TheoremViolation,
)
from holoperiods.harness import (
    BUILTIN_MAPS,
    DEDUP_RADIUS,
    RESIDUAL_TOL,
    Composition,
    Disk,
    DiskAffine,
    DiskPolynomial,
    MapSpec,
    Rectangle,
    exact_period_points,
    find_fixed_points,
    map_from_document,
    strictly_inside,
    verify_theorem,
)
from holoperiods.homology import validate_action

HALF = MapSpec(DiskAffine(0.5), name="half")
QUADRATIC = MapSpec(DiskPolynomial((0.2, 0, 0.3)), name="quadratic")
# 0.3 z^2 - z + 0.2 = 0, root inside the disk
QUADRATIC_FIXED = (1 - math.sqrt(1 - 4 * 0.3 * 0.2)) / (2 * 0.3)


def test_strictly_inside_examples():
    ok, margin = strictly_inside(HALF)
    assert ok and margin == pytest.approx(0.5, abs=1e-12)
    ok, margin = strictly_inside(MapSpec(DiskAffine(1)))
    assert not ok and margin == 0.0
    ok, margin = strictly_inside(QUADRATIC)
    assert ok and margin == pytest.approx(0.5, abs=1e-9)


def test_strictly_inside_detects_escape():
    ok, margin = strictly_inside(MapSpec(DiskAffine(0.5, 0.7)))
    assert not ok and margin == pytest.approx(-0.2, abs=1e-9)


def test_overflow():
    with pytest.raises(EvaluationOverflow):
        strictly_inside(MapSpec(DiskPolynomial((0, 1e308, 1e308)), Disk(0, 10.0)))


def test_half_fixed_points():
    for m in range(1, 6):
        rep = find_fixed_points(HALF, m)
        assert rep.count == 1
        assert abs(rep.points[0]) < 1e-10
        assert rep.lefschetz_value == 1 and rep.bound_satisfied


def test_quadratic_fixed_point():
    assert QUADRATIC_FIXED == pytest.approx(0.2137003521531088, abs=1e-15)
    rep = find_fixed_points(QUADRATIC, 1)
    assert rep.count == 1
    assert abs(rep.points[0] - QUADRATIC_FIXED) < 1e-10
    assert rep.count <= rep.lefschetz_value == 1


def test_identity_rejected():
    with pytest.raises(PreconditionNotStrictlyInside):
        find_fixed_points(MapSpec(DiskAffine(1)), 1)


def test_residuals_recheck():
    for m in (1, 3, 6):
        rep = find_fixed_points(QUADRATIC, m)
        for p, r in zip(rep.points, rep.residuals):
            assert r < RESIDUAL_TOL
            w, _ = QUADRATIC.iterate(np.array([p]), m)
            assert abs(w[0] - p) < RESIDUAL_TOL


def test_divisor_inclusion():
    reports = {m: find_fixed_points(QUADRATIC, m, 32) for m in range(1, 7)}
    for m, rep in reports.items():
        for d in range(1, m):
            if m % d == 0:
                for p in reports[d].points:
                    assert min(abs(p - q) for q in rep.points) < DEDUP_RADIUS
    assert all(len(exact_period_points(reports, m)) == 0 for m in range(2, 7))


def test_rectangle_and_composition():
    # z -> (z/2 + 0.1) then z -> 0.8 z: fixed point 0.08 / 0.6
    f = Composition((DiskAffine(0.5, 0.1), DiskAffine(0.8)))
    spec = MapSpec(f, Rectangle(-1, 1, -0.5, 0.5))
    assert strictly_inside(spec)[0]
    rep = find_fixed_points(spec, 1)
    assert rep.count == 1 and abs(rep.points[0] - 0.08 / 0.6) < 1e-10


def test_composition_derivative_by_finite_difference():
    f = Composition((DiskPolynomial((0.1, 0.4, 0.2j)), DiskAffine(0.7 - 0.1j, 0.05)))
    z = np.array([0.3 + 0.2j])
    h = 1e-7
    w, d = f.evaluate(z)
    fd = (f.evaluate(z + h)[0] - f.evaluate(z - h)[0]) / (2 * h)
    assert abs(d[0] - fd[0]) < 1e-7


def test_verify_half():
    rep = verify_theorem(HALF, 8)
    assert rep.classification.verdict is Verdict.CASE_B_COMPATIBLE
    assert all(r.count == 1 for r in rep.reports.values())
    assert rep.exact_period_counts == {1: 1, **{m: 0 for m in range(2, 9)}}


def test_verify_quadratic():
    rep = verify_theorem(QUADRATIC, 6)
    assert all(r.count == 1 for r in rep.reports.values())


def test_negative_control():
    wrong = MapSpec(DiskAffine(0.5), declared_action=validate_action({1: [[1]]}))
    with pytest.raises(TheoremViolation) as exc:
        verify_theorem(wrong, 4)
    assert exc.value.m == 1


def test_verdict_mismatch_is_reported(monkeypatch):
    import holoperiods.harness as harness

    real = harness.find_fixed_points

    def drop_points(spec, m, grid_resolution=64):
        rep = real(spec, m, grid_resolution)
        return harness.FixedPointReport(m, (), (), rep.lefschetz_value)

    monkeypatch.setattr(harness, "find_fixed_points", drop_points)
    with pytest.raises(TheoremViolation, match="b_compatible"):
        verify_theorem(HALF, 3)


def test_harness_refuses_non_hypothesis_shape():
    wrong = MapSpec(DiskAffine(0.5), declared_action=validate_action({1: [[1, 0], [0, 1]], 2: [[1]]}))
    with pytest.raises(HypothesisShapeViolated):
        verify_theorem(wrong, 2)


def test_deterministic():
    a = verify_theorem(QUADRATIC, 3, 24).to_dict()
    b = verify_theorem(QUADRATIC, 3, 24).to_dict()
    assert a == b


def test_document_parsing():
    spec = map_from_document(BUILTIN_MAPS["quadratic"])
    assert spec.function.coeffs == (0.2, 0, 0.3)
    spec = map_from_document({
        "family": "composition",
        "maps": [{"family": "disk_affine", "a": 0.5}, {"family": "disk_poly", "coeffs": [[0, 0], [1, 0]]}],
        "domain": {"type": "rectangle", "bounds": [-1, 1, -1, 1]},
        "action": {"h": {"1": []}},
    })
    assert isinstance(spec.domain, Rectangle)
    assert spec.declared_action.h1.n == 0


@pytest.mark.parametrize(
    "doc, field",
    [
        ({"family": "torus"}, "family"),
        ({"family": "disk_poly", "coeffs": []}, "coeffs"),
        ({"family": "disk_poly", "coeffs": [["a", 1]]}, "coeffs[0]"),
        ({"family": "disk_affine", "a": 0.5, "domain": {"type": "annulus"}}, "domain.type"),
        ({"family": "disk_affine", "a": 0.5, "domain": {"type": "disk", "radius": -1}}, "domain"),
        ({"family": "disk_affine", "a": 0.5, "action": {"h": {"1": [[1.5]]}}}, "h.1[0][0]"),
    ],
)
def test_document_errors(doc, field):
    with pytest.raises(MalformedInput) as exc:
        map_from_document(doc)
    assert exc.value.field == field
