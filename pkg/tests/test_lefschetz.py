import random

import pytest
from hypothesis import given

from holoperiods.homology import validate_action
from holoperiods.lefschetz import lefschetz_number, lefschetz_sequence, trace_power_sums, zeta
from holoperiods.matrix import IntMatrix
from holoperiods.polynomials import IntPolynomial, char_poly

from conftest import int_matrices, random_matrix
from oracles import lefschetz_by_matrix_powers, rational_series, zeta_from_sequence

P = IntPolynomial.of
PHI3 = IntMatrix.companion([1, 1, 1])


def test_power_sums():
    # primitive cube roots: 2 cos(2 pi m / 3) = -1, -1, 2
    assert trace_power_sums(P([1, 1, 1]), 3) == [-1, -1, 2]
    assert trace_power_sums(P([-2, 1]), 4) == [2, 4, 8, 16]
    assert trace_power_sums(P([0, 0, 1]), 3) == [0, 0, 0]
    assert trace_power_sums(P([1]), 3) == [0, 0, 0]


def test_power_sums_need_monic():
    with pytest.raises(ValueError):
        trace_power_sums(P([1, 2]), 3)


def test_lefschetz_number_closed_forms():
    neg = validate_action({1: [[-1]]})
    assert lefschetz_number(neg, 1) == 2
    assert lefschetz_number(neg, 2) == 0
    for n in range(1, 5):
        zero = validate_action({1: IntMatrix.zeros(n)})
        assert all(lefschetz_number(zero, m) == 1 for m in range(1, 10))
    one = validate_action({1: [[1]]})
    assert all(lefschetz_number(one, m) == 0 for m in range(1, 10))


def test_lefschetz_number_general_action():
    # torus-shaped homology, rotation: 1 - 2 + 1
    torus = validate_action({1: [[1, 0], [0, 1]], 2: [[1]]})
    assert lefschetz_number(torus, 3) == 0
    assert lefschetz_sequence(torus, 4).values == (0, 0, 0, 0)


def test_sequence_examples():
    assert lefschetz_sequence(validate_action({1: PHI3}), 3).values == (2, 2, -1)
    assert lefschetz_sequence(validate_action({1: [[2]]}), 3).values == (-1, -3, -7)
    assert lefschetz_sequence(validate_action({1: [[0]]}), 5).values == (1, 1, 1, 1, 1)
    assert lefschetz_sequence(validate_action({}), 3).values == (1, 1, 1)


def test_sequence_indexing():
    seq = lefschetz_sequence(validate_action({1: [[2]]}), 3)
    assert seq[1] == -1 and seq[3] == -7 and seq.max_m == 3
    with pytest.raises(IndexError):
        seq[0]


@given(int_matrices(max_n=5, lo=-3, hi=3))
def test_newton_path_equals_matrix_powers(a):
    seq = lefschetz_sequence(validate_action({1: a}), 20)
    assert list(seq.values) == lefschetz_by_matrix_powers(a, 20)


def test_values_are_exact_python_ints():
    seq = lefschetz_sequence(validate_action({1: [[7, 1], [2, 9]]}), 60)
    assert all(type(v) is int for v in seq.values)
    assert seq[60] == lefschetz_by_matrix_powers(IntMatrix.of([[7, 1], [2, 9]]), 60)[-1]


@given(int_matrices(max_n=4, lo=-3, hi=3))
def test_iterate_composition(a):
    action = validate_action({1: a, 2: [[1, 1], [0, 1]]})
    for x in (2, 3):
        for y in (1, 2, 5):
            assert lefschetz_number(action, x * y) == lefschetz_number(action.powered(x), y)


def test_zeta_examples():
    z = zeta(validate_action({1: [[1]]}))
    assert z.numerator == P([1]) and z.denominator == P([1])
    z = zeta(validate_action({1: [[0]]}))
    assert z.numerator == P([1]) and z.denominator == P([1, -1])
    z = zeta(validate_action({1: [[-1]]}))
    assert z.numerator == P([1, 1]) and z.denominator == P([1, -1])


def test_zeta_minus_one_by_exponential():
    # exp(sum L_m t^m / m) with L = 2, 0, 2, 0 equals (1 + t)/(1 - t) to order 4
    expected = zeta_from_sequence([2, 0, 2, 0], 4)
    assert rational_series([1, 1], [1, -1], 4) == expected


def test_zeta_consistency_random(rng):
    for _ in range(30):
        a = random_matrix(rng, rng.randint(0, 5), -3, 3)
        action = validate_action({1: a})
        z = zeta(action)
        seq = lefschetz_sequence(action, 10)
        assert rational_series(z.numerator.coeffs, z.denominator.coeffs, 10) == zeta_from_sequence(seq.values, 10)


def test_zeta_refuses_general_shape():
    from holoperiods.errors import HypothesisShapeViolated

    with pytest.raises(HypothesisShapeViolated):
        zeta(validate_action({1: [[1]], 2: [[1]]}))
