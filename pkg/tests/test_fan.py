from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from hkfsig.errors import NonPositiveExponent, OddCount
from hkfsig.fan import ExponentData, build_fan, det, parse_exponents


def test_parse_splits_in_half():
    d = parse_exponents([5, 2, 2, 3])
    assert d.a == (5, 2) and d.b == (2, 3) and d.n == 2


def test_parse_single_pair():
    d = parse_exponents([3, 2])
    assert d.a == (3,) and d.b == (2,)


@pytest.mark.parametrize("values", [[1, 2, 3], []])
def test_parse_odd_count(values):
    with pytest.raises(OddCount):
        parse_exponents(values)


@pytest.mark.parametrize("values", [[0, 1], [1, -2], [2, 3, 0, 1]])
def test_parse_nonpositive(values):
    with pytest.raises(NonPositiveExponent):
        parse_exponents(values)


def test_exponent_data_validates():
    with pytest.raises(OddCount):
        ExponentData((1, 2), (1,))


def test_fan_two_variables():
    fan = build_fan(parse_exponents([5, 2, 2, 3]))
    assert fan.rays == ((0, 1), (2, 5), (3, 2), (1, 0))
    assert len(fan.cones) == 3


def test_fan_three_variables_slope_sort():
    fan = build_fan(ExponentData((2, 7, 4), (1, 5, 6)))
    assert fan.rays == ((0, 1), (1, 2), (5, 7), (3, 2), (1, 0))
    assert len(fan.cones) == 4


def test_fan_diagonal():
    fan = build_fan(ExponentData((1,), (1,)))
    assert fan.rays == ((0, 1), (1, 1), (1, 0))
    assert len(fan.cones) == 2


def test_proportional_pairs_merge():
    fan = build_fan(ExponentData((2, 4, 3), (1, 2, 3)))
    assert fan.rays == ((0, 1), (1, 2), (1, 1), (1, 0))


exponents = st.lists(st.tuples(st.integers(1, 9), st.integers(1, 9)), min_size=1, max_size=4)


@given(exponents)
def test_fan_invariants(pairs):
    data = ExponentData(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    fan = build_fan(data)
    assert fan.rays[0] == (0, 1) and fan.rays[-1] == (1, 0)
    assert len(set(fan.rays)) == len(fan.rays)
    for u, v in fan.cones:
        assert det(u, v) < 0
    slopes = [Fraction(r[1], r[0]) for r in fan.rays[1:]]
    assert slopes == sorted(slopes, reverse=True)


@given(exponents)
def test_fan_permutation_invariant(pairs):
    data = ExponentData(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    fan = build_fan(data)
    for perm in permutations(range(data.n)):
        assert build_fan(data.permuted(perm)) == fan


def test_sorted_input_is_already_fan_order():
    data = ExponentData((2, 7, 4), (1, 5, 6))
    slopes = [Fraction(a, b) for a, b in zip(data.a, data.b)]
    assert slopes == sorted(slopes, reverse=True)
    assert list(build_fan(data).rays[1:-1]) == [(1, 2), (5, 7), (3, 2)]
