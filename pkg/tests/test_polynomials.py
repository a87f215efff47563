from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from imbedsum.errors import PreconditionError
from imbedsum.perm import CycleType, Permutation, closure
from imbedsum.polynomials import (CycleIndexPolynomial, FigureSeries, cyclic_cycle_index, evaluate_at_ones,
                                  group_cycle_index, poly_sum, substitute, substitute_constant)

S4 = closure([Permutation.parse("(0 1)", 4), Permutation.parse("(0 1 2 3)", 4)])


def test_s4_cycle_index():
    z = group_cycle_index(S4)
    assert z.render() == "(1/24)*(s1^4 + 6*s1^2*s2 + 8*s1*s3 + 3*s2^2 + 6*s4)"
    assert evaluate_at_ones(z) == 1


def test_render_with_group_order_denominator():
    z = CycleIndexPolynomial(4, {CycleType.of({1: 4}): Fraction(2, 3), CycleType.of({4: 1}): Fraction(1, 2)})
    assert z.render(24) == "(1/24)*(16*s1^4 + 12*s4)"
    # a denominator that would leave fractions falls back to the lcm
    assert z.render(5) == "(1/6)*(4*s1^4 + 3*s4)"


def test_zero_terms_dropped_and_arithmetic():
    a = CycleIndexPolynomial(2, {CycleType.of({1: 2}): Fraction(1, 2), CycleType.of({2: 1}): Fraction(1, 2)})
    assert (a - a).is_zero()
    assert (a + a) == 2 * a
    assert poly_sum([a, a, a], 2) == 3 * a


def test_degree_mismatch_rejected():
    a = CycleIndexPolynomial.zero(2)
    b = CycleIndexPolynomial.zero(3)
    with pytest.raises(PreconditionError):
        a + b


def test_json_round_trip():
    z = group_cycle_index(S4)
    assert CycleIndexPolynomial.from_json(z.to_json()) == z


@pytest.mark.parametrize("d,blocks,fixed", [(1, 1, 0), (4, 1, 0), (6, 2, 1), (5, 3, 1), (12, 1, 0)])
def test_cyclic_cycle_index_matches_generated_group(d, blocks, fixed):
    # the cyclic group generated by a product of `blocks` d-cycles
    degree = d * blocks + fixed
    gen = Permutation.from_cycles([list(range(b * d, (b + 1) * d)) for b in range(blocks)], degree)
    assert cyclic_cycle_index(d, blocks, fixed) == group_cycle_index(closure([gen], degree=degree))


def test_polya_counts_necklaces():
    # two-colored necklaces of length 6 under rotation: 14
    z = cyclic_cycle_index(6, 1)
    assert substitute_constant(z, 2) == 14
    series = substitute(z, FigureSeries.colors(2))
    assert [series.coefficient((k, 6 - k)) for k in range(7)] == [1, 1, 3, 4, 3, 1, 1]


@given(st.integers(1, 5), st.integers(1, 4))
def test_substitution_at_ones_matches_constant(n, k):
    z = cyclic_cycle_index(n, 1)
    series = substitute(z, FigureSeries.colors(k))
    assert series.total() == substitute_constant(z, k)


def test_figure_series_validation():
    with pytest.raises(PreconditionError):
        FigureSeries(1, {(1,): -1})
    assert FigureSeries.constant(3).value_at_ones() == 3
