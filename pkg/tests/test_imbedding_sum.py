import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from imbedsum.errors import PreconditionError
from imbedsum.graphs import automorphism_group, bouquet_model, complete, enumerate_rotation_systems, act, wheel
from imbedsum.imbedding_sum import (fixed_rotation_count, fixed_rotations_at_vertex, fixed_set_size,
                                    imbedding_sum, unlabeled_count)
from imbedsum.oracle import burnside_scan, fixed_rotations_brute
from imbedsum.perm import Permutation, cycle_type
from imbedsum.polynomials import evaluate_at_ones


def test_k4_imbedding_sum_display(k4):
    z = imbedding_sum(k4)
    assert z.render(24) == "(1/24)*(16*s1^4 + 32*s1*s3 + 12*s2^2 + 12*s4)"
    assert evaluate_at_ones(z) == 3


def test_k2_and_k3():
    assert imbedding_sum(complete(2)).render() == "(1/2)*(s1^2 + s2)"
    assert unlabeled_count(complete(3)) == 1


@given(st.integers(1, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.permutations(range(1, m + 1)))))
@settings(max_examples=60, deadline=None)
def test_fixed_count_formula_against_brute_force(data):
    m, images = data
    # a star with m leaves; p permutes the leaves and fixes the center
    from imbedsum.graphs import Graph
    g = Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])
    p = Permutation((0,) + tuple(images))
    assert fixed_rotations_at_vertex(g, 0, p) == len(fixed_rotations_brute(g, 0, p))


@pytest.mark.parametrize("deg,d,expected", [(4, 1, 6), (4, 2, 2), (4, 4, 2), (6, 3, 6), (6, 2, 8), (0, 1, 1)])
def test_fixed_rotation_count_values(deg, d, expected):
    assert fixed_rotation_count(deg, d) == expected


def test_non_invariant_neighborhood_rejected(k4):
    with pytest.raises(PreconditionError):
        fixed_rotations_at_vertex(wheel(4), 0, Permutation.parse("(0 1)", 5))


def test_non_automorphism_rejected():
    with pytest.raises(PreconditionError):
        fixed_set_size(wheel(4), Permutation.parse("(0 1)", 5))


@pytest.mark.parametrize("g", [complete(4), wheel(4), bouquet_model(2)], ids=["K4", "W4", "B2"])
def test_fixed_set_sizes_against_scan(g):
    scan = burnside_scan(g)
    for gamma in automorphism_group(g):
        assert fixed_set_size(g, gamma).total == scan[gamma]


def test_engine_equals_direct_burnside_on_k4(k4):
    maps = list(enumerate_rotation_systems(k4))
    group = list(automorphism_group(k4))
    counts = {}
    for gamma in group:
        fixed = sum(act(gamma, m, k4) == m for m in maps)
        ct = cycle_type(gamma)
        counts[ct] = counts.get(ct, 0) + fixed
    z = imbedding_sum(k4)
    assert {ct: Fraction(c, 24) for ct, c in counts.items() if c} == z.terms


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 1), (4, 3), (5, 78)])
def test_unlabeled_complete_counts(n, expected):
    assert unlabeled_count(complete(n)) == expected


@pytest.mark.parametrize("rim,expected", [(4, 16), (5, 80), (6, 666)])
def test_wheel_totals(rim, expected):
    assert unlabeled_count(wheel(rim)) == expected
