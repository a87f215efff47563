import itertools
import math

import pytest
from hypothesis import given, strategies as st

from imbedsum.errors import CapExceeded, PreconditionError
from imbedsum.perm import (CycleType, Permutation, PermutationGroup, closure, compose, conjugate, cycle_type,
                           divisors, euler_phi, mobius, orbit_length, regular_order)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(n))).map(lambda xs: Permutation(tuple(xs)))


def same_degree_pair():
    return st.integers(1, 7).flatmap(
        lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)))
    ).map(lambda ab: (Permutation(tuple(ab[0])), Permutation(tuple(ab[1]))))


def test_rejects_non_bijection():
    with pytest.raises(PreconditionError):
        Permutation((0, 0, 1))


def test_parse_one_based_and_zero_based():
    p = Permutation.parse("(1 2 3)(4 5)", 5, base=1)
    q = Permutation.parse("(0 1 2)(3 4)", 5)
    assert p == q
    assert p.to_cycle_string(1) == "(1 2 3)(4 5)"
    assert Permutation.parse("()", 3).is_identity()


def test_compose_applies_right_factor_first():
    a = Permutation.parse("(0 1)", 3)
    b = Permutation.parse("(1 2)", 3)
    ab = compose(a, b)
    assert ab(1) == a(b(1)) == 2
    assert ab(2) == 0


def test_conjugate_relabels_cycles():
    rho = Permutation.parse("(1 2 3)", 5)
    gamma = Permutation.parse("(0 1 2 3 4)", 5)
    assert conjugate(rho, gamma) == Permutation.parse("(2 3 4)", 5)


@given(same_degree_pair())
def test_conjugation_preserves_cycle_type(pair):
    rho, gamma = pair
    assert cycle_type(conjugate(rho, gamma)) == cycle_type(rho)


@given(perms)
def test_inverse_and_powers(p):
    assert (p * p.inverse()).is_identity()
    order = math.lcm(*[len(c) for c in p.cycles(include_fixed=True)])
    assert (p ** order).is_identity()
    assert p ** -1 == p.inverse()


@given(perms)
def test_json_round_trip(p):
    assert Permutation.from_json(p.to_json()) == p


@given(perms)
def test_cycle_type_degree(p):
    ct = cycle_type(p)
    assert ct.degree == p.degree
    assert sum(orbit_length(p, x) == 1 for x in range(p.degree)) == ct.multiplicity(1)


def test_cycle_type_monomial():
    assert CycleType.of({1: 4, 2: 1}).monomial() == "s1^4*s2"
    assert CycleType(((2, 1), (1, 2), (1, 2))) == CycleType.of({1: 4, 2: 1})


def test_regular_order():
    p = Permutation.parse("(0 1)(2 3)(4 5 6)", 7)
    assert regular_order(p, [0, 1, 2, 3]) == 2
    assert regular_order(p, [0, 1, 4, 5, 6]) is None
    with pytest.raises(PreconditionError):
        regular_order(p, [0, 2])


def test_closure_symmetric_group_orders():
    for n in range(1, 6):
        gens = [Permutation.parse("(0 1)", n)] if n > 1 else []
        if n > 2:
            gens.append(Permutation.from_cycles([list(range(n))], n))
        assert closure(gens, degree=n).order == math.factorial(n)


def test_closure_cap():
    gens = [Permutation.parse("(0 1)", 6), Permutation.from_cycles([list(range(6))], 6)]
    with pytest.raises(CapExceeded):
        closure(gens, cap=100)


def test_subgroup_relation():
    s3 = closure([Permutation.parse("(0 1)", 3), Permutation.parse("(0 1 2)", 3)])
    c3 = closure([Permutation.parse("(0 1 2)", 3)])
    assert c3.is_subgroup_of(s3) and not s3.is_subgroup_of(c3)
    assert Permutation.parse("(0 2 1)", 3) in c3


def _phi_sieve(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _mu_brute(n):
    # sum of mu over divisors is [n == 1]
    if n == 1:
        return 1
    return -sum(_mu_brute(d) for d in range(1, n) if n % d == 0)


@pytest.mark.parametrize("n", range(1, 61))
def test_arithmetic_functions(n):
    assert euler_phi(n) == _phi_sieve(n)
    assert mobius(n) == _mu_brute(n)
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("fn", [euler_phi, mobius, divisors])
def test_arithmetic_rejects_nonpositive(fn):
    with pytest.raises(PreconditionError):
        fn(0)


def test_group_container():
    g = PermutationGroup([Permutation(p) for p in itertools.permutations(range(3))], 3)
    assert len(g) == g.order == 6
