"""Explicit imbedding-sum formulas for the graph families, evaluated exactly.

Each function returns a :class:`CycleIndexPolynomial` on the same domain the
engine uses for the corresponding vertex model, so results compare termwise
with :func:`imbedsum.imbedding_sum.imbedding_sum`.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import PreconditionError
from .perm import CycleType, divisors, euler_phi
from .polynomials import CycleIndexPolynomial, cyclic_cycle_index, evaluate_at_ones, substitute_constant


def _ct(*parts: tuple[int, int]) -> CycleType:
    return CycleType(tuple(parts))


def _collect(degree: int, pairs) -> CycleIndexPolynomial:
    terms: dict[CycleType, Fraction] = {}
    for ct, c in pairs:
        terms[ct] = terms.get(ct, Fraction(0)) + c
    return CycleIndexPolynomial(degree, terms)


def z_complete(n: int) -> CycleIndexPolynomial:
    if n < 2:
        raise PreconditionError("z_complete needs n >= 2")
    base = factorial(n - 2)
    pairs = [(_ct((d, n // d)), Fraction(base ** (n // d), d ** (n // d) * factorial(n // d)))
             for d in divisors(n)]
    pairs += [(_ct((1, 1), (d, (n - 1) // d)), Fraction(euler_phi(d) * base ** ((n - 1) // d), n - 1))
              for d in divisors(n - 1) if d != 1]
    return _collect(n, pairs)


def z_wheel(n: int) -> CycleIndexPolynomial:
    """Imbedding sum of the wheel with rim size ``n`` (n + 1 vertices, n >= 4)."""
    if n < 4:
        raise PreconditionError("z_wheel needs rim size n >= 4; W_4 is K_4")
    pairs = []
    for d in divisors(n):
        c = Fraction(euler_phi(d) ** 2 * (2 * d) ** (n // d) * factorial(n // d - 1), d * 2 * n)
        pairs.append((_ct((1, 1), (d, n // d)), c))
    if n % 2 == 0:
        pairs.append((_ct((1, 1), (2, n // 2)), Fraction(2 ** (n - 3) * factorial(n // 2 - 1))))
    return _collect(n + 1, pairs)


def z_bouquet(n: int) -> CycleIndexPolynomial:
    """Imbedding sum of the twice-subdivided bouquet of ``n`` loops (2n + 1 vertices)."""
    if n < 1:
        raise PreconditionError("z_bouquet needs n >= 1")
    pairs = []
    for d in divisors(n):
        q = n // d
        c = Fraction(euler_phi(d) * factorial(2 * q) * d ** q, 2 ** q * factorial(q) * 2 * n)
        pairs.append((_ct((1, 1), (d, 2 * q)), c))
    for d in divisors(n):
        q = n // d
        s = sum(Fraction(factorial(q) * d ** m, factorial(q - 2 * m) * factorial(m))
                for m in range((n - 1) // (2 * d) + 1))
        pairs.append((_ct((1, 1), (2 * d, q)), euler_phi(2 * d) * s / (2 * n)))
    return _collect(2 * n + 1, pairs)


def z_directed_bouquet(n: int) -> CycleIndexPolynomial:
    """Imbedding sum of the directed bouquet, cycle types read on its ``n`` loops."""
    if n < 1:
        raise PreconditionError("z_directed_bouquet needs n >= 1")
    pairs = []
    for d in divisors(n):
        q = n // d
        pairs.append((_ct((d, q)), Fraction(euler_phi(d) * factorial(2 * q) * d ** q, 2 * n * factorial(q))))
    return _collect(n, pairs)


def z_directed_bouquet_burnside(n: int) -> CycleIndexPolynomial:
    """The same sum before simplification: an explicit average over the
    d-regular permutations of the loops.  Kept as an independent route.
    """
    if n < 1:
        raise PreconditionError("z_directed_bouquet needs n >= 1")
    pairs = []
    for d in divisors(n):
        q = n // d
        regular = Fraction(factorial(n), d ** q * factorial(q))
        fixed = euler_phi(d) * factorial(2 * q - 1) * d ** (2 * q - 1)
        pairs.append((_ct((d, q)), regular * fixed / factorial(n)))
    return _collect(n, pairs)


def z_rooted_complete(n: int) -> CycleIndexPolynomial:
    """Imbedding sum of K_n with one vertex rooted (n vertices, root fixed)."""
    if n < 2:
        raise PreconditionError("z_rooted_complete needs n >= 2")
    base = factorial(n - 2)
    pairs = [(_ct((1, 1), (d, (n - 1) // d)), Fraction(euler_phi(d) * base ** ((n - 1) // d), n - 1))
             for d in divisors(n - 1)]
    return _collect(n, pairs)


def rooted_vertex_count(n: int) -> int:
    """Ways to root the unlabeled imbeddings of K_n at one vertex."""
    if n < 2:
        raise PreconditionError("rooted_vertex_count needs n >= 2")
    total = sum(Fraction(euler_phi(d) * factorial(n - 2) ** ((n - 1) // d)) for d in divisors(n - 1)) / (n - 1)
    assert total.denominator == 1
    return total.numerator


def rooted_vertex_count_via_cyclic_index(n: int) -> int:
    """Same count as the cycle index of C_{n-1} with every variable set to (n-2)!."""
    if n < 2:
        raise PreconditionError("rooted_vertex_count needs n >= 2")
    value = substitute_constant(cyclic_cycle_index(n - 1, 1, 0), factorial(n - 2))
    assert value.denominator == 1
    return value.numerator


def unlabeled_total(z: CycleIndexPolynomial) -> int:
    value = evaluate_at_ones(z)
    assert value.denominator == 1
    return value.numerator
