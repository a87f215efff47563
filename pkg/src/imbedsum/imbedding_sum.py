"""Fixed-set sizes of automorphisms acting on maps, and the imbedding sum."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graphs import VERTICES, Graph, TypeDomain, automorphism_group
from .perm import CycleType, Permutation, PermutationGroup, cycle_type, euler_phi, regular_order
from .polynomials import CycleIndexPolynomial, evaluate_at_ones


def fixed_rotation_count(degree: int, d: int | None) -> int:
    """Cyclic orders of ``degree`` points fixed by conjugation with a permutation
    that is ``d``-regular on them (``d=None``: not regular, nothing is fixed).
    """
    if d is None:
        return 0
    if degree == 0:
        return 1
    blocks = degree // d
    return euler_phi(d) * math.factorial(blocks - 1) * d ** (blocks - 1)


def fixed_rotations_at_vertex(g: Graph, v: int, p: Permutation) -> int:
    nbrs = g.adjacency[v]
    if any(p(u) not in nbrs for u in nbrs):
        raise PreconditionError(f"N({v}) is not invariant under the permutation")
    return fixed_rotation_count(len(nbrs), regular_order(p, nbrs) if nbrs else 1)


@dataclass(frozen=True)
class FixedSetReport:
    gamma: Permutation
    per_orbit: tuple[tuple[int, int, int], ...]  # (representative, orbit length, local count)
    total: int


def fixed_set_size(g: Graph, gamma: Permutation, check: bool = True) -> FixedSetReport:
    """Number of maps of ``g`` fixed by the automorphism ``gamma``.

    One factor per vertex orbit, taken at the orbit's smallest vertex with
    gamma raised to the orbit length; stops at the first zero factor.
    """
    if check and not g.is_automorphism(gamma):
        raise PreconditionError("permutation is not an automorphism of the graph")
    per_orbit = []
    total = 1
    for cyc in gamma.cycles(include_fixed=True):
        v, length = min(cyc), len(cyc)
        local = fixed_rotations_at_vertex(g, v, gamma ** length)
        per_orbit.append((v, length, local))
        total *= local
        if total == 0:
            break
    return FixedSetReport(gamma, tuple(sorted(per_orbit)), total)


def imbedding_sum(g: Graph, domain: TypeDomain = VERTICES,
                  group: PermutationGroup | None = None) -> CycleIndexPolynomial:
    """Average over automorphisms of (fixed map count) × (cycle-type monomial)."""
    domain.check(g)
    if group is None:
        group = automorphism_group(g)
    counts: dict[CycleType, int] = {}
    for gamma in group:
        fixed = fixed_set_size(g, gamma, check=False).total
        if fixed:
            ct = cycle_type(domain.apply(gamma))
            counts[ct] = counts.get(ct, 0) + fixed
    return CycleIndexPolynomial(domain.degree(g), {ct: Fraction(c, group.order) for ct, c in counts.items()})


def unlabeled_count(g: Graph, domain: TypeDomain = VERTICES) -> int:
    value = evaluate_at_ones(imbedding_sum(g, domain))
    assert value.denominator == 1 and value > 0, f"Burnside count is not a positive integer: {value}"
    return value.numerator
