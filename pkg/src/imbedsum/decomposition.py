"""Splitting an imbedding sum into cycle indexes of map-automorphism groups.

Two routes:

* families whose map-automorphism groups are all cyclic decompose uniquely,
  and the class counts per symmetry order come from Möbius inversion over
  the divisor lattice (:func:`mobius_invert`, :func:`profile`);
* in general, :func:`decompose_all` searches exhaustively for nonnegative
  integer combinations of candidate cycle indexes, after
  :func:`candidate_filter` has discarded groups that cannot occur.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import closed_forms
from .errors import PreconditionError
from .graphs import Graph
from .perm import (CycleType, Permutation, PermutationGroup, closure, cycle_type, divisors, euler_phi,
                   mobius)
from .polynomials import CycleIndexPolynomial, cyclic_cycle_index, group_cycle_index, poly_sum

FAMILIES = ("wheel", "bouquet", "directed_bouquet", "rooted_complete")


def mobius_invert(f: Mapping[int, Fraction | int], n: int) -> dict[int, int]:
    """Class counts ``i_d`` from the cyclic-monomial coefficients ``f(d)``.

    ``f(d)`` is the coefficient of ``s_d^{n/d}`` (possibly times fixed
    points) in a sum of cycle indexes of cyclic groups of orders dividing
    ``n``.  Raises if the result is not integral, which means ``f`` is not
    such a sum.
    """
    divs = divisors(n)
    missing = [d for d in divs if d not in f]
    if missing:
        raise PreconditionError(f"coefficients missing for divisors {missing}")
    out = {}
    for d in divs:
        value = d * sum(Fraction(f[k]) / euler_phi(k) * mobius(k // d) for k in divs if k % d == 0)
        if value.denominator != 1 or value < 0:
            raise PreconditionError(f"i_{d} = {value} is not a nonnegative integer")
        out[d] = value.numerator
    return out


def mobius_forward(i: Mapping[int, int], n: int) -> dict[int, Fraction]:
    """Inverse of :func:`mobius_invert`: f(d) = sum over d|k|n of i_k φ(d)/k."""
    return {d: sum((Fraction(i.get(k, 0) * euler_phi(d), k) for k in divisors(n) if k % d == 0), Fraction(0))
            for d in divisors(n)}


@dataclass(frozen=True)
class FamilyShape:
    """How a cyclic family's symmetry groups sit on the cycle-type domain."""

    moved: int          # points in the regular orbits (cyclic group order divides this)
    fixed: int          # points every symmetry fixes
    group_order: int    # order of the graph automorphism group
    labeled_total: int  # number of rotation systems
    row_limit: int      # largest symmetry order shown in the published tables


def family_shape(family: str, n: int) -> FamilyShape:
    f = math.factorial
    if family == "wheel":
        if n < 4:
            raise PreconditionError("wheel profiles need rim size n >= 4")
        return FamilyShape(n, 1, 2 * n, f(n - 1) * 2 ** n, n)
    if family == "bouquet":
        if n < 1:
            raise PreconditionError("bouquet profiles need n >= 1")
        return FamilyShape(2 * n, 1, 2 ** n * f(n), f(2 * n - 1), 2 * n)
    if family == "directed_bouquet":
        if n < 1:
            raise PreconditionError("directed bouquet profiles need n >= 1")
        return FamilyShape(n, 0, f(n), f(2 * n - 1), n)
    if family == "rooted_complete":
        if n < 1:
            raise PreconditionError("rooted complete profiles need n >= 1")
        if n == 1:
            return FamilyShape(1, 0, 1, 1, 1)
        return FamilyShape(n - 1, 1, f(n - 1), f(n - 2) ** n, n)
    raise PreconditionError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_closed_form(family: str, n: int) -> CycleIndexPolynomial:
    if family == "wheel":
        return closed_forms.z_wheel(n)
    if family == "bouquet":
        return closed_forms.z_bouquet(n)
    if family == "directed_bouquet":
        return closed_forms.z_directed_bouquet(n)
    if family == "rooted_complete":
        if n == 1:
            # K_1: a single empty rotation system on one vertex
            return CycleIndexPolynomial(1, {CycleType(((1, 1),)): Fraction(1)})
        return closed_forms.z_rooted_complete(n)
    raise PreconditionError(f"unknown family {family!r}; expected one of {FAMILIES}")


def cyclic_coefficients(z: CycleIndexPolynomial, moved: int, fixed: int) -> dict[int, Fraction]:
    """Coefficients of the monomials s_1^fixed s_d^(moved/d), one per divisor d.

    Raises when ``z`` has any other monomial, since then it cannot be a sum
    of such cyclic cycle indexes.
    """
    wanted = {CycleType(((1, fixed), (d, moved // d))): d for d in divisors(moved)}
    stray = [ct for ct in z.terms if ct not in wanted]
    if stray:
        raise PreconditionError(f"not a cyclic decomposition: stray monomials {[str(c) for c in stray]}")
    return {d: z.coefficient(ct) for ct, d in wanted.items()}


@dataclass(frozen=True)
class ProfileEntry:
    unlabeled: int
    labeled_per_class: int
    labeled_total: int


@dataclass(frozen=True)
class SymmetryProfile:
    family: str
    n: int
    group_order: int
    entries: dict[int, ProfileEntry] = field(default_factory=dict)

    @property
    def unlabeled_total(self) -> int:
        return sum(e.unlabeled for e in self.entries.values())

    @property
    def labeled_total(self) -> int:
        return sum(e.labeled_total for e in self.entries.values())

    def unlabeled(self) -> dict[int, int]:
        return {d: e.unlabeled for d, e in self.entries.items()}

    def labeled(self) -> dict[int, int]:
        return {d: e.labeled_total for d, e in self.entries.items()}


def labeled_counts(class_counts: Mapping, stabilizer_orders: Mapping, gamma_order: int) -> dict:
    """Labeled imbeddings per class (the stabilizer's index) and per bucket.

    Returns ``{key: (per_class, count * per_class)}``.
    """
    out = {}
    for key, count in class_counts.items():
        order = stabilizer_orders[key]
        if gamma_order % order:
            raise PreconditionError(f"stabilizer order {order} does not divide |Γ| = {gamma_order}")
        per_class = gamma_order // order
        out[key] = (per_class, count * per_class)
    return out


def profile(family: str, n: int) -> SymmetryProfile:
    """Counts of unlabeled and labeled imbeddings by cyclic symmetry order."""
    shape = family_shape(family, n)
    z = family_closed_form(family, n)
    i = mobius_invert(cyclic_coefficients(z, shape.moved, shape.fixed), shape.moved)
    lab = labeled_counts(i, {d: d for d in i}, shape.group_order)
    entries = {d: ProfileEntry(i[d], lab[d][0], lab[d][1]) for d in sorted(i)}
    prof = SymmetryProfile(family, n, shape.group_order, entries)
    if prof.labeled_total != shape.labeled_total:
        raise AssertionError(f"labeled total {prof.labeled_total} != {shape.labeled_total} rotation systems")
    return prof


def explicit_symmetry_counts(family: str, n: int) -> dict[int, int]:
    """Per-family explicit formulas for ``i_d``, written out independently of
    the closed-form polynomials.  Used to cross-check :func:`profile`.
    """
    f = math.factorial
    shape = family_shape(family, n)
    if family == "rooted_complete" and n == 1:
        return {1: 1}
    top = shape.moved
    out: dict[int, Fraction] = {}
    for d in divisors(top):
        chain = [k for k in divisors(top) if k % d == 0]
        if family == "wheel":
            def g(k):
                base = Fraction(euler_phi(k) ** 2 * (2 * k) ** (n // k) * f(n // k - 1), 2 * n * k)
                if k == 2:
                    base += 2 ** (n - 3) * f(n // 2 - 1)
                return base / euler_phi(k)
            out[d] = d * sum(g(k) * mobius(k // d) for k in chain)
        elif family == "bouquet":
            def g(k):
                q = 2 * n // k
                val = Fraction(0)
                if n % k == 0:
                    val += Fraction(f(q) * Fraction(k, 2) ** (n // k), 2 * n * f(n // k))
                if k % 2 == 0:
                    val += sum(Fraction(f(q) * Fraction(k, 2) ** m, f(q - 2 * m) * f(m))
                               for m in range((n - 1) // k + 1)) / (2 * n)
                return val
            out[d] = d * sum(g(k) * mobius(k // d) for k in chain)
        elif family == "directed_bouquet":
            out[d] = Fraction(d, 2 * n) * sum(
                mobius(k // d) * Fraction(f(2 * n // k) * k ** (n // k), f(n // k)) for k in chain)
        else:
            out[d] = d * sum(mobius(k // d) * Fraction(f(n - 2) ** ((n - 1) // k), n - 1) for k in chain)
    for d, v in out.items():
        if v.denominator != 1:
            raise AssertionError(f"explicit i_{d} = {v} is not integral")
    return {d: int(v) for d, v in out.items()}


# general decomposition

@dataclass(frozen=True)
class CandidateGroup:
    name: str
    cycle_index: CycleIndexPolynomial
    group: PermutationGroup | None = None

    @classmethod
    def from_group(cls, name: str, group: PermutationGroup) -> CandidateGroup:
        return cls(name, group_cycle_index(group), group)

    @classmethod
    def from_generators(cls, name: str, generators: Sequence[str], degree: int, base: int = 1) -> CandidateGroup:
        gens = [Permutation.parse(g, degree, base) for g in generators]
        return cls.from_group(name, closure(gens, degree))

    @property
    def order(self) -> int:
        if self.group is not None:
            return self.group.order
        ident = self.cycle_index.coefficient(CycleType(((1, self.cycle_index.degree),)))
        return int(1 / ident)


def load_catalog(source: str | os.PathLike | list, degree: int | None = None) -> list[CandidateGroup]:
    """Read candidates from JSON: ``{name, generators:[...]}`` or ``{name, cycle_index:[...]}``.

    Generators are cycle notation, 1-based unless the entry (or the top-level
    object) sets ``"base": 0``.  A top-level object may carry ``degree`` and
    ``candidates``; a bare list needs ``degree`` from the caller.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = source
    base = 1
    if isinstance(data, dict):
        degree = data.get("degree", degree)
        base = data.get("base", 1)
        data = data["candidates"]
    out = []
    for entry in data:
        if "generators" in entry:
            if degree is None:
                raise PreconditionError("catalog needs a degree for generator entries")
            out.append(CandidateGroup.from_generators(entry["name"], entry["generators"], degree,
                                                      entry.get("base", base)))
        elif "cycle_index" in entry:
            out.append(CandidateGroup(entry["name"], CycleIndexPolynomial.from_json_obj(entry["cycle_index"])))
        else:
            raise PreconditionError(f"catalog entry {entry.get('name')!r} has neither generators nor cycle_index")
    return out


FROBENIUS_K5_INDEX = CycleIndexPolynomial(5, {
    CycleType(((1, 5),)): Fraction(1, 20),
    CycleType(((1, 1), (2, 2))): Fraction(5, 20),
    CycleType(((1, 1), (4, 1))): Fraction(10, 20),
    CycleType(((5, 1),)): Fraction(4, 20),
})

K5_CATALOG = {
    "degree": 5,
    "candidates": [
        {"name": "F", "generators": ["(1 2 3 4 5)", "(2 3 5 4)"]},
        {"name": "C5", "generators": ["(1 2 3 4 5)"]},
        {"name": "E1xC4", "generators": ["(2 3 4 5)"]},
        {"name": "E1xC2[E2]", "generators": ["(2 4)(3 5)"]},
        {"name": "D5", "generators": ["(1 2 3 4 5)", "(2 5)(3 4)"]},
        {"name": "E5", "generators": []},
    ],
}

K5_EXCLUDED_CATALOG = {
    "degree": 5,
    "candidates": [
        {"name": "E1xC2[C2]", "generators": ["(2 3 4 5)", "(2 4)"]},
        {"name": "E2xC3", "generators": ["(3 4 5)"]},
        {"name": "C2xC3", "generators": ["(1 2)(3 4 5)"]},
        {"name": "E1xC2xC2", "generators": ["(2 3)", "(4 5)"]},
    ],
}


def k5_candidates() -> list[CandidateGroup]:
    """The six candidate map-automorphism groups for K_5, F checked against its known index."""
    cands = load_catalog(K5_CATALOG)
    if cands[0].cycle_index != FROBENIUS_K5_INDEX:
        raise AssertionError("Frobenius group generators do not give the expected cycle index")
    return cands


def all_subgroups(parent: PermutationGroup, max_order: int = 120) -> list[PermutationGroup]:
    """Every subgroup of a small group: closures of element pairs, then joins to a fixpoint."""
    if parent.order > max_order:
        raise PreconditionError(f"subgroup enumeration limited to groups of order <= {max_order}")
    found: dict[frozenset, tuple[PermutationGroup, tuple[Permutation, ...]]] = {}

    def add(gens: tuple[Permutation, ...]) -> None:
        h = closure(gens, parent.degree)
        if h.key() not in found:
            found[h.key()] = (h, gens)

    for g in parent:
        add((g,))
    cyclic = [gens[0] for _, gens in found.values()]
    for i, a in enumerate(cyclic):
        for b in cyclic[i + 1:]:
            add((a, b))
    changed = True
    while changed:
        changed = False
        groups = list(found.values())
        for i, (h, hg) in enumerate(groups):
            for k, kg in groups[i + 1:]:
                if h.is_subgroup_of(k) or k.is_subgroup_of(h):
                    continue
                before = len(found)
                add(hg + kg)
                changed |= len(found) > before
    return sorted((h for h, _ in found.values()), key=lambda h: (h.order, sorted(p.images for p in h)))


def subgroup_candidates(parent: PermutationGroup) -> list[CandidateGroup]:
    """One candidate per distinct cycle index among the subgroups of ``parent``."""
    seen: dict[CycleIndexPolynomial, CandidateGroup] = {}
    counter: dict[int, int] = {}
    for h in all_subgroups(parent):
        z = group_cycle_index(h)
        if z in seen:
            continue
        counter[h.order] = counter.get(h.order, 0) + 1
        seen[z] = CandidateGroup(f"H{h.order}.{counter[h.order]}", z, h)
    return list(seen.values())


def _fixes_adjacent_pair(p: Permutation, g: Graph) -> bool:
    fixed = [v for v in range(p.degree) if p(v) == v]
    return any(g.has_edge(u, v) for i, u in enumerate(fixed) for v in fixed[i + 1:])


def candidate_filter(z: CycleIndexPolynomial, candidates: Sequence[CandidateGroup],
                     g: Graph) -> list[CandidateGroup]:
    """Drop candidates that cannot be map-automorphism groups of ``g``.

    A candidate goes if its order does not divide twice the edge count, if a
    non-identity element fixes two adjacent vertices, or if it contains a
    cycle type absent from ``z``.  Index-only candidates are judged on their
    cycle index; the adjacency test then assumes any two fixed points may be
    adjacent only when ``g`` is complete.
    """
    two_e = 2 * g.edge_count
    complete = all(g.degree(v) == g.vertex_count - 1 for v in range(g.vertex_count))
    kept = []
    for cand in candidates:
        if cand.cycle_index.degree != z.degree:
            raise PreconditionError(f"candidate {cand.name} has degree {cand.cycle_index.degree}, expected {z.degree}")
        if two_e % cand.order:
            continue
        if any(ct not in z.terms for ct in cand.cycle_index.terms):
            continue
        if cand.group is not None:
            if any(not p.is_identity() and _fixes_adjacent_pair(p, g) for p in cand.group):
                continue
        elif complete and any(ct.multiplicity(1) >= 2 and ct.multiplicity(1) < z.degree
                              for ct in cand.cycle_index.terms):
            continue
        kept.append(cand)
    return kept


def decompose_all(z: CycleIndexPolynomial, candidates: Sequence[CandidateGroup],
                  constraints: Mapping[str, int] | None = None) -> list[dict[str, int]]:
    """All ways to write ``z`` as a nonnegative integer combination of candidate indexes.

    ``constraints`` gives lower bounds by candidate name.  Solutions come back
    as name→multiplicity dicts in candidate order, sorted lexicographically.
    """
    if not candidates:
        raise PreconditionError("need at least one candidate group")
    constraints = dict(constraints or {})
    names = [c.name for c in candidates]
    unknown = set(constraints) - set(names)
    if unknown:
        raise PreconditionError(f"constraints name unknown candidates: {sorted(unknown)}")
    monos = list(dict.fromkeys([*z.terms, *(ct for c in candidates for ct in c.cycle_index.terms)]))
    target = [z.coefficient(m) for m in monos]
    contrib = [[c.cycle_index.coefficient(m) for m in monos] for c in candidates]
    if any(x < 0 for row in contrib for x in row):
        raise PreconditionError("candidate cycle indexes must have nonnegative coefficients")

    bounds = []
    for row in contrib:
        ratios = [target[j] / row[j] for j in range(len(monos)) if row[j] > 0]
        bounds.append(math.floor(min(ratios)) if ratios else 0)

    # search richer indexes first; the last one is solved directly
    order = sorted(range(len(candidates)), key=lambda k: -len(candidates[k].cycle_index.terms))
    lows = [constraints.get(names[k], 0) for k in range(len(candidates))]
    touched_after = []
    for pos in range(len(order)):
        rest = order[pos:]
        touched_after.append({j for k in rest for j in range(len(monos)) if contrib[k][j] > 0})

    solutions: list[tuple[int, ...]] = []
    x = [0] * len(candidates)

    def search(pos: int, residual: list[Fraction]) -> None:
        if pos == len(order):
            if all(r == 0 for r in residual):
                solutions.append(tuple(x))
            return
        if any(residual[j] != 0 for j in range(len(monos)) if j not in touched_after[pos]):
            return
        k = order[pos]
        row = contrib[k]
        if pos == len(order) - 1:
            j0 = next((j for j in range(len(monos)) if row[j] > 0), None)
            if j0 is None:
                return
            val = residual[j0] / row[j0]
            if val.denominator != 1 or not lows[k] <= val <= bounds[k]:
                return
            x[k] = int(val)
            if all(residual[j] - x[k] * row[j] == 0 for j in range(len(monos))):
                solutions.append(tuple(x))
            x[k] = 0
            return
        for v in range(lows[k], bounds[k] + 1):
            nxt = [residual[j] - v * row[j] for j in range(len(monos))]
            if any(r < 0 for r in nxt):
                break
            x[k] = v
            search(pos + 1, nxt)
        x[k] = 0

    search(0, list(target))
    return [dict(zip(names, sol)) for sol in sorted(solutions)]


def reassemble(solution: Mapping[str, int], candidates: Sequence[CandidateGroup]) -> CycleIndexPolynomial:
    by_name = {c.name: c for c in candidates}
    degree = candidates[0].cycle_index.degree
    return poly_sum((solution[name] * by_name[name].cycle_index for name in solution), degree)


def cyclic_reassemble(family: str, n: int) -> CycleIndexPolynomial:
    """Σ_d i_d · Z(cyclic group of order d) for a family profile."""
    shape = family_shape(family, n)
    prof = profile(family, n)
    degree = shape.moved + shape.fixed
    return poly_sum((e.unlabeled * cyclic_cycle_index(d, shape.moved // d, shape.fixed)
                     for d, e in prof.entries.items()), degree)
