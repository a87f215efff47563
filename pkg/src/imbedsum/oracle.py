"""Brute-force ground truth over explicit rotation systems.

Nothing here uses the fixed-point counting formulas: orbits and stabilizers
come from applying every automorphism to every map, and fixed rotations
are found by filtering all cyclic orders.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, PreconditionError, VerificationError
from .graphs import (VERTICES, Graph, RotationSystem, TypeDomain, act, automorphism_group, canonical_cycle,
                     cyclic_orders, enumerate_rotation_systems)
from .imbedding_sum import imbedding_sum
from .perm import CycleType, Permutation, PermutationGroup, orbit_length
from .polynomials import CycleIndexPolynomial, WeightSeries, group_cycle_index, poly_sum

DEFAULT_CENSUS_CAP = 10**6
DEFAULT_GROUP_CAP = 10**5


def face_trace(g: Graph, m: RotationSystem) -> tuple[tuple[int, ...], int]:
    """Region sizes (sorted) and genus of the surface a rotation system describes.

    A region is a cycle of directed edges under (u, v) -> (v, ρ_v(u)).
    """
    m.validate(g)
    darts = [(u, v) for u in range(g.vertex_count) for v in g.adjacency[u]]
    if not darts:
        return (0,), 0
    seen = set()
    sizes = []
    for start in darts:
        if start in seen:
            continue
        size = 0
        dart = start
        while dart not in seen:
            seen.add(dart)
            size += 1
            u, v = dart
            dart = (v, m.successor(v, u))
        sizes.append(size)
    euler = g.vertex_count - g.edge_count + len(sizes)
    if euler % 2 or euler > 2:
        raise VerificationError(f"Euler characteristic {euler} does not give an orientable genus")
    return tuple(sorted(sizes)), (2 - euler) // 2


def stabilizer(group: PermutationGroup, m: RotationSystem) -> PermutationGroup:
    return PermutationGroup(tuple(gm for gm in group if act(gm, m) == m), group.degree)


@dataclass(frozen=True)
class CensusClass:
    representative: RotationSystem
    orbit_size: int
    stabilizer: PermutationGroup
    stabilizer_index: CycleIndexPolynomial
    regions: tuple[int, ...]
    genus: int

    @property
    def stabilizer_order(self) -> int:
        return self.stabilizer.order


@dataclass(frozen=True)
class MapCensus:
    graph: Graph
    group_order: int
    total_maps: int
    classes: tuple[CensusClass, ...]
    asymmetric_classes: int = 0  # classes with trivial stabilizer not listed in ``classes``

    @property
    def class_count(self) -> int:
        return len(self.classes) + self.asymmetric_classes

    def stabilizer_order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.classes:
            hist[c.stabilizer_order] = hist.get(c.stabilizer_order, 0) + 1
        if self.asymmetric_classes:
            hist[1] = hist.get(1, 0) + self.asymmetric_classes
        return dict(sorted(hist.items()))

    def genus_histogram(self) -> dict[int, int]:
        if self.asymmetric_classes:
            raise PreconditionError("genus histogram needs a full census")
        hist: dict[int, int] = {}
        for c in self.classes:
            hist[c.genus] = hist.get(c.genus, 0) + 1
        return dict(sorted(hist.items()))

    def index_sum(self, degree: int) -> CycleIndexPolynomial:
        """Σ of stabilizer cycle indexes; asymmetric classes contribute s_1^degree each."""
        total = poly_sum((c.stabilizer_index for c in self.classes), degree)
        if self.asymmetric_classes:
            total = total + CycleIndexPolynomial(degree, {CycleType(((1, degree),)): Fraction(self.asymmetric_classes)})
        return total

    def rows(self, base: int = 0) -> list[dict]:
        return [{
            "class": i,
            "orbit_size": c.orbit_size,
            "stabilizer_order": c.stabilizer_order,
            "stabilizer_cycle_index": c.stabilizer_index.render(),
            "regions": " ".join(map(str, c.regions)),
            "genus": c.genus,
            "representative": c.representative.to_cycle_string(base),
        } for i, c in enumerate(self.classes)]

    def to_json_obj(self) -> dict:
        return {
            "group_order": self.group_order,
            "total_maps": self.total_maps,
            "class_count": self.class_count,
            "asymmetric_unlisted": self.asymmetric_classes,
            "stabilizer_order_histogram": {str(k): v for k, v in self.stabilizer_order_histogram().items()},
            "classes": [
                {"class": i, "orbit_size": c.orbit_size, "stabilizer_order": c.stabilizer_order,
                 "stabilizer_cycle_index": c.stabilizer_index.to_json_obj(),
                 "regions": list(c.regions), "genus": c.genus,
                 "representative": c.representative.to_json_obj()["rotations"]}
                for i, c in enumerate(self.classes)
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = ["class", "orbit_size", "stabilizer_order", "stabilizer_cycle_index", "regions", "genus"]
        writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buf.getvalue()


def _class_for(g: Graph, group: PermutationGroup, domain: TypeDomain, orbit: set[RotationSystem]) -> CensusClass:
    rep = min(orbit)
    stab = stabilizer(group, rep)
    projected = PermutationGroup(tuple(domain.apply(s) for s in stab), domain.degree(g))
    regions, genus = face_trace(g, rep)
    return CensusClass(rep, len(orbit), stab, group_cycle_index(projected), regions, genus)


def census(g: Graph, domain: TypeDomain = VERTICES, cap: int = DEFAULT_CENSUS_CAP,
           group_cap: int = DEFAULT_GROUP_CAP) -> MapCensus:
    """Partition every rotation system of ``g`` into automorphism orbits."""
    domain.check(g)
    total = g.labeled_map_count()
    if total > cap:
        raise CapExceeded(f"{total} maps exceed the census cap of {cap}")
    group = automorphism_group(g)
    if group.order > group_cap:
        raise CapExceeded(f"automorphism group of order {group.order} exceeds {group_cap}")
    seen: set[RotationSystem] = set()
    classes = []
    for m in enumerate_rotation_systems(g, cap=cap):
        if m in seen:
            continue
        orbit = {act(gm, m) for gm in group}
        seen |= orbit
        classes.append(_class_for(g, group, domain, orbit))
    classes.sort(key=lambda c: c.representative)
    return MapCensus(g, group.order, total, tuple(classes))


def fixed_rotations_brute(g: Graph, v: int, p: Permutation) -> list[tuple[int, ...]]:
    """Cyclic orders at ``v`` that conjugation by ``p`` leaves unchanged (p fixes v)."""
    return [rot for rot in cyclic_orders(g.adjacency[v])
            if canonical_cycle(tuple(p(x) for x in rot)) == rot]


def fixed_maps(g: Graph, gamma: Permutation) -> list[RotationSystem]:
    """Every map fixed by ``gamma``, built by choosing a fixed rotation at one
    vertex per orbit and transporting it around the orbit.
    """
    reps = []
    for cyc in gamma.cycles(include_fixed=True):
        v = min(cyc)
        choices = fixed_rotations_brute(g, v, gamma ** len(cyc))
        if not choices:
            return []
        reps.append((v, choices))
    out = []
    for combo in itertools.product(*(c for _, c in reps)):
        out.append(equivariant_map(g, gamma, {v: rot for (v, _), rot in zip(reps, combo)}))
    return out


def symmetric_census(g: Graph, domain: TypeDomain = VERTICES) -> MapCensus:
    """Census of the maps with a nontrivial stabilizer only.

    Every such map is fixed by some element of prime order, so it suffices
    to build the fixed maps of those elements.  The asymmetric classes are
    counted, not listed: (total maps - maps in symmetric orbits) / |Γ|.
    Scales to graphs whose full map set is too large to enumerate.
    """
    domain.check(g)
    group = automorphism_group(g)
    symmetric: set[RotationSystem] = set()
    for gm in group:
        order = math.lcm(*(len(c) for c in gm.cycles(include_fixed=True)))
        if order > 1 and all(order % p for p in range(2, order)):
            symmetric.update(fixed_maps(g, gm))
    seen: set[RotationSystem] = set()
    classes = []
    for m in sorted(symmetric):
        if m in seen:
            continue
        orbit = {act(gm, m) for gm in group}
        seen |= orbit
        classes.append(_class_for(g, group, domain, orbit))
    covered = sum(c.orbit_size for c in classes)
    total = g.labeled_map_count()
    rest, rem = divmod(total - covered, group.order)
    if rem:
        raise VerificationError("maps outside symmetric orbits do not split into regular orbits")
    classes.sort(key=lambda c: c.representative)
    return MapCensus(g, group.order, total, tuple(classes), asymmetric_classes=rest)


def burnside_scan(g: Graph, cap: int = DEFAULT_CENSUS_CAP) -> dict[Permutation, int]:
    """For every automorphism, the number of maps it fixes, by direct scan."""
    group = automorphism_group(g)
    maps = list(enumerate_rotation_systems(g, cap=cap))
    return {gm: sum(1 for m in maps if act(gm, m) == m) for gm in group}


@dataclass
class DecompositionReport:
    imbedding_sum: CycleIndexPolynomial
    census_sum: CycleIndexPolynomial
    residuals: dict = field(default_factory=dict)
    class_count: int = 0
    group_order: int = 0
    total_maps: int = 0
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.residuals and all(self.checks.values())

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "imbedding_sum": self.imbedding_sum.render(),
            "census_sum": self.census_sum.render(),
            "residuals": {str(k): str(v) for k, v in self.residuals.items()},
            "class_count": self.class_count,
            "group_order": self.group_order,
            "total_maps": self.total_maps,
            "checks": self.checks,
        }


def verify_decomposition(g: Graph, domain: TypeDomain = VERTICES, cap: int = DEFAULT_CENSUS_CAP,
                         raise_on_failure: bool = True) -> DecompositionReport:
    """Compare the imbedding sum with the census sum of stabilizer cycle indexes."""
    result = census(g, domain, cap=cap)
    z = imbedding_sum(g, domain)
    total = result.index_sum(domain.degree(g))
    diff = z - total
    report = DecompositionReport(
        z, total, dict(diff.terms), result.class_count, result.group_order, result.total_maps,
        checks={
            "orbit_stabilizer": all(c.orbit_size * c.stabilizer_order == result.group_order for c in result.classes),
            "orbit_sizes_sum_to_maps": sum(c.orbit_size for c in result.classes) == result.total_maps,
            "burnside_integral": sum(z.terms.values()).denominator == 1,
            "class_count_matches": sum(z.terms.values()) == result.class_count,
        },
    )
    if raise_on_failure and not report.ok:
        raise VerificationError(f"decomposition check failed: {report.to_json_obj()}")
    return report


def equivariant_map(g: Graph, gamma: Permutation, seeds: Mapping[int, Sequence[int]]) -> RotationSystem:
    """Rotation system fixed by ``gamma``, grown from seed rotations.

    Each seed is carried around its γ-orbit by ρ_{γ(v)} = γ ρ_v γ⁻¹; every
    orbit needs a seed, and a seed must come back to itself after going
    once around its orbit.
    """
    if not g.is_automorphism(gamma):
        raise PreconditionError("permutation is not an automorphism of the graph")
    rot: list[tuple[int, ...] | None] = [None] * g.vertex_count
    for v, seed in seeds.items():
        seed = canonical_cycle(tuple(seed))
        if sorted(seed) != list(g.adjacency[v]):
            raise PreconditionError(f"seed at {v} is not a cyclic order of its neighbors")
        if rot[v] is not None and rot[v] != seed:
            raise PreconditionError(f"seed at {v} conflicts with the rotation propagated from another seed")
        cur_v, cur = v, seed
        while True:
            nxt_v = gamma(cur_v)
            nxt = canonical_cycle(tuple(gamma(x) for x in cur))
            rot[cur_v] = cur
            if nxt_v == v:
                if nxt != seed:
                    raise PreconditionError(f"seed at {v} is not fixed by gamma^{orbit_length(gamma, v)}")
                break
            if rot[nxt_v] is not None and rot[nxt_v] != nxt:
                raise PreconditionError(f"inconsistent propagation at vertex {nxt_v}")
            cur_v, cur = nxt_v, nxt
    missing = [v for v, r in enumerate(rot) if r is None]
    if missing:
        raise PreconditionError(f"no seed covers the orbits of vertices {missing}")
    return RotationSystem(tuple(rot))


def genus_histogram(g: Graph, cap: int = DEFAULT_CENSUS_CAP) -> dict[int, int]:
    return census(g, cap=cap).genus_histogram()


def colored_orbit_series(g: Graph, colors: int = 2, cap: int = 10**5) -> WeightSeries:
    """Orbits of (map, vertex coloring) pairs under the automorphism group,
    counted by how many vertices get each color.
    """
    maps = list(enumerate_rotation_systems(g, cap=cap))
    if len(maps) * colors ** g.vertex_count > cap * 100:
        raise CapExceeded("too many (map, coloring) pairs for a brute-force orbit count")
    group = automorphism_group(g)
    seen = set()
    counts: dict[tuple[int, ...], int] = {}
    for m in maps:
        for col in itertools.product(range(colors), repeat=g.vertex_count):
            if (m, col) in seen:
                continue
            for gm in group:
                new_col = [0] * g.vertex_count
                for v, c in enumerate(col):
                    new_col[gm(v)] = c
                seen.add((act(gm, m), tuple(new_col)))
            weight = tuple(col.count(c) for c in range(colors))
            counts[weight] = counts.get(weight, 0) + 1
    return WeightSeries(colors, {w: Fraction(c) for w, c in counts.items()})
