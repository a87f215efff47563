"""Permutations, cycle types, permutation groups and small number theory.

Composition convention: ``compose(a, b)`` (also ``a * b``) applies ``b``
first, then ``a``.  Everything else in the package is written against
this convention, including the left action of automorphisms on maps.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceeded, PreconditionError

DEFAULT_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise PreconditionError(f"not a bijection on 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return _trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise PreconditionError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise PreconditionError(f"point {x} appears twice in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int, base: int = 0) -> Permutation:
        """Parse cycle notation such as ``"(1 2 3)(4 5)"``.

        Entries may be separated by spaces or commas.  ``base`` is the label
        of the first domain point (``base=1`` for the usual 1..n labels).
        ``"()"`` or an empty string is the identity.
        """
        if not re.fullmatch(r"\s*(\([\d\s,]*\)\s*)*", text):
            raise PreconditionError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) - base for t in re.split(r"[\s,]+", body.strip()) if t]
            if pts:
                cycles.append(pts)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, y in enumerate(self.images):
            inv[y] = i
        return _trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def to_cycle_string(self, base: int = 0) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x + base) for x in c) + ")" for c in cycles)

    def to_json(self) -> str:
        return json.dumps(list(self.images))

    @classmethod
    def from_json(cls, text: str) -> Permutation:
        return cls(tuple(json.loads(text)))

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a ∘ b``: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise PreconditionError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return _trusted(tuple([ai[y] for y in b.images]))


def conjugate(rho: Permutation, gamma: Permutation) -> Permutation:
    """Return ``gamma ∘ rho ∘ gamma⁻¹``, i.e. ``rho`` with its points relabeled by ``gamma``."""
    if rho.degree != gamma.degree:
        raise PreconditionError(f"degree mismatch: {rho.degree} vs {gamma.degree}")
    images = [0] * rho.degree
    g = gamma.images
    for x, y in enumerate(rho.images):
        images[g[x]] = g[y]
    return _trusted(tuple(images))


def _trusted(images: tuple[int, ...]) -> Permutation:
    # skips the bijection check; only for images built from valid permutations
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


@dataclass(frozen=True, order=True)
class CycleType:
    """Orbit-length multiset of a permutation: sorted ``(length, multiplicity)`` pairs."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: dict[int, int] = {}
        for k, j in self.parts:
            if k < 1 or j < 0:
                raise PreconditionError(f"invalid cycle part ({k}, {j})")
            if j:
                merged[k] = merged.get(k, 0) + j
        object.__setattr__(self, "parts", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, lengths: dict[int, int]) -> CycleType:
        return cls(tuple(lengths.items()))

    @property
    def degree(self) -> int:
        return sum(k * j for k, j in self.parts)

    def multiplicity(self, k: int) -> int:
        return dict(self.parts).get(k, 0)

    def sort_key(self):
        # most fixed points first, then lexicographic on the parts
        return (-self.multiplicity(1), self.parts)

    def monomial(self, sep: str = "*") -> str:
        if not self.parts:
            return "1"
        return sep.join(f"s{k}" if j == 1 else f"s{k}^{j}" for k, j in self.parts)

    def __str__(self) -> str:
        return self.monomial()


def cycle_type(p: Permutation) -> CycleType:
    counts: dict[int, int] = {}
    for cyc in p.cycles(include_fixed=True):
        counts[len(cyc)] = counts.get(len(cyc), 0) + 1
    return CycleType.of(counts)


def orbit_length(p: Permutation, x: int) -> int:
    if not 0 <= x < p.degree:
        raise PreconditionError(f"point {x} outside 0..{p.degree - 1}")
    t, y = 1, p.images[x]
    while y != x:
        y = p.images[y]
        t += 1
    return t


def regular_order(p: Permutation, subset: Iterable[int]) -> int | None:
    """Common orbit size of ``p`` on an invariant ``subset``, or None if sizes differ."""
    subset = set(subset)
    if any(p.images[x] not in subset for x in subset):
        raise PreconditionError("subset is not invariant under the permutation")
    if not subset:
        return None
    sizes = {orbit_length(p, x) for x in subset}
    return sizes.pop() if len(sizes) == 1 else None


@dataclass(frozen=True)
class PermutationGroup:
    elements: tuple[Permutation, ...]
    degree: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._members

    @property
    def _members(self) -> frozenset[Permutation]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached

    def key(self) -> frozenset[Permutation]:
        """Hashable identity of the underlying element set."""
        return self._members

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self._members <= other._members


def closure(generators: Sequence[Permutation], degree: int | None = None,
            cap: int = DEFAULT_CLOSURE_CAP) -> PermutationGroup:
    """Generate the group spanned by ``generators`` as an explicit element list."""
    generators = list(generators)
    if degree is None:
        if not generators:
            raise PreconditionError("degree is required when there are no generators")
        degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise PreconditionError("generators have different degrees")
    gens = [g.images for g in dict.fromkeys(generators) if not g.is_identity()]
    ident = tuple(range(degree))
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = tuple([g[y] for y in h])
                if x not in seen:
                    seen.add(x)
                    elements.append(x)
                    nxt.append(x)
        if len(elements) > cap:
            raise CapExceeded(f"group closure exceeded {cap} elements")
        frontier = nxt
    return PermutationGroup(tuple(_trusted(x) for x in elements), degree)


def _check_positive(n: int) -> None:
    if n < 1:
        raise PreconditionError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in _factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    _check_positive(n)
    factors = _factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorial(n: int) -> int:
    return math.factorial(n)
