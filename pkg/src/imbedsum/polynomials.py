"""Exact cycle-index polynomials and the weight series produced by Pólya substitution."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError
from .perm import CycleType, PermutationGroup, cycle_type, divisors, euler_phi

Rational = Fraction | int


def _lcm_denominator(values: Iterable[Fraction]) -> int:
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return den


@dataclass(frozen=True)
class CycleIndexPolynomial:
    """A rational combination of cycle-type monomials on a fixed domain size.

    Zero coefficients are never stored, so ``==`` is termwise exact equality.
    """

    degree: int
    terms: Mapping[CycleType, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[CycleType, Fraction] = {}
        for ct, c in self.terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if ct.degree != self.degree:
                raise PreconditionError(f"term {ct} has degree {ct.degree}, expected {self.degree}")
            clean[ct] = clean.get(ct, Fraction(0)) + c
        ordered = {ct: clean[ct] for ct in sorted(clean, key=CycleType.sort_key) if clean[ct]}
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def zero(cls, degree: int) -> CycleIndexPolynomial:
        return cls(degree, {})

    @classmethod
    def monomial(cls, ct: CycleType, coefficient: Rational = 1) -> CycleIndexPolynomial:
        return cls(ct.degree, {ct: Fraction(coefficient)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleIndexPolynomial):
            return NotImplemented
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: CycleIndexPolynomial) -> CycleIndexPolynomial:
        return add(self, other)

    def __sub__(self, other: CycleIndexPolynomial) -> CycleIndexPolynomial:
        return add(self, scale(other, -1))

    def __rmul__(self, q: Rational) -> CycleIndexPolynomial:
        return scale(self, q)

    def coefficient(self, ct: CycleType) -> Fraction:
        return self.terms.get(ct, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def render(self, denominator: int | None = None) -> str:
        """Text form with a common denominator pulled out front.

        By default the least common denominator is used.  A caller may pass a
        larger ``denominator`` (e.g. a group order) when every coefficient
        times it is integral.
        """
        if not self.terms:
            return "0"
        den = _lcm_denominator(self.terms.values())
        if denominator is not None and all((c * denominator).denominator == 1 for c in self.terms.values()):
            den = denominator
        parts = []
        for ct, c in self.terms.items():
            num = c * den
            assert num.denominator == 1
            n = num.numerator
            mono = ct.monomial()
            body = mono if abs(n) == 1 else f"{abs(n)}*{mono}"
            if abs(n) == 1 and mono == "1":
                body = "1"
            parts.append(("- " if n < 0 else "+ ") + body)
        text = " ".join(parts)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        if den == 1:
            return text
        return f"(1/{den})*({text})"

    def __str__(self) -> str:
        return self.render()

    def to_json_obj(self) -> list[dict]:
        return [
            {"cycles": [[k, j] for k, j in ct.parts], "num": c.numerator, "den": c.denominator}
            for ct, c in self.terms.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Sequence[Mapping]) -> CycleIndexPolynomial:
        terms: dict[CycleType, Fraction] = {}
        degree = None
        for t in obj:
            ct = CycleType(tuple((int(k), int(j)) for k, j in t["cycles"]))
            degree = ct.degree if degree is None else degree
            terms[ct] = terms.get(ct, Fraction(0)) + Fraction(int(t["num"]), int(t.get("den", 1)))
        if degree is None:
            raise PreconditionError("cannot infer the degree of an empty polynomial")
        return cls(degree, terms)

    @classmethod
    def from_json(cls, text: str) -> CycleIndexPolynomial:
        return cls.from_json_obj(json.loads(text))


def add(a: CycleIndexPolynomial, b: CycleIndexPolynomial) -> CycleIndexPolynomial:
    if a.degree != b.degree:
        raise PreconditionError(f"degree mismatch: {a.degree} vs {b.degree}")
    terms = dict(a.terms)
    for ct, c in b.terms.items():
        terms[ct] = terms.get(ct, Fraction(0)) + c
    return CycleIndexPolynomial(a.degree, terms)


def scale(a: CycleIndexPolynomial, q: Rational) -> CycleIndexPolynomial:
    q = Fraction(q)
    return CycleIndexPolynomial(a.degree, {ct: c * q for ct, c in a.terms.items()})


def poly_sum(polys: Iterable[CycleIndexPolynomial], degree: int) -> CycleIndexPolynomial:
    terms: dict[CycleType, Fraction] = {}
    for p in polys:
        if p.degree != degree:
            raise PreconditionError(f"degree mismatch: {p.degree} vs {degree}")
        for ct, c in p.terms.items():
            terms[ct] = terms.get(ct, Fraction(0)) + c
    return CycleIndexPolynomial(degree, terms)


def group_cycle_index(group: PermutationGroup) -> CycleIndexPolynomial:
    counts: dict[CycleType, int] = {}
    for g in group:
        ct = cycle_type(g)
        counts[ct] = counts.get(ct, 0) + 1
    return CycleIndexPolynomial(group.degree, {ct: Fraction(c, group.order) for ct, c in counts.items()})


def cyclic_cycle_index(d: int, blocks: int, fixed_points: int = 0) -> CycleIndexPolynomial:
    """Cycle index of a cyclic group of order ``d`` moving ``d*blocks`` points
    in ``blocks`` regular orbits, alongside ``fixed_points`` untouched points.
    """
    if d < 1 or blocks < 1 or fixed_points < 0:
        raise PreconditionError(f"invalid cyclic group shape d={d}, blocks={blocks}, fixed={fixed_points}")
    n = d * blocks
    terms = {}
    for k in divisors(d):
        ct = CycleType(((1, fixed_points), (k, n // k)))
        terms[ct] = Fraction(euler_phi(k), d)
    return CycleIndexPolynomial(n + fixed_points, terms)


def evaluate_at_ones(z: CycleIndexPolynomial) -> Fraction:
    return sum(z.terms.values(), Fraction(0))


def substitute_constant(z: CycleIndexPolynomial, c: int) -> Fraction:
    """Value of ``z`` with every ``s_k`` set to ``c``."""
    if c < 0:
        raise PreconditionError("constant must be nonnegative")
    total = Fraction(0)
    for ct, coef in z.terms.items():
        total += coef * c ** sum(j for _, j in ct.parts)
    return total


class _Series:
    """Sparse multivariate polynomial in a fixed number of weight variables."""

    arity: int
    terms: dict[tuple[int, ...], Fraction | int]

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        exponents = tuple(exponents)
        if len(exponents) != self.arity:
            return Fraction(0)
        return Fraction(self.terms.get(exponents, 0))

    def total(self) -> Fraction:
        return Fraction(sum(self.terms.values()))

    def render(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names else [f"w{i + 1}" for i in range(self.arity)]
        if len(names) != self.arity:
            raise PreconditionError(f"need {self.arity} variable names, got {len(names)}")
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = Fraction(self.terms[exps])
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e)
            coef = str(c) if c.denominator == 1 else f"({c})"
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, eq=False)
class FigureSeries(_Series):
    """Counts of figures by weight tuple; coefficients are nonnegative integers."""

    arity: int
    terms: dict[tuple[int, ...], int]

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity or any(e < 0 for e in exps):
                raise PreconditionError(f"bad weight tuple {exps} for arity {self.arity}")
            if int(c) != c or c < 0:
                raise PreconditionError(f"figure counts must be nonnegative integers, got {c}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def colors(cls, k: int) -> FigureSeries:
        """``k`` colors, each with its own unit weight (``b + w`` for ``k=2``)."""
        if k < 1:
            raise PreconditionError("need at least one color")
        return cls(k, {tuple(int(i == j) for j in range(k)): 1 for i in range(k)})

    @classmethod
    def constant(cls, c: int) -> FigureSeries:
        return cls(0, {(): c})

    def __eq__(self, other) -> bool:
        return isinstance(other, FigureSeries) and (self.arity, self.terms) == (other.arity, other.terms)

    def value_at_ones(self) -> int:
        return sum(self.terms.values())


@dataclass(frozen=True, eq=False)
class WeightSeries(_Series):
    arity: int
    terms: dict[tuple[int, ...], Fraction]

    def __post_init__(self):
        clean = {tuple(e): Fraction(c) for e, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightSeries) and (self.arity, self.terms) == (other.arity, other.terms)

    def __add__(self, other: WeightSeries) -> WeightSeries:
        if self.arity != other.arity:
            raise PreconditionError("arity mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return WeightSeries(self.arity, terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.terms.values())

    def to_json_obj(self) -> list[dict]:
        return [{"exponents": list(e), "num": c.numerator, "den": c.denominator}
                for e, c in sorted(self.terms.items(), reverse=True)]


def _multiply(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _power(base: dict, k: int, arity: int) -> dict:
    result = {(0,) * arity: 1}
    while k:
        if k & 1:
            result = _multiply(result, base)
        base = _multiply(base, base)
        k >>= 1
    return result


def substitute(z: CycleIndexPolynomial, f: FigureSeries) -> WeightSeries:
    """Replace each ``s_k`` by ``f`` with every weight variable raised to the ``k``-th power."""
    arity = f.arity
    stretched: dict[int, dict] = {}
    powers: dict[tuple[int, int], dict] = {}
    acc: dict[tuple[int, ...], Fraction] = {}
    for ct, coef in z.terms.items():
        prod = {(0,) * arity: Fraction(coef)}
        for k, j in ct.parts:
            if k not in stretched:
                stretched[k] = {tuple(k * e for e in exps): c for exps, c in f.terms.items()}
            if (k, j) not in powers:
                powers[k, j] = _power(stretched[k], j, arity)
            prod = _multiply(prod, powers[k, j])
        for e, c in prod.items():
            acc[e] = acc.get(e, Fraction(0)) + c
    return WeightSeries(arity, acc)


def extract_coefficient(series: WeightSeries, exponents: Sequence[int]) -> Fraction:
    return series.coefficient(exponents)
