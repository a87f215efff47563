"""Configuration counting series: vertex colorings of maps and of all
unlabeled imbeddings of a graph, counted by weight."""
from __future__ import annotations

import re
from typing import Sequence

from .errors import PreconditionError
from .graphs import VERTICES, Graph, TypeDomain
from .imbedding_sum import imbedding_sum
from .polynomials import (CycleIndexPolynomial, FigureSeries, WeightSeries, evaluate_at_ones, substitute,
                          substitute_constant)


def _require_integral(series: WeightSeries) -> WeightSeries:
    if not series.is_integral():
        bad = {e: c for e, c in series.terms.items() if c.denominator != 1 or c < 0}
        raise AssertionError(f"configuration series has non-integral coefficients: {bad}")
    return series


def configurations_for_group(group_index: CycleIndexPolynomial, f: FigureSeries) -> WeightSeries:
    """Pólya's configuration series for one group's cycle index."""
    if evaluate_at_ones(group_index) != 1:
        raise PreconditionError("not a group cycle index: coefficients do not sum to 1")
    return _require_integral(substitute(group_index, f))


def configurations_for_graph(g: Graph, f: FigureSeries, domain: TypeDomain = VERTICES) -> WeightSeries:
    """Configurations counted across all unlabeled imbeddings of ``g``."""
    return _require_integral(substitute(imbedding_sum(g, domain), f))


def color_count(g: Graph, colors: int) -> int:
    """Vertex colorings with ``colors`` colors, summed over the unlabeled imbeddings."""
    if colors < 1:
        raise PreconditionError("need at least one color")
    value = substitute_constant(imbedding_sum(g), colors)
    assert value.denominator == 1
    return value.numerator


def parse_figures(text: str) -> tuple[FigureSeries, list[str]]:
    """``"b,w"`` -> the figure series b + w and its variable names."""
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names or any(not re.fullmatch(r"[A-Za-z]", n) for n in names) or len(set(names)) != len(names):
        raise PreconditionError(f"figures must be distinct single letters, got {text!r}")
    return FigureSeries.colors(len(names)), names


def parse_monomial(text: str, names: Sequence[str]) -> tuple[int, ...]:
    """``"b^2w^2"`` or ``"b^2 w^2"`` or ``"b*w^3"`` -> exponent tuple over ``names``."""
    exps = [0] * len(names)
    body = text.replace("*", " ").replace(" ", "")
    if not body or not re.fullmatch(r"([A-Za-z](\^\d+)?)+", body):
        raise PreconditionError(f"malformed monomial {text!r}")
    for var, power in re.findall(r"([A-Za-z])(?:\^(\d+))?", body):
        if var not in names:
            raise PreconditionError(f"unknown variable {var!r}; figures are {list(names)}")
        exps[names.index(var)] += int(power) if power else 1
    return tuple(exps)


def coefficient(series: WeightSeries, exponents: Sequence[int]) -> int:
    c = series.coefficient(exponents)
    assert c.denominator == 1
    return c.numerator
