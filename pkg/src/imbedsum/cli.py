"""Command-line front end.

Exit codes: 0 success, 2 bad input or precondition, 3 cap exceeded,
4 verification failure.  Cycle notation on the command line and in
candidate catalogs is 1-based unless ``--zero-based`` is given.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import closed_forms, decomposition, oracle, polya, tables
from .errors import CapExceeded, PreconditionError, VerificationError
from .graphs import (VERTICES, Graph, TypeDomain, automorphism_group, bouquet_model, complete,
                     directed_bouquet_model, load_graph, loop_projection, rooted_complete, wheel)
from .imbedding_sum import imbedding_sum
from .perm import Permutation, factorial
from .polynomials import evaluate_at_ones

EXIT_OK, EXIT_PRECONDITION, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4

FAMILY_CHOICES = ("complete", "wheel", "bouquet", "directed_bouquet", "rooted_complete")


@dataclass
class RunConfig:
    command: str
    family: str | None
    n: int | None
    graph_path: str | None
    fmt: str
    map_cap: int
    base: int


def _config(args) -> RunConfig:
    if args.family is not None and args.graph is not None:
        raise PreconditionError("give either --family/--n or --graph, not both")
    if args.family is not None and args.n is None:
        raise PreconditionError("--family needs --n")
    if args.family is None and args.graph is None:
        raise PreconditionError("a graph source is required: --family/--n or --graph")
    map_cap = args.map_cap or int(os.environ.get("IMBEDSUM_MAP_CAP", oracle.DEFAULT_CENSUS_CAP))
    if map_cap < 1:
        raise PreconditionError("caps must be positive")
    return RunConfig(args.command, args.family, args.n, args.graph, args.format, map_cap,
                     0 if args.zero_based else 1)


def family_graph(family: str, n: int) -> tuple[Graph, TypeDomain]:
    if family == "complete":
        return complete(n), VERTICES
    if family == "wheel":
        if n < 4:
            raise PreconditionError("wheel family needs rim size n >= 4 (W_4 is K_4: use --family complete)")
        return wheel(n), VERTICES
    if family == "bouquet":
        return bouquet_model(n), VERTICES
    if family == "directed_bouquet":
        return directed_bouquet_model(n), loop_projection(n)
    if family == "rooted_complete":
        if n < 2:
            raise PreconditionError("rooted complete graph needs n >= 2")
        return rooted_complete(n), VERTICES
    raise PreconditionError(f"unknown family {family!r}")


def family_closed_form(family: str, n: int):
    return {
        "complete": closed_forms.z_complete,
        "wheel": closed_forms.z_wheel,
        "bouquet": closed_forms.z_bouquet,
        "directed_bouquet": closed_forms.z_directed_bouquet,
        "rooted_complete": closed_forms.z_rooted_complete,
    }[family](n)


def _graph_source(cfg: RunConfig) -> tuple[Graph, TypeDomain]:
    if cfg.graph_path:
        g = load_graph(cfg.graph_path)
        if not g.is_connected():
            raise PreconditionError("graph must be connected")
        return g, VERTICES
    return family_graph(cfg.family, cfg.n)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_zsum(args, cfg: RunConfig) -> int:
    closed = engine = None
    if cfg.family and args.route in ("both", "closed"):
        closed = family_closed_form(cfg.family, cfg.n)
    if args.route in ("both", "engine") or closed is None:
        g, domain = _graph_source(cfg)
        group = automorphism_group(g)
        engine = imbedding_sum(g, domain, group=group)
        den = group.order
    else:
        den = (factorial(cfg.n) if cfg.family == "complete"
               else decomposition.family_shape(cfg.family, cfg.n).group_order)
    z = engine if engine is not None else closed
    agree = None if closed is None or engine is None else closed == engine
    total = evaluate_at_ones(z)
    obj = {"polynomial": z.to_json_obj(), "text": z.render(den), "unlabeled": str(total)}
    text = f"Z(G) = {z.render(den)}\nZ(G;1) = {total}\n"
    if agree is not None:
        obj["closed_form_agrees"] = agree
        text += f"closed form agrees: {'yes' if agree else 'NO'}\n"
        if not agree:
            text += f"closed form: {closed.render()}\n"
    _emit(obj, cfg.fmt, text)
    return EXIT_VERIFY if agree is False else EXIT_OK


def cmd_polya(args, cfg: RunConfig) -> int:
    f, names = polya.parse_figures(args.figures)
    g, domain = _graph_source(cfg)
    series = polya.configurations_for_graph(g, f, domain)
    if args.extract:
        exps = polya.parse_monomial(args.extract, names)
        value = polya.coefficient(series, exps)
        _emit({"monomial": args.extract, "exponents": list(exps), "coefficient": value}, cfg.fmt, str(value))
    else:
        _emit({"variables": names, "terms": series.to_json_obj()}, cfg.fmt, series.render(names))
    return EXIT_OK


def cmd_profile(args, cfg: RunConfig) -> int:
    family = cfg.family
    if family not in decomposition.FAMILIES:
        raise PreconditionError(f"profiles exist for {', '.join(decomposition.FAMILIES)}")
    prof = decomposition.profile(family, cfg.n)
    rows = [{"d": d, "unlabeled": e.unlabeled, "labeled_per_class": e.labeled_per_class,
             "labeled_total": e.labeled_total} for d, e in prof.entries.items()]
    if cfg.fmt == "csv":
        lines = ["d,unlabeled,labeled_per_class,labeled_total"]
        lines += [f"{r['d']},{r['unlabeled']},{r['labeled_per_class']},{r['labeled_total']}" for r in rows]
        lines.append(f"Total,{prof.unlabeled_total},,{prof.labeled_total}")
        print("\n".join(lines))
        return EXIT_OK
    text = [f"{family} n={cfg.n}  |Γ|={prof.group_order}", "d  unlabeled  labeled/class  labeled"]
    text += [f"{r['d']}  {r['unlabeled']}  {r['labeled_per_class']}  {r['labeled_total']}" for r in rows]
    text.append(f"Total  {prof.unlabeled_total}    {prof.labeled_total}")
    _emit({"family": family, "n": cfg.n, "group_order": prof.group_order, "entries": rows,
           "unlabeled_total": prof.unlabeled_total, "labeled_total": prof.labeled_total},
          cfg.fmt, "\n".join(text))
    return EXIT_OK


def parse_range(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise PreconditionError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise PreconditionError(f"cannot parse range {text!r}") from None


def cmd_tables(args) -> int:
    if args.which not in tables.TABLE_FAMILY:
        raise PreconditionError(f"unknown table {args.which!r}; expected one of {list(tables.TABLE_FAMILY)}")
    ns = parse_range(args.n) if args.n else tables.PUBLISHED[args.which]["n"]
    diffs = tables.compare(args.which, ns)
    if args.format == "json":
        columns = {}
        for n in ns:
            cells, total = tables.computed_column(args.which, n)
            columns[str(n)] = {"cells": {str(d): v for d, v in cells.items()}, "total": total}
        obj = {"which": args.which, "columns": columns,
               "differences": [{"n": d.n, "cells": {str(k): list(v) for k, v in d.cells.items()},
                                "total": list(d.total) if d.total else None} for d in diffs]}
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        sys.stdout.write(tables.render_csv(args.which, ns))
        sys.stdout.write(tables.render_diff(diffs))
    return EXIT_OK


def _parse_requirements(items) -> dict[str, int]:
    out = {}
    for item in items or []:
        m = re.fullmatch(r"\s*(.+?)\s*>=\s*(\d+)\s*", item)
        if not m:
            raise PreconditionError(f"requirement must look like NAME>=K, got {item!r}")
        out[m.group(1)] = int(m.group(2))
    return out


def _catalog(source: str, g: Graph, base: int) -> list[decomposition.CandidateGroup]:
    if source == "k5":
        return decomposition.k5_candidates()
    if source == "subgroups":
        return decomposition.subgroup_candidates(automorphism_group(g))
    with open(source, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data.setdefault("base", base)
        data.setdefault("degree", g.vertex_count)
        return decomposition.load_catalog(data)
    return decomposition.load_catalog({"degree": g.vertex_count, "base": base, "candidates": data})


def cmd_decompose(args, cfg: RunConfig) -> int:
    g, domain = _graph_source(cfg)
    z = imbedding_sum(g, domain)
    cands = _catalog(args.catalog, g, cfg.base)
    if args.filter:
        cands = decomposition.candidate_filter(z, cands, g)
    sols = decomposition.decompose_all(z, cands, _parse_requirements(args.require))
    obj = {"candidates": [{"name": c.name, "order": c.order, "cycle_index": c.cycle_index.render()} for c in cands],
           "solutions": sols}
    lines = [f"{len(sols)} solution(s)"]
    for s in sols:
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in s.items()))
    _emit(obj, cfg.fmt, "\n".join(lines))
    return EXIT_OK


def cmd_oracle(args, cfg: RunConfig) -> int:
    g, domain = _graph_source(cfg)
    if args.verify:
        report = oracle.verify_decomposition(g, domain, cap=cfg.map_cap, raise_on_failure=False)
        obj = report.to_json_obj()
        text = (f"Z(G)        = {report.imbedding_sum.render()}\n"
                f"Σ Z(Γ_M)    = {report.census_sum.render()}\n"
                f"classes={report.class_count} |Γ|={report.group_order} maps={report.total_maps}\n"
                + "".join(f"{k}: {'ok' if v else 'FAILED'}\n" for k, v in report.checks.items())
                + f"verification: {'pass' if report.ok else 'FAIL'}\n")
        _emit(obj, cfg.fmt, text)
        return EXIT_OK if report.ok else EXIT_VERIFY
    result = (oracle.symmetric_census(g, domain) if args.symmetric_only
              else oracle.census(g, domain, cap=cfg.map_cap))
    if cfg.fmt == "csv":
        sys.stdout.write(result.to_csv())
    elif cfg.fmt == "json":
        print(json.dumps(result.to_json_obj(), indent=2, sort_keys=True))
    else:
        lines = [f"{result.class_count} classes, |Γ|={result.group_order}, {result.total_maps} maps",
                 "stabilizer orders: " + ", ".join(f"{k}:{v}" for k, v in result.stabilizer_order_histogram().items())]
        for row in result.rows(cfg.base):
            lines.append(f"  #{row['class']} orbit={row['orbit_size']} |Γ_M|={row['stabilizer_order']} "
                         f"regions=[{row['regions']}] genus={row['genus']}")
        print("\n".join(lines))
    return EXIT_OK


def _parse_seed(text: str, base: int, n: int) -> tuple[int, tuple[int, ...]]:
    m = re.fullmatch(r"\s*(\d+)\s*:\s*\(([\d\s,]*)\)\s*", text)
    if not m:
        raise PreconditionError(f"seed must look like 'v:(a b c)', got {text!r}")
    v = int(m.group(1)) - base
    rot = tuple(int(t) - base for t in re.split(r"[\s,]+", m.group(2).strip()) if t)
    if not 0 <= v < n:
        raise PreconditionError(f"seed vertex {m.group(1)} is not a vertex")
    return v, rot


def cmd_faces(args, cfg: RunConfig) -> int:
    from .graphs import RotationSystem
    g, _ = _graph_source(cfg)
    if args.rotation:
        with open(args.rotation, encoding="utf-8") as fh:
            m = RotationSystem.from_json_obj(json.load(fh))
    else:
        gamma = Permutation.parse(args.equivariant or "()", g.vertex_count, cfg.base)
        seeds = dict(_parse_seed(s, cfg.base, g.vertex_count) for s in args.seed or [])
        m = oracle.equivariant_map(g, gamma, seeds)
    regions, genus = oracle.face_trace(g, m)
    obj = {"rotations": m.to_json_obj()["rotations"], "regions": list(regions), "genus": genus}
    text = (f"rotation system: {m.to_cycle_string(cfg.base)}\n"
            f"regions: {', '.join(map(str, regions))}\ngenus: {genus}\n")
    _emit(obj, cfg.fmt, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="imbedsum", description="Imbedding sums of graphs and their decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--family", choices=FAMILY_CHOICES)
        p.add_argument("--n", type=int)
        p.add_argument("--graph", help="JSON graph or plain edge list")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--map-cap", type=int, default=None, help="map enumeration cap (env IMBEDSUM_MAP_CAP)")
        p.add_argument("--zero-based", action="store_true", help="cycle notation uses 0-based vertex labels")
        return p

    p = graph_cmd("zsum", "imbedding sum and unlabeled count")
    p.add_argument("--route", choices=("both", "engine", "closed"), default="both")
    p = graph_cmd("polya", "configuration counting series")
    p.add_argument("--figures", default="b,w", help="comma-separated single-letter colors")
    p.add_argument("--extract", help="monomial such as b^2w^2")
    graph_cmd("profile", "symmetry profile of a cyclic family")
    p = graph_cmd("decompose", "integer decompositions into candidate cycle indexes")
    p.add_argument("--catalog", default="subgroups", help="JSON catalog path, 'k5', or 'subgroups'")
    p.add_argument("--require", action="append", help="lower bound NAME>=K (repeatable)")
    p.add_argument("--no-filter", dest="filter", action="store_false", help="skip the candidate filter")
    p = graph_cmd("oracle", "brute-force census")
    p.add_argument("--verify", action="store_true", help="check the decomposition termwise")
    p.add_argument("--symmetric-only", action="store_true", help="list only classes with symmetry")
    p = graph_cmd("faces", "region sizes and genus of a map")
    p.add_argument("--equivariant", help="automorphism in cycle notation")
    p.add_argument("--seed", action="append", help="seed rotation 'v:(a b c)' (repeatable)")
    p.add_argument("--rotation", help="rotation system JSON file")

    t = sub.add_parser("tables", help="published symmetry tables, recomputed")
    t.add_argument("--which", required=True, help=", ".join(tables.TABLE_FAMILY))
    t.add_argument("--n", help="range such as 4..8 or list 1,2,3")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


COMMANDS = {"zsum": cmd_zsum, "polya": cmd_polya, "profile": cmd_profile, "decompose": cmd_decompose,
            "oracle": cmd_oracle, "faces": cmd_faces}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tables":
            return cmd_tables(args)
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (PreconditionError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
