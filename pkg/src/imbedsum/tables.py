"""Symmetry tables for the cyclic families, with the published values as golden data.

Table ids: ``uWheel``/``lWheel``, ``uBouquet``/``lBouquet``,
``uBndirect``/``lBndirect``, ``uK*n``/``lK*n`` (``u`` unlabeled, ``l`` labeled).
A published cell of ``None`` is blank in print.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .decomposition import family_shape, profile

TABLE_FAMILY = {
    "uWheel": ("wheel", "unlabeled"),
    "lWheel": ("wheel", "labeled"),
    "uBouquet": ("bouquet", "unlabeled"),
    "lBouquet": ("bouquet", "labeled"),
    "uBndirect": ("directed_bouquet", "unlabeled"),
    "lBndirect": ("directed_bouquet", "labeled"),
    "uK*n": ("rooted_complete", "unlabeled"),
    "lK*n": ("rooted_complete", "labeled"),
}

_ = None

# rows are symmetry orders d = 1, 2, ...; columns follow ``n``
PUBLISHED: dict[str, dict] = {
    "uWheel": {
        "n": [4, 5, 6, 7, 8],
        "rows": [
            [9, 76, 617, 6582, 80399],
            [5, 0, 42, 0, 479],
            [0, 0, 5, 0, 0],
            [2, 0, 0, 0, 4],
            [_, 4, 0, 0, 0],
            [_, _, 2, 0, 0],
            [_, _, _, 6, 0],
            [_, _, _, _, 4],
        ],
        "total": [16, 80, 666, 6588, 80886],
    },
    "lWheel": {
        "n": [4, 5, 6, 7, 8],
        "rows": [
            [72, 760, 7404, 92148, 1286384],
            [20, 0, 252, 0, 3832],
            [0, 0, 20, 0, 0],
            [4, 0, 0, 0, 16],
            [_, 8, 0, 0, 0],
            [_, _, 4, 0, 0],
            [_, _, _, 12, 0],
            [_, _, _, _, 8],
        ],
        "total": [96, 768, 7680, 92160, 1290240],
    },
    "uBouquet": {
        "n": [1, 2, 3, 4, 5, 6],
        "rows": [
            [0, 0, 1, 10, 86, 837],
            [1, 1, 2, 5, 16, 52],
            [_, 0, 1, 0, 0, 5],
            [_, 1, 0, 2, 0, 4],
            [_, _, 0, 0, 2, 0],
            [_, _, 1, 0, 0, 3],
            [_, _, _, 0, 0, 0],
            [_, _, _, 1, 0, 0],
            [_, _, _, _, 0, 0],
            [_, _, _, _, 1, 0],
            [_, _, _, _, _, 0],
            [_, _, _, _, _, 1],
        ],
        "total": [1, 2, 5, 18, 102, 902],
    },
    "lBouquet": {
        "n": [1, 2, 3, 4, 5, 6],
        "rows": [
            [0, 0, 48, 3840, 330240, 38568960],
            [1, 4, 48, 960, 30720, 1198080],
            [_, 0, 16, 0, 0, 76800],
            [_, 2, 0, 192, 0, 46080],
            [_, _, 0, 0, 1536, 0],
            [_, _, 8, 0, 0, 23040],
            [_, _, _, 0, 0, 0],
            [_, _, _, 48, 0, 0],
            [_, _, _, _, 0, 0],
            [_, _, _, _, 384, 0],
            [_, _, _, _, _, 0],
            [_, _, _, _, _, 3840],
        ],
        "total": [1, 6, 120, 5040, 362880, 39916800],
    },
    "uBndirect": {
        "n": [1, 2, 3, 4, 5, 6, 7, 8],
        "rows": [
            [1, 3, 20, 204, 3023, 55352, 1235519, 32430720],
            [_, 2, 0, 10, 0, 158, 0, 3336],
            [_, _, 3, 0, 0, 24, 0, 0],
            [_, _, _, 4, 0, 0, 0, 44],
            [_, _, _, _, 5, 0, 0, 0],
            [_, _, _, _, _, 6, 0, 0],
            [_, _, _, _, _, _, 7, 0],
            [_, _, _, _, _, _, _, 8],
        ],
        "total": [1, 5, 23, 218, 3028, 55540, 1235526, 32434108],
    },
    "lBndirect": {
        "n": [1, 2, 3, 4, 5, 6],
        "rows": [
            [1, 6, 120, 4896, 362760, 39853440],
            [_, 2, 0, 120, 0, 56880],
            [_, _, 6, 0, 0, 5760],
            [_, _, _, 24, 0, 0],
            [_, _, _, _, 120, 0],
            [_, _, _, _, _, 720],
        ],
        "total": [1, 8, 126, 5040, 362880, 39916800],
    },
    "uK*n": {
        "n": [1, 2, 3, 4, 5, 6, 7],
        "rows": [
            [1, 1, 0, 2, 315, 1592520, 497662709620],
            [_, 0, 1, 0, 15, 0, 575960],
            [_, _, 0, 2, 0, 0, 7140],
            [_, _, _, 0, 6, 0, 0],
            [_, _, _, _, 0, 24, 0],
            [_, _, _, _, _, 0, 120],
        ],
        "total": [1, 1, 1, 4, 336, 1592548, 497663292840],
    },
    "lK*n": {
        "n": [1, 2, 3, 4, 5, 6],
        "rows": [
            [1, 1, 0, 12, 7560, 191102400],
            [_, 0, 1, 0, 180, 0],
            [_, _, 0, 4, 0, 0],
            [_, _, _, 0, 36, 0],
            [_, _, _, _, 0, 576],
            [_, _, _, _, _, 0],
        ],
        "total": [1, 1, 1, 16, 7776, 191102976],
    },
}

del _


def published_column(which: str, n: int) -> tuple[dict[int, int], int]:
    """Published ``{d: value}`` (blank cells omitted) and total for one column."""
    table = PUBLISHED[which]
    j = table["n"].index(n)
    col = {d: row[j] for d, row in enumerate(table["rows"], 1) if row[j] is not None}
    return col, table["total"][j]


def computed_column(which: str, n: int) -> tuple[dict[int, int], int]:
    """Computed column laid out like the printed one: every d up to the row limit."""
    family, kind = TABLE_FAMILY[which]
    prof = profile(family, n)
    limit = family_shape(family, n).row_limit
    values = prof.unlabeled() if kind == "unlabeled" else prof.labeled()
    col = {d: values.get(d, 0) for d in range(1, limit + 1)}
    return col, sum(col.values())


@dataclass
class TableDiff:
    which: str
    n: int
    cells: dict = field(default_factory=dict)   # d -> (published, computed)
    total: tuple | None = None                   # (published, computed)

    @property
    def empty(self) -> bool:
        return not self.cells and self.total is None


def compare(which: str, ns) -> list[TableDiff]:
    diffs = []
    for n in ns:
        comp, comp_total = computed_column(which, n)
        diff = TableDiff(which, n)
        if n in PUBLISHED[which]["n"]:
            pub, pub_total = published_column(which, n)
            printed_rows = len(PUBLISHED[which]["rows"])
            for d in sorted(set(pub) | set(comp)):
                if d > printed_rows and comp.get(d) == 0:
                    continue  # the printed table stops before this row
                if pub.get(d) != comp.get(d):
                    diff.cells[d] = (pub.get(d), comp.get(d))
            if pub_total != comp_total:
                diff.total = (pub_total, comp_total)
        if not diff.empty:
            diffs.append(diff)
    return diffs


def render_csv(which: str, ns) -> str:
    """CSV in the printed layout: a row per d, a column per n, then a Total row."""
    ns = list(ns)
    cols = {n: computed_column(which, n) for n in ns}
    rows = max(max(c) for c, _ in cols.values())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d"] + [f"n={n}" for n in ns])
    for d in range(1, rows + 1):
        w.writerow([d] + [cols[n][0].get(d, "") for n in ns])
    w.writerow(["Total"] + [cols[n][1] for n in ns])
    return buf.getvalue()


def render_diff(diffs: list[TableDiff]) -> str:
    if not diffs:
        return ""
    lines = ["# differences from published values (published -> computed)"]
    for diff in diffs:
        for d, (pub, comp) in diff.cells.items():
            lines.append(f"# {diff.which} n={diff.n} d={d}: {pub} -> {comp}")
        if diff.total:
            lines.append(f"# {diff.which} n={diff.n} Total: {diff.total[0]} -> {diff.total[1]}")
    return "\n".join(lines) + "\n"
