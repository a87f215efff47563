import pytest

from imbedsum import tables
from imbedsum.closed_forms import rooted_vertex_count
from imbedsum.graphs import bouquet_model, directed_bouquet_model, loop_projection, wheel
from imbedsum.oracle import census, symmetric_census

# published cells that the computation (and an independent oracle) contradicts
KNOWN_MISPRINTS = {
    ("uWheel", 8): ({1: (80399, 80400), 2: (479, 476), 4: (4, 6)}, None),
    ("lWheel", 8): ({1: (1286384, 1286400), 2: (3832, 3808), 4: (16, 24)}, None),
    ("uBouquet", 5): ({}, (102, 105)),
    ("uBndirect", 2): ({1: (3, 2)}, (5, 4)),
    ("uBndirect", 3): ({1: (20, 19)}, (23, 22)),
    ("lBndirect", 2): ({1: (6, 4)}, (8, 6)),
    ("lBndirect", 3): ({1: (120, 114)}, (126, 120)),
    ("uK*n", 6): ({}, (1592548, 1592544)),
    ("uK*n", 7): ({1: (497662709620, 497663709620)}, (497663292840, 497664292840)),
}


@pytest.mark.parametrize("which", list(tables.TABLE_FAMILY))
def test_diff_report_lists_exactly_the_known_misprints(which):
    found = {(d.which, d.n): (d.cells, d.total) for d in tables.compare(which, tables.PUBLISHED[which]["n"])}
    expected = {k: v for k, v in KNOWN_MISPRINTS.items() if k[0] == which}
    assert found == expected


@pytest.mark.parametrize("n", range(4, 9))
def test_wheel_columns_against_census(n):
    hist = symmetric_census(wheel(n)).stabilizer_order_histogram()
    col, total = tables.computed_column("uWheel", n)
    assert {d: v for d, v in col.items() if v} == hist
    lcol, _ = tables.computed_column("lWheel", n)
    assert all(lcol[d] == col[d] * 2 * n // d for d in col)


@pytest.mark.parametrize("n", range(1, 5))
def test_bouquet_columns_against_census(n):
    hist = symmetric_census(bouquet_model(n)).stabilizer_order_histogram()
    col, _ = tables.computed_column("uBouquet", n)
    assert {d: v for d, v in col.items() if v} == hist


@pytest.mark.parametrize("n", range(1, 5))
def test_directed_bouquet_columns_against_census(n):
    hist = census(directed_bouquet_model(n), loop_projection(n)).stabilizer_order_histogram()
    col, _ = tables.computed_column("uBndirect", n)
    assert {d: v for d, v in col.items() if v} == hist


def test_printed_bouquet_five_cells_sum_to_computed_total():
    cells, total = tables.published_column("uBouquet", 5)
    assert sum(cells.values()) == tables.computed_column("uBouquet", 5)[1] == 105
    assert total == 102


@pytest.mark.parametrize("n", [6, 7])
def test_rooted_totals_against_rooting_formula(n):
    assert tables.computed_column("uK*n", n)[1] == rooted_vertex_count(n)


def test_render_csv_layout():
    text = tables.render_csv("uWheel", [4, 5])
    lines = text.splitlines()
    assert lines[0] == "d,n=4,n=5"
    assert lines[1] == "1,9,76"
    assert lines[-1] == "Total,16,80"


def test_render_diff_format():
    out = tables.render_diff(tables.compare("uBouquet", [5]))
    assert out == ("# differences from published values (published -> computed)\n"
                   "# uBouquet n=5 Total: 102 -> 105\n")
    assert tables.render_diff([]) == ""
