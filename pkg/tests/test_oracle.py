import pytest

from imbedsum.errors import CapExceeded, PreconditionError
from imbedsum.graphs import (RotationSystem, act, automorphism_group, bouquet_model, complete,
                             directed_bouquet_model, enumerate_rotation_systems, loop_projection,
                             rooted_complete, wheel)
from imbedsum.oracle import (burnside_scan, census, equivariant_map, face_trace, fixed_maps, stabilizer,
                             symmetric_census, verify_decomposition)
from imbedsum.imbedding_sum import imbedding_sum
from imbedsum.perm import Permutation
from imbedsum.polynomials import evaluate_at_ones


def test_k4_census(k4):
    c = census(k4)
    assert c.class_count == 3 and c.total_maps == 16
    assert sorted((k.orbit_size, k.stabilizer_order, k.genus) for k in c.classes) == [(2, 12, 0), (6, 4, 1), (8, 3, 1)]
    assert c.genus_histogram() == {0: 1, 1: 2}


def test_k5_census_histogram(k5):
    assert census(k5).stabilizer_order_histogram() == {1: 56, 2: 15, 4: 4, 5: 1, 20: 2}


def test_census_cap(k5):
    with pytest.raises(CapExceeded):
        census(k5, cap=100)


def test_planar_k4_faces(k4):
    c = census(k4)
    planar = next(k for k in c.classes if k.genus == 0)
    assert face_trace(k4, planar.representative) == ((3, 3, 3, 3), 0)


@pytest.mark.parametrize("g", [complete(4), complete(5), wheel(5), bouquet_model(2)], ids=["K4", "K5", "W6", "B2"])
def test_every_face_trace_is_consistent(g):
    for m in enumerate_rotation_systems(g):
        regions, genus = face_trace(g, m)
        assert sum(regions) == 2 * g.edge_count
        chi = g.vertex_count - g.edge_count + len(regions)
        assert chi % 2 == 0 and genus == (2 - chi) // 2 >= 0


def test_edgeless_graph_faces():
    from imbedsum.graphs import Graph
    g = Graph.from_edges(1, [])
    assert face_trace(g, RotationSystem(((),))) == ((0,), 0)


def test_k5_equivariant_c5_map(k5):
    gamma = Permutation.parse("(1 2 3 4 5)", 5, base=1)
    m = equivariant_map(k5, gamma, {0: Permutation.parse("(2 3 4 5)", 5, base=1).cycles()[0]})
    assert face_trace(k5, m) == ((5, 5, 10), 2)
    assert stabilizer(automorphism_group(k5), m).order == 5
    alpha = Permutation.parse("(2 5)(3 4)", 5, base=1)
    assert act(alpha, m, k5) != m


def test_equivariant_map_needs_full_seeds():
    g = wheel(4)
    gamma = Permutation.parse("(1 2 3 4)", 5)
    with pytest.raises(PreconditionError):
        equivariant_map(g, gamma, {1: (0, 2, 4)})


def test_fixed_maps_agree_with_scan(k4):
    scan = burnside_scan(k4)
    for gamma in automorphism_group(k4):
        maps = fixed_maps(k4, gamma)
        assert len(maps) == scan[gamma]
        assert all(act(gamma, m, k4) == m for m in maps)


@pytest.mark.parametrize("g", [wheel(6), bouquet_model(3), complete(5)], ids=["W7", "B3", "K5"])
def test_symmetric_census_matches_full_census(g):
    full, sym = census(g), symmetric_census(g)
    assert full.stabilizer_order_histogram() == sym.stabilizer_order_histogram()
    assert full.index_sum(g.vertex_count) == sym.index_sum(g.vertex_count)


def test_verify_directed_bouquet():
    report = verify_decomposition(directed_bouquet_model(3), loop_projection(3))
    assert report.ok and report.class_count == 22
    assert report.imbedding_sum.render() == "20*s1^3 + 2*s3"


def test_census_exports(k4):
    import csv
    import io
    c = census(k4)
    rows = list(csv.DictReader(io.StringIO(c.to_csv())))
    assert [r["stabilizer_order"] for r in rows] == [str(k.stabilizer_order) for k in c.classes]
    obj = c.to_json_obj()
    assert obj["class_count"] == 3 and len(obj["classes"]) == 3


def test_census_is_deterministic(k4):
    assert census(k4).to_json_obj() == census(k4).to_json_obj()


def test_rooted_census_total():
    g = rooted_complete(5)
    assert census(g).class_count == evaluate_at_ones(imbedding_sum(g)) == 336
