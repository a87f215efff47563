import itertools
import json

import pytest

from imbedsum.errors import CapExceeded, PreconditionError
from imbedsum.graphs import (Graph, RotationSystem, act, automorphism_group, bouquet_model, canonical_cycle,
                             complete, cyclic_orders, directed_bouquet_model, enumerate_rotation_systems,
                             load_graph, loop_projection, rooted_complete, wheel)
from imbedsum.perm import Permutation


def brute_automorphisms(g):
    return {Permutation(p) for p in itertools.permutations(range(g.vertex_count))
            if g.is_automorphism(Permutation(p))}


@pytest.mark.parametrize("g", [complete(4), wheel(4), wheel(5), bouquet_model(2), directed_bouquet_model(2),
                               rooted_complete(4), Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])],
                         ids=["K4", "W4", "W5", "B2", "dB2", "K4*", "P4"])
def test_automorphism_group_matches_brute_force(g):
    assert set(automorphism_group(g)) == brute_automorphisms(g)


@pytest.mark.parametrize("n,order", [(4, 8), (5, 10), (6, 12), (8, 16)])
def test_wheel_group_is_dihedral(n, order):
    assert automorphism_group(wheel(n)).order == order


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bouquet_group_orders(n):
    import math
    assert automorphism_group(bouquet_model(n)).order == 2 ** n * math.factorial(n)
    assert automorphism_group(directed_bouquet_model(n)).order == math.factorial(n)


def test_invalid_graphs_rejected():
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(PreconditionError):
        wheel(2)


def test_labeled_map_count():
    assert complete(5).labeled_map_count() == 6 ** 5
    assert wheel(4).labeled_map_count() == 6 * 2 ** 4


def test_enumeration_count_and_cap():
    g = complete(4)
    maps = list(enumerate_rotation_systems(g))
    assert len(maps) == len(set(maps)) == g.labeled_map_count()
    with pytest.raises(CapExceeded):
        list(enumerate_rotation_systems(complete(5), cap=100))


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("IMBEDSUM_MAP_CAP", "10")
    with pytest.raises(CapExceeded):
        list(enumerate_rotation_systems(complete(4)))


def test_cyclic_orders():
    assert len(cyclic_orders([1, 2, 3, 4])) == 6
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)


def test_action_is_a_group_action(k4):
    grp = list(automorphism_group(k4))
    m = next(iter(enumerate_rotation_systems(k4)))
    for a, b in itertools.product(grp[:6], grp[-6:]):
        assert act(a * b, m) == act(a, act(b, m))


def test_action_rotation_formula():
    g = complete(5)
    m = RotationSystem(((1, 2, 3, 4), (0, 2, 3, 4), (0, 1, 3, 4), (0, 1, 2, 4), (0, 1, 2, 3)))
    gamma = Permutation.parse("(0 1 2 3 4)", 5)
    img = act(gamma, m, g)
    # rotation at gamma(v) is gamma rho_v gamma^-1
    assert img.rotations[1] == canonical_cycle(tuple(gamma(x) for x in m.rotations[0]))


def test_json_and_edge_list_round_trip(tmp_path):
    g = bouquet_model(2)
    assert Graph.from_json_obj(json.loads(json.dumps(g.to_json_obj()))) == g
    assert Graph.from_edge_list(g.to_edge_list()) == g
    p = tmp_path / "k4.txt"
    p.write_text("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", encoding="utf-8")
    assert load_graph(p) == complete(4)
    q = tmp_path / "k4.json"
    q.write_text(json.dumps(complete(4).to_json_obj()), encoding="utf-8")
    assert load_graph(q) == complete(4)


def test_rotation_system_validation(k4):
    m = next(iter(enumerate_rotation_systems(k4)))
    m.validate(k4)
    assert RotationSystem.from_json_obj(m.to_json_obj()) == m
    with pytest.raises(PreconditionError):
        RotationSystem(((1, 2), (0,), (0,), ())).validate(k4)


def test_loop_projection():
    dom = loop_projection(3)
    g = directed_bouquet_model(3)
    images = {dom.apply(gamma) for gamma in automorphism_group(g)}
    assert len(images) == 6
    with pytest.raises(PreconditionError):
        dom.check(complete(3))
