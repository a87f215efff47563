from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from imbedsum import decomposition as dc
from imbedsum.errors import PreconditionError
from imbedsum.graphs import automorphism_group, complete, wheel
from imbedsum.imbedding_sum import imbedding_sum
from imbedsum.perm import divisors


@given(st.integers(1, 36).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 50), min_size=len(divisors(n)),
                                              max_size=len(divisors(n))))))
def test_mobius_round_trip(data):
    n, values = data
    i = dict(zip(divisors(n), values))
    assert dc.mobius_invert(dc.mobius_forward(i, n), n) == i


def test_mobius_rejects_fractional():
    with pytest.raises(PreconditionError):
        dc.mobius_invert({1: Fraction(1, 3)}, 1)


@pytest.mark.parametrize("family,ns", [("wheel", range(4, 10)), ("bouquet", range(1, 8)),
                                       ("directed_bouquet", range(1, 9)), ("rooted_complete", range(1, 8))])
def test_profile_matches_explicit_formulas(family, ns):
    for n in ns:
        assert dc.profile(family, n).unlabeled() == dc.explicit_symmetry_counts(family, n)


@pytest.mark.parametrize("family,n", [("wheel", 6), ("bouquet", 4), ("directed_bouquet", 5), ("rooted_complete", 5)])
def test_cyclic_reassembly(family, n):
    assert dc.cyclic_reassemble(family, n) == dc.family_closed_form(family, n)


def test_profile_labeled_total_is_map_count():
    prof = dc.profile("wheel", 6)
    assert prof.labeled_total == wheel(6).labeled_map_count() == 7680
    assert prof.unlabeled_total == 666


def test_labeled_counts_requires_divisor():
    with pytest.raises(PreconditionError):
        dc.labeled_counts({3: 1}, {3: 3}, 8)


def test_unknown_family():
    with pytest.raises(PreconditionError):
        dc.family_shape("torus", 3)


def test_k5_catalog_and_filter(k5):
    z = imbedding_sum(k5)
    cands = dc.k5_candidates()
    assert [c.name for c in cands] == ["F", "C5", "E1xC4", "E1xC2[E2]", "D5", "E5"]
    assert [c.order for c in cands] == [20, 5, 4, 2, 10, 1]
    assert dc.candidate_filter(z, cands, k5) == cands
    assert dc.candidate_filter(z, dc.load_catalog(dc.K5_EXCLUDED_CATALOG), k5) == []


def test_k5_solution_sets(k5):
    z = imbedding_sum(k5)
    cands = dc.k5_candidates()
    free = dc.decompose_all(z, cands)
    assert len(free) == 6
    biggs = dc.decompose_all(z, cands, {"F": 1})
    assert len(biggs) == 4
    assert sum(s["C5"] == 1 for s in biggs) == 1
    (unique,) = dc.decompose_all(z, cands, {"F": 1, "C5": 1})
    assert unique == {"F": 2, "C5": 1, "E1xC4": 4, "E1xC2[E2]": 15, "D5": 0, "E5": 56}
    for sol in free:
        assert dc.reassemble(sol, cands) == z


def test_s4_subgroup_decomposition_unique(k4):
    z = imbedding_sum(k4)
    cands = dc.candidate_filter(z, dc.subgroup_candidates(automorphism_group(k4)), k4)
    sols = dc.decompose_all(z, cands)
    assert len(sols) == 1
    chosen = {name for name, k in sols[0].items() if k}
    orders = sorted(c.order for c in cands if c.name in chosen)
    assert orders == [3, 4, 12]


def test_s4_has_eleven_conjugacy_classes_of_subgroups():
    # S4 has 30 subgroups in 11 conjugacy classes; distinct cycle indexes are fewer
    subs = dc.all_subgroups(automorphism_group(complete(4)))
    assert len(subs) == 30


def test_decompose_rejects_unknown_constraint(k4):
    z = imbedding_sum(k4)
    with pytest.raises(PreconditionError):
        dc.decompose_all(z, dc.subgroup_candidates(automorphism_group(k4)), {"nope": 1})


def test_catalog_from_file(tmp_path, k5):
    import json
    p = tmp_path / "cat.json"
    p.write_text(json.dumps(dc.K5_CATALOG), encoding="utf-8")
    assert dc.load_catalog(p) == dc.k5_candidates()
    cands = dc.load_catalog([{"name": "F", "cycle_index": dc.FROBENIUS_K5_INDEX.to_json_obj()}])
    assert cands[0].order == 20
