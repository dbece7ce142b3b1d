from __future__ import annotations

import pytest

from design_sampler.constructions import (LiftError, equivariance_violations, lift_sampling,
                                          subset_lift, subsets, triple_sampling, triple_starter)
from design_sampler.graphs import clique_on, path_through
from design_sampler.groups import make_group, orbits
from design_sampler.sampler import compose, verify_sampling
from design_sampler.tables import (C4_AFFINE_ROWS, N14_FAMILIES, N17_FAMILIES, c4_p3_sampling,
                                   cycle_row, family_rows, n11_samplings, n23_sampling)


@pytest.mark.parametrize("n,sizes", [
    (14, {"T1": 20, "T2": 3, "T3": 1, "T4^2": 2}),
    (17, {"T1": 30, "T2": 4, "T3": 1, "T4^1": 5}),
])
def test_starter_sizes(n, sizes):
    assert triple_starter(n).sizes() == sizes


@pytest.mark.parametrize("n,reference", [(14, N14_FAMILIES), (17, N17_FAMILIES)])
def test_reference_starters_lie_in_distinct_orbits(n, reference):
    g = make_group("cyclic", n)
    dec = orbits(g, subsets(n, 3))
    ids = [dec.orbit_id(clique_on(t, n)) for t in family_rows(reference)]
    assert len(set(ids)) == len(ids) == len(dec.orbits)
    ours = {dec.orbit_id(clique_on(t, n)) for t in triple_starter(n).triples}
    assert ours == set(ids)
    # family by family, reference and computed triples agree as sets
    st = triple_starter(n)
    for name, words in reference.items():
        assert {frozenset(t) for t in family_rows({name: words})} == \
               {frozenset(t) for t in st.families[name]}


def test_starter_n5():
    st = triple_starter(5)
    assert (st.lam, st.v) == (1, 2)
    assert st.families["T1"] == [(0, 1, 2), (0, 2, 3)]
    assert st.families["T2"] == st.families["T3"] == []
    assert len(st.triples) == 2


@pytest.mark.parametrize("n", [5, 8, 11, 14, 17, 20])
def test_triple_sampling_regular(n):
    sm = triple_sampling(n)
    assert verify_sampling(sm).is_regular((n - 2) // 3)
    assert equivariance_violations(sm, make_group("cyclic", n)) == 0


@pytest.mark.parametrize("n", [4, 6, 7])
def test_starter_rejects(n):
    with pytest.raises(ValueError):
        triple_starter(n)


def test_n23_lift():
    sm = n23_sampling()
    assert len(sm.source.blocks) == 8855 and len(sm.target.blocks) == 1771
    assert verify_sampling(sm).is_regular(5)
    assert equivariance_violations(sm, make_group("affine-square", 23)) == 0


def test_n11_composition():
    four, three = n11_samplings()
    assert verify_sampling(four).is_regular(2)
    assert verify_sampling(three).is_regular(3)
    both = compose(four, three)
    assert [len(x.blocks) for x in (four.source, four.target, both.target)] == [330, 165, 55]
    assert verify_sampling(both).is_regular(6)


@pytest.mark.parametrize("kind", ["cyclic", "affine-square"])
def test_c4_lifts(kind):
    sm = c4_p3_sampling(kind)
    assert verify_sampling(sm).is_regular(1)
    assert equivariance_violations(sm, make_group(kind, 7)) == 0


def test_forced_value():
    rows = C4_AFFINE_ROWS + ["0152"]
    with pytest.raises(LiftError) as exc:
        c4_p3_sampling("affine-square", rows)
    assert exc.value.forced == path_through([0, 2, 5], 7)
    # with the forced value the extra row is accepted
    g = make_group("affine-square", 7)
    sm = c4_p3_sampling("affine-square")
    block, _ = cycle_row("0152", 7)
    i = sm.source.index[block.key]
    assert sm.target.blocks[sm.assignment[i]] == path_through([0, 2, 5], 7)
    assert g.order == 21


def test_lift_needs_semiregular_source():
    # Z_14 fixes {0,7} up to a half turn, so pairs cannot be the big class
    g = make_group("cyclic", 14)
    big, small = orbits(g, subsets(14, 2)), orbits(g, subsets(14, 1))
    with pytest.raises(LiftError):
        lift_sampling(g, big, small, [])


def test_lift_counts_representatives():
    with pytest.raises(LiftError):
        subset_lift(11, "affine-square", [((0, 1, 2), (0, 1)), ((0, 1, 3), (0, 1))])


def test_lift_rejects_non_contained():
    with pytest.raises(LiftError):
        subset_lift(11, "affine-square",
                    [((0, 1, 2), (0, 3)), ((0, 1, 3), (0, 1)), ((0, 1, 5), (0, 1))])
