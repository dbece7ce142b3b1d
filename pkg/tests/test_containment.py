from __future__ import annotations

import pytest

from design_sampler.containment import (NotBiregularError, balanced_replication,
                                        biregular_degrees, build_containment, replicate)
from design_sampler.designs import block_set, complete_design
from design_sampler.graphs import all_patterns, enumerate_copies, path_graph


@pytest.mark.parametrize("n,big,small,deg", [(7, "C4", "P3", (4, 4)), (6, "K3", "K2", (3, 4))])
def test_degrees(n, big, small, deg):
    cg = build_containment(complete_design(n, big), complete_design(n, small))
    assert biregular_degrees(cg) == deg
    d, e = deg
    assert d * cg.n_left == e * cg.n_right


def test_self_containment_excluded():
    A = complete_design(5, "K3")
    cg = build_containment(A, A)
    assert biregular_degrees(cg) == (0, 0)


def test_path_host_is_not_biregular():
    host = path_graph(4)
    A = block_set(host, enumerate_copies(host, path_graph(3)))
    B = block_set(host, enumerate_copies(host, path_graph(2)))
    cg = build_containment(A, B)
    # the end edges of the path lie in one P3 each, the middle edge in two
    assert sorted(cg.right_degrees()) == [1, 1, 2]
    with pytest.raises(NotBiregularError):
        biregular_degrees(cg)


@pytest.mark.parametrize("big", list(all_patterns(4)), ids=lambda g: str(g.edges))
def test_fast_containment_equals_pairwise(big):
    n = 5
    A = complete_design(n, big)
    for small in all_patterns(4):
        if len(small.edges) >= len(big.edges):
            continue
        B = complete_design(n, small)
        fast = build_containment(A, B)
        slow = build_containment(A, B, method="pairwise")
        assert fast.adjacency == slow.adjacency


def test_replication():
    cg = build_containment(complete_design(6, "K3"), complete_design(6, "K2"))
    assert replicate(cg, 1, 1).adjacency == cg.adjacency
    rep = balanced_replication(cg)
    assert (rep.n_left, rep.n_right) == (60, 60)
    assert rep.degrees() == (12, 12)
    assert rep.collapse() == cg.adjacency
    deg_r = [0] * rep.n_right
    for a in rep.adjacency:
        assert len(a) == 12
        for j in a:
            deg_r[j] += 1
    assert set(deg_r) == {12}


def test_replicated_degree_formula():
    cg = build_containment(complete_design(8, "K3"), complete_design(8, "K2"))
    d, e = biregular_degrees(cg)
    assert replicate(cg, 2, 3).degrees() == (d * 3, e * 2)
