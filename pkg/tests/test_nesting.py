from __future__ import annotations

import pytest

from design_sampler.designs import BlockSet
from design_sampler.graphs import LabeledGraph, complete_graph
from design_sampler.nesting import (CycleSystem, NestingAssignment, NestingError, WheelDesign,
                                    from_json, nesting_from_sampling, search_nesting, sts7,
                                    to_json, verify_nesting, wheels_from_nesting)
from design_sampler.sampler import SamplingMap


def offset_hubs(c):
    return NestingAssignment(tuple((i + c) % 7 for i in range(7)))


def test_sts7_is_a_cycle_system():
    assert sts7().verify()


def test_offsets_by_brute_force():
    cs = sts7()
    good = [c for c in range(7) if verify_nesting(cs, offset_hubs(c))]
    assert good == [6]
    assert not verify_nesting(cs, offset_hubs(5))


def test_hub_on_cycle_fails():
    rep = verify_nesting(sts7(), offset_hubs(0))
    assert not rep and rep.hub_on_cycle == list(range(7))


def test_wheels_and_round_trip():
    cs, f = sts7(), offset_hubs(6)
    wd, xi1, xi2 = wheels_from_nesting(cs, f)
    assert len(wd.wheels) == 7 and wd.verify() and wd.multiplicity == 2
    assert all(len(w.edges) == 6 for w in wd.wheels)
    assert xi1.profile().is_regular(1) and xi2.profile().is_regular(1)
    assert nesting_from_sampling(wd, xi2) == (cs, f)


def test_search_finds_a_valid_nesting():
    res = search_nesting(sts7())
    assert res.found and verify_nesting(sts7(), res.assignment)


def test_search_budget():
    assert search_nesting(sts7(), budget=0).status == "budget"


def test_search_exhausts_when_impossible():
    # K_4 minus nothing cannot hold 3-cycles; use two triangles of K_4 pieces
    cs = CycleSystem.from_lists(3, [[0, 1, 2]])
    assert search_nesting(cs).status == "exhausted"


def test_wrong_star_is_rejected():
    cs, f = sts7(), offset_hubs(6)
    wd, _, xi2 = wheels_from_nesting(cs, f)
    # send wheel 0 to the star of wheel 1: not contained
    bad = SamplingMap(xi2.source, xi2.target, (1,) + xi2.assignment[1:])
    with pytest.raises(NestingError):
        nesting_from_sampling(wd, bad)


def test_non_cycle_remainder_rejected_for_m4():
    # W5 on 0..4 with hub 0; sampling a star centred on a rim vertex leaves no 4-cycle
    n = 5
    rim = [1, 2, 3, 4]
    cyc = [(1, 2), (2, 3), (3, 4), (1, 4)]
    wheel = LabeledGraph(n, cyc + [(0, v) for v in rim])
    off_star = LabeledGraph(n, [(0, 1), (1, 2), (1, 4)])
    wd = WheelDesign(n, 4, (wheel,), (0,))
    target = BlockSet(LabeledGraph(n, wheel.edges), 1, (off_star,))
    xi = SamplingMap(BlockSet(wheel, 1, (wheel,)), target, (0,))
    with pytest.raises(NestingError):
        nesting_from_sampling(WheelDesign(n, 4, (wheel,), (0,)), xi)
    assert wd.hubs == (0,)


def test_empty_wheel_design():
    cs, f = nesting_from_sampling(WheelDesign(2, 3, (), ()), None)
    assert cs.cycles == () and f.hubs == ()


def test_bad_cycle_lists():
    with pytest.raises(NestingError):
        CycleSystem.from_lists(7, [[0, 1, 2], [0, 1, 2, 3]])
    with pytest.raises(NestingError):
        CycleSystem.from_lists(7, [[0, 1, 0]])


def test_json_round_trip():
    cs, f = sts7(), offset_hubs(6)
    assert from_json(to_json(cs, f)) == (cs, f)
    assert complete_graph(7).n == cs.n
