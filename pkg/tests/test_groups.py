from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from design_sampler.constructions import subsets
from design_sampler.graphs import complete_graph, enumerate_copies, path_graph, path_through
from design_sampler.groups import (BlockAction, compose, identity, inverse, is_semiregular,
                                   is_transitive, make_group, orbits, square_units)
from design_sampler.tables import P3_AFFINE_REPS, P3_CYCLIC_REPS, digits


@pytest.mark.parametrize("kind,n,order", [("cyclic", 7, 7), ("affine-square", 7, 21),
                                          ("affine-square", 23, 253), ("symmetric", 5, 120)])
def test_orders(kind, n, order):
    g = make_group(kind, n)
    assert g.order == order == len(set(g.elements))
    assert g.check_closure()


def test_affine_needs_prime():
    with pytest.raises(ValueError):
        make_group("affine-square", 9)


def test_square_units():
    assert square_units(7) == [1, 2, 4]
    assert len(square_units(23)) == 11


@given(st.permutations(range(6)), st.permutations(range(6)))
@settings(max_examples=50, deadline=None)
def test_permutation_algebra(p, q):
    p, q = tuple(p), tuple(q)
    assert compose(p, inverse(p)) == identity(6)
    # composition agrees with applying one map after the other
    r = compose(p, q)
    assert all(r[x] in range(6) for x in range(6))
    assert sorted(r) == list(range(6))


def brute_orbits(group, objs):
    seen, out = set(), 0
    for g in objs:
        if g.key in seen:
            continue
        out += 1
        for p in group.elements:
            seen.add(g.relabel(p).key)
    return out


@pytest.mark.parametrize("n,k,count", [(23, 3, 7), (23, 4, 35), (11, 4, 6), (11, 3, 3)])
def test_affine_orbit_counts(n, k, count):
    g = make_group("affine-square", n)
    dec = orbits(g, subsets(n, k))
    assert len(dec.orbits) == count
    assert is_semiregular(g, dec)


def test_affine_p3_orbits_match_reference_reps():
    g = make_group("affine-square", 7)
    dec = orbits(g, enumerate_copies(complete_graph(7), path_graph(3)))
    assert len(dec.orbits) == 5
    ids = {dec.orbit_id(path_through(digits(w), 7)) for w in P3_AFFINE_REPS}
    assert len(ids) == 5
    cyc = orbits(make_group("cyclic", 7), dec.objects)
    assert len({cyc.orbit_id(path_through(digits(w), 7)) for w in P3_CYCLIC_REPS}) == 15


def test_orbit_counts_match_brute_force():
    g = make_group("cyclic", 8)
    objs = subsets(8, 3)
    assert len(orbits(g, objs).orbits) == brute_orbits(g, objs)


def test_stabilizers_on_pairs():
    g = make_group("cyclic", 14)
    assert is_semiregular(g, subsets(14, 3))
    dec = orbits(g, subsets(14, 2))
    assert not is_semiregular(g, dec)
    half = [o for o in dec.orbits if o.stabilizer_order == 2]
    assert len(half) == 1 and dec.objects[half[0].representative].vertices == (0, 7)


def test_pairs_regular_under_affine_23():
    g = make_group("affine-square", 23)
    dec = orbits(g, subsets(23, 2))
    assert is_transitive(g, dec) and dec.orbits[0].size == 253
    # one orbit as large as the group: stabilizers are trivial, so the
    # action is regular (semiregular and transitive)
    assert is_semiregular(g, dec)
    assert dec.orbits[0].stabilizer_order == 1


def test_orbit_stabilizer_theorem():
    g = make_group("symmetric", 5)
    dec = orbits(g, subsets(5, 2))
    assert all(o.size * o.stabilizer_order == g.order for o in dec.orbits)


def test_block_action_table_agrees_with_relabel():
    g = make_group("affine-square", 11)
    objs = subsets(11, 3)
    act = BlockAction(g, objs)
    for s, p in itertools.islice(enumerate(g.elements), 0, None, 7):
        for i in range(0, len(objs), 13):
            assert objs[act.table[s, i]] == objs[i].relabel(p)
    assert (act.table == act._build_table_slow()).all()


def test_transporter():
    g = make_group("cyclic", 7)
    dec = orbits(g, subsets(7, 3))
    a = dec.objects[0]
    b = a.relabel([(x + 3) % 7 for x in range(7)])
    [s] = dec.transporter(0, dec.action.index[b.key])
    assert a.relabel(g.elements[s]) == b
