"""Group-equivariant samplings built from orbit representatives.

A representative-level map assigns to one block per orbit of the big class a
contained small block.  When the group acts semiregularly on the big class,
``xi(s(t)) = s(map(t))`` extends it to every block; the result is regular of
redundancy ``lambda`` exactly when each small orbit ``u`` receives
``lambda / |Stab(u)|`` representatives.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .designs import BlockSet
from .graphs import LabeledGraph, clique_on, complete_graph, is_subgraph
from .groups import BlockAction, OrbitDecomposition, PermutationGroup, make_group, orbits
from .sampler import SamplingMap, verify_sampling


class LiftError(ValueError):
    """The representative-level map does not extend to a regular sampling.

    ``forced`` holds the value imposed by equivariance when two given
    representatives share an orbit but disagree.
    """

    def __init__(self, message: str, forced: LabeledGraph | None = None):
        super().__init__(message)
        self.forced = forced


def subsets(n: int, k: int) -> list[LabeledGraph]:
    """All ``k``-subsets of ``0..n-1`` as complete subgraphs of ``K_n``."""
    from itertools import combinations
    return sorted((clique_on(c, n) for c in combinations(range(n), k)), key=lambda g: g.key)


def design_of(objects, n: int) -> BlockSet:
    """Block set over ``K_n`` holding ``objects`` (key-sorted)."""
    blocks = tuple(sorted(objects, key=lambda g: g.key))
    host = complete_graph(n)
    e = len(host.edges)
    lam = len(blocks) * len(blocks[0].edges) // e if blocks and e else 1
    return BlockSet(host, max(lam, 1), blocks)


def lift_sampling(group: PermutationGroup, big: OrbitDecomposition,
                  small: OrbitDecomposition, rep_map) -> SamplingMap:
    """Equivariant extension of ``rep_map`` (pairs or dict: big block ->
    contained small block) to a regular sampling of ``big`` onto ``small``."""
    pairs = list(rep_map.items()) if isinstance(rep_map, dict) else list(rep_map)
    if not all(o.stabilizer_order == 1 for o in big.orbits):
        raise LiftError("group is not semiregular on the big class")
    nb, ns = len(big.objects), len(small.objects)
    if ns == 0 or nb % ns:
        raise LiftError(f"{nb} big blocks are not a multiple of {ns} small blocks")
    lam = nb // ns

    chosen: dict[int, tuple[int, int]] = {}   # big orbit -> (big index, small index)
    for t, s in pairs:
        try:
            ti = big.action.index[t.key]
            si = small.action.index[s.key]
        except KeyError as exc:
            raise LiftError(f"{t} or {s} is not in its class") from exc
        if not is_subgraph(s, t):
            raise LiftError(f"{s} is not contained in representative {t}")
        oid = big.orbit_of[ti]
        if oid in chosen:
            t0, s0 = chosen[oid]
            sigma = big.transporter(t0, ti)[0]
            forced_i = int(small.action.table[sigma, s0])
            forced = small.objects[forced_i]
            if forced_i != si:
                raise LiftError(f"{t} lies in the orbit of {big.objects[t0]}; "
                                f"equivariance forces {forced}, not {s}", forced=forced)
            continue
        chosen[oid] = (ti, si)
    if len(chosen) != len(big.orbits):
        missing = [big.objects[o.representative] for k, o in enumerate(big.orbits) if k not in chosen]
        raise LiftError(f"no representative given for {len(missing)} orbits, e.g. {missing[0]}")

    hits = [0] * len(small.orbits)
    for ti, si in chosen.values():
        hits[small.orbit_of[si]] += 1
    for k, o in enumerate(small.orbits):
        if hits[k] * o.stabilizer_order != lam:
            raise LiftError(f"small orbit of {small.objects[o.representative]} gets "
                            f"{hits[k]} representatives, needs {lam}/{o.stabilizer_order}")

    xi = np.full(nb, -1, dtype=np.int64)
    for ti, si in chosen.values():
        xi[big.action.table[:, ti]] = small.action.table[:, si]
    n = group.degree
    sm = SamplingMap(design_of(big.objects, n), design_of(small.objects, n), tuple(xi.tolist()),
                     {"construction": "lift", "group": group.kind, "group_order": group.order,
                      "lambda": lam,
                      "rows": [(big.objects[ti], small.objects[si])
                               for ti, si in sorted(chosen.values())]})
    if not verify_sampling(sm).is_regular(lam):
        raise AssertionError("lifted map is not regular")
    return sm


def equivariance_violations(sm: SamplingMap, group: PermutationGroup) -> int:
    """Number of pairs (sigma, t) with xi(sigma t) != sigma xi(t)."""
    src = BlockAction(group, sm.source.blocks).table
    tgt = BlockAction(group, sm.target.blocks).table
    xi = np.asarray(sm.assignment, dtype=np.int64)
    return int(np.count_nonzero(xi[src] != tgt[:, xi]))


def is_automorphism_group(sm: SamplingMap, group: PermutationGroup) -> bool:
    try:
        return equivariance_violations(sm, group) == 0
    except ValueError:
        # a design not closed under the group
        return False


# -- starters for 3-subsets -> 2-subsets ------------------------------------

@dataclass
class TripleStarter:
    """Orbit representatives of ``Z_n`` on 3-subsets for ``n = 2 mod 3``.

    Each triple is stored as ``(0, l, m)``; the sampled pair is ``{0, l}``.
    """

    n: int
    lam: int
    v: int
    families: dict[str, list[tuple[int, int, int]]]
    pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        """Union of the families in order, without repeats."""
        seen, out = set(), []
        for fam in self.families.values():
            for t in fam:
                if frozenset(t) not in seen:
                    seen.add(frozenset(t))
                    out.append(t)
        return out

    def sizes(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.families.items()}

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": self.lam, "v": self.v,
                "families": {k: [list(t) for t in v] for k, v in self.families.items()},
                "pairs": [list(p) for p in self.pairs]}


def triple_starter(n: int) -> TripleStarter:
    """Families T1..T4 of representatives, ``lambda = (n-2)/3``,
    ``v = floor(n/2)``.  T2 holds ``{0,l,m}`` with ``l < m`` and T3 the
    triples ``{0,j,u}`` with ``u < j``."""
    if n < 5 or n % 3 != 2:
        raise ValueError(f"need n = 2 (mod 3) and n >= 5, got {n}")
    lam = (n - 2) // 3
    v = n // 2
    t1 = [(0, i, i + t) for i in range(1, lam + 2) for t in range(1, lam + 1)]
    t2 = [(0, l, m) for l in range(lam + 2, v) for m in range(l + 1, 2 * lam + 2)]
    t3 = [(0, j, u) for j in range(lam + 2, v) for u in range(1, j - lam)]
    if n % 2:
        t4 = [(0, v, u) for u in list(range(1, v - lam)) + list(range(v + 1, 2 * lam + 2))]
        name = "T4^1"
    else:
        t4 = [(0, v, p) for p in range(1, lam // 2 + 1)]
        name = "T4^2"
    return TripleStarter(n, lam, v, {"T1": t1, "T2": t2, "T3": t3, name: t4},
                         [(0, x) for x in range(1, v + 1)])


def triple_sampling(n: int) -> SamplingMap:
    """Regular 2-sampling of the 3-subsets of ``Z_n``, lifted from the
    starter through the cyclic group."""
    st = triple_starter(n)
    group = make_group("cyclic", n)
    big = orbits(group, subsets(n, 3))
    small = orbits(group, subsets(n, 2))
    rep_map = [(clique_on(t, n), clique_on(t[:2], n)) for t in st.triples]
    sm = lift_sampling(group, big, small, rep_map)
    sm.meta["starter"] = st
    return sm


def subset_lift(n: int, group_kind: str, table) -> SamplingMap:
    """Lift a table of ``(k-subset, sampled sub-subset)`` rows."""
    group = make_group(group_kind, n)
    k = {len(t) for t, _ in table}
    k2 = {len(s) for _, s in table}
    if len(k) != 1 or len(k2) != 1:
        raise ValueError("table rows must have uniform sizes")
    big = orbits(group, subsets(n, k.pop()))
    small = orbits(group, subsets(n, k2.pop()))
    rows = [(clique_on(t, n), clique_on(s, n)) for t, s in table]
    return lift_sampling(group, big, small, rows)


def regularity_check(n: int, k: int, k2: int) -> tuple[int, int]:
    """``(quotient, remainder)`` of C(n,k) by C(n,k2)."""
    return divmod(math.comb(n, k), math.comb(n, k2))
