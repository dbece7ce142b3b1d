"""Cycle systems, nestings, and the wheel designs they induce.

A nesting picks a hub outside each cycle so that the hub-to-rim edges form a
star design.  Cycle plus star is a wheel, and the wheels cover every edge of
``K_n`` twice.  Conversely a sampling of such a wheel design onto a star
design gives back a cycle system (what is left of each wheel) and its
nesting (the star centres).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .designs import BlockSet, CoverageReport, verify_design
from .graphs import LabeledGraph, complete_graph, cycle_through
from .sampler import SamplingError, SamplingMap, verify_sampling


class NestingError(ValueError):
    pass


def cycle_order(c: LabeledGraph) -> list[int]:
    """Vertices of a cycle graph walked from its smallest vertex towards its
    smaller neighbour."""
    adj = c.adjacency
    verts = c.vertices
    if not verts:
        return []
    start = verts[0]
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        nxt = [w for w in sorted(adj[cur]) if w != prev]
        if not nxt or len(order) > len(verts):
            raise NestingError(f"{c} is not a cycle")
        prev, cur = cur, nxt[0]
    return order


def is_cycle(g: LabeledGraph, m: int | None = None) -> bool:
    verts = g.vertices
    if len(verts) < 3 or len(g.edges) != len(verts):
        return False
    if any(g.degree(v) != 2 for v in verts):
        return False
    try:
        return len(cycle_order(g)) == len(verts) and (m is None or len(verts) == m)
    except NestingError:
        return False


def star_centre(g: LabeledGraph) -> int | None:
    """Centre of a star with at least two rays, else None."""
    if len(g.edges) < 2:
        return None
    common = set(g.edges[0])
    for e in g.edges[1:]:
        common &= set(e)
    return common.pop() if len(common) == 1 else None


@dataclass(frozen=True)
class CycleSystem:
    n: int
    m: int
    cycles: tuple[LabeledGraph, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))

    @classmethod
    def from_lists(cls, n: int, cycles: Sequence[Sequence[int]], m: int | None = None) -> CycleSystem:
        if any(len(set(c)) != len(c) for c in cycles):
            raise NestingError("a cycle repeats a vertex")
        cs = [cycle_through(c, n) for c in cycles]
        ms = {len(c) for c in cycles}
        if len(ms) > 1 or (m is not None and ms and ms != {m}):
            raise NestingError("cycles of different lengths")
        if any(not is_cycle(c, len(vs)) for c, vs in zip(cs, cycles)):
            raise NestingError("a cycle repeats a vertex")
        return cls(n, ms.pop() if ms else (m or 0), tuple(cs))

    def block_set(self) -> BlockSet:
        return BlockSet(complete_graph(self.n), 1, self.cycles)

    def verify(self) -> CoverageReport:
        return verify_design(self.block_set())


@dataclass(frozen=True)
class NestingAssignment:
    hubs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "hubs", tuple(int(h) for h in self.hubs))


@dataclass(frozen=True)
class WheelDesign:
    """Wheels with their hubs recorded; for ``m = 3`` the hub of a ``K_4``
    cannot be read off the edge set."""

    n: int
    m: int
    wheels: tuple[LabeledGraph, ...]
    hubs: tuple[int, ...]
    multiplicity: int = 2

    def block_set(self) -> BlockSet:
        return BlockSet(complete_graph(self.n), self.multiplicity, self.wheels)

    def verify(self) -> CoverageReport:
        return verify_design(self.block_set())


@dataclass
class NestingReport:
    ok: bool
    hub_on_cycle: list[int]
    coverage: CoverageReport | None

    def __bool__(self) -> bool:
        return self.ok


def stars_of(cs: CycleSystem, f: NestingAssignment) -> list[LabeledGraph]:
    return [LabeledGraph(cs.n, ((x, h) for x in c.vertices)) for c, h in zip(cs.cycles, f.hubs)]


def verify_nesting(cs: CycleSystem, f: NestingAssignment) -> NestingReport:
    """True iff no hub sits on its cycle and the stars partition ``K_n``."""
    if len(f.hubs) != len(cs.cycles):
        raise NestingError("one hub per cycle is required")
    on_cycle = [i for i, (c, h) in enumerate(zip(cs.cycles, f.hubs)) if h in c.vertices]
    if on_cycle:
        return NestingReport(False, on_cycle, None)
    cov = verify_design(BlockSet(complete_graph(cs.n), 1, tuple(stars_of(cs, f))))
    return NestingReport(cov.ok, [], cov)


def wheels_from_nesting(cs: CycleSystem, f: NestingAssignment):
    """Wheel design of a nesting and its two bijective samplings, onto the
    cycles and onto the stars."""
    if not verify_nesting(cs, f):
        raise NestingError("not a valid nesting")
    stars = stars_of(cs, f)
    wheels = tuple(c.union(s) for c, s in zip(cs.cycles, stars))
    wd = WheelDesign(cs.n, cs.m, wheels, f.hubs)
    if not wd.verify():
        raise AssertionError("wheels do not cover K_n twice")
    W = wd.block_set()
    ident = tuple(range(len(wheels)))
    xi1 = SamplingMap(W, cs.block_set(), ident, {"construction": "wheel-to-cycle"})
    xi2 = SamplingMap(W, BlockSet(complete_graph(cs.n), 1, tuple(stars)), ident,
                      {"construction": "wheel-to-star"})
    verify_sampling(xi1)
    verify_sampling(xi2)
    return wd, xi1, xi2


def nesting_from_sampling(wd: WheelDesign, xi: SamplingMap) -> tuple[CycleSystem, NestingAssignment]:
    """Recover a cycle system and nesting from a wheel-to-star sampling.

    Each wheel minus its sampled star must be an ``m``-cycle avoiding the
    star centre; that centre becomes the hub.
    """
    if not wd.wheels:
        return CycleSystem(wd.n, wd.m, ()), NestingAssignment(())
    try:
        verify_sampling(xi)
    except SamplingError as exc:
        raise NestingError(f"not a sampling of the wheel design: {exc}") from exc
    if list(xi.source.blocks) != list(wd.wheels):
        raise NestingError("sampling source is not the wheel design")
    if not verify_design(xi.target):
        raise NestingError("sampling target is not a star design")
    cycles, hubs = [], []
    for i, w in enumerate(wd.wheels):
        s = xi.image(i)
        c = star_centre(s)
        rest = w.difference(s)
        if c is None or len(s.edges) != wd.m:
            raise NestingError(f"block {i} is not sampled to a star with {wd.m} rays")
        if not is_cycle(rest, wd.m) or c in rest.vertices:
            raise NestingError(f"wheel {i} minus its star is not an {wd.m}-cycle")
        cycles.append(rest)
        hubs.append(c)
    cs = CycleSystem(wd.n, wd.m, tuple(cycles))
    f = NestingAssignment(tuple(hubs))
    if not cs.verify() or not verify_nesting(cs, f):
        raise AssertionError("recovered cycles do not form a nested cycle system")
    return cs, f


@dataclass
class NestingSearch:
    status: str          # "found", "exhausted" (none exists) or "budget"
    assignment: NestingAssignment | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def search_nesting(cs: CycleSystem, budget: int = 1_000_000) -> NestingSearch:
    """Backtracking search for a nesting.

    Hubs are tried in increasing order on the cycle with fewest feasible
    hubs; every branch keeps at least one feasible hub for each open cycle.
    """
    n, k = cs.n, len(cs.cycles)
    if n * (n - 1) // 2 != cs.m * k:
        raise NestingError(f"{k} cycles of length {cs.m} cannot partition K_{n}")
    verts = [c.vertices for c in cs.cycles]
    used: set[tuple[int, int]] = set()
    hubs: list[int | None] = [None] * k
    nodes = 0

    def feasible(i: int) -> list[int]:
        vs = verts[i]
        return [h for h in range(n) if h not in vs
                and all((min(x, h), max(x, h)) not in used for x in vs)]

    class Budget(Exception):
        pass

    def go(open_: list[int]) -> bool:
        nonlocal nodes
        if not open_:
            return True
        nodes += 1
        if nodes > budget:
            raise Budget
        doms = {i: feasible(i) for i in open_}
        if any(not d for d in doms.values()):
            return False
        i = min(open_, key=lambda j: (len(doms[j]), j))
        rest = [j for j in open_ if j != i]
        for h in doms[i]:
            star = [(min(x, h), max(x, h)) for x in verts[i]]
            used.update(star)
            hubs[i] = h
            if go(rest):
                return True
            used.difference_update(star)
            hubs[i] = None
        return False

    try:
        ok = go(list(range(k)))
    except Budget:
        return NestingSearch("budget", None, nodes)
    if ok:
        return NestingSearch("found", NestingAssignment(tuple(hubs)), nodes)
    return NestingSearch("exhausted", None, nodes)


def sts7() -> CycleSystem:
    """Triples ``{i, i+1, i+3}`` mod 7 as a 3-cycle system of order 7."""
    return CycleSystem.from_lists(7, [[i, (i + 1) % 7, (i + 3) % 7] for i in range(7)])


def to_json(cs: CycleSystem, f: NestingAssignment | None = None) -> dict:
    return {"n": cs.n, "m": cs.m, "cycles": [cycle_order(c) for c in cs.cycles],
            "hubs": list(f.hubs) if f is not None else None}


def from_json(data: dict) -> tuple[CycleSystem, NestingAssignment | None]:
    cs = CycleSystem.from_lists(int(data["n"]), data["cycles"], int(data["m"]))
    hubs = data.get("hubs")
    return cs, (NestingAssignment(tuple(hubs)) if hubs is not None else None)
