"""Materialized permutation groups and their actions on blocks.

A permutation of ``0..n-1`` is a tuple ``p`` with ``p[x]`` the image of
``x``.  Products compose right to left: ``compose(p, q)[x] == p[q[x]]``.
Groups here are small (orders up to a few hundred in practice), so every
group keeps its full element list and orbit/stabilizer questions are answered
by direct scans.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .graphs import LabeledGraph

Perm = tuple[int, ...]

KINDS = ("cyclic", "affine-square", "symmetric", "custom")


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def identity(n: int) -> Perm:
    return tuple(range(n))


class PermutationGroup:
    """A permutation group given by generators, materialized on demand."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]],
                 order: int | None = None, kind: str = "custom",
                 elements: Iterable[Sequence[int]] | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown group kind {kind!r}")
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of 0..{degree - 1}")
        self.kind = kind
        self._order = order
        if elements is not None:
            self.__dict__["elements"] = sorted({tuple(e) for e in elements})

    @cached_property
    def elements(self) -> list[Perm]:
        """All group elements, sorted; closure of the generators."""
        e = identity(self.degree)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = len(self.elements)
        return self._order

    def check_closure(self) -> bool:
        elems = set(self.elements)
        return (identity(self.degree) in elems
                and all(inverse(a) in elems for a in elems)
                and all(compose(a, b) in elems for a in elems for b in elems))

    @cached_property
    def element_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.degree)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"PermutationGroup(kind={self.kind!r}, degree={self.degree}, order={self.order})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "degree": self.degree, "order": self.order,
                "generators": [list(g) for g in self.generators]}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def square_units(n: int) -> list[int]:
    """Invertible squares modulo ``n``."""
    return sorted({(x * x) % n for x in range(1, n) if math.gcd(x, n) == 1})


def make_group(kind: str, n: int) -> PermutationGroup:
    """Build one of the standard groups acting on ``0..n-1``.

    ``cyclic``: translations ``x -> x + b``.  ``affine-square`` (``n`` prime):
    maps ``x -> a*x + b`` with ``a`` a nonzero square mod ``n``.
    ``symmetric``: all of ``S_n``.
    """
    if n < 1:
        raise ValueError("group degree must be at least 1")
    if kind in ("cyclic", "cyc"):
        elems = [tuple((x + b) % n for x in range(n)) for b in range(n)]
        gens = [elems[1 % n]]
        return PermutationGroup(n, gens, order=n, kind="cyclic", elements=elems)
    if kind in ("affine-square", "affine"):
        if not _is_prime(n):
            raise ValueError(f"affine-square group needs a prime degree, got {n}")
        sq = square_units(n)
        elems = [tuple((a * x + b) % n for x in range(n)) for a in sq for b in range(n)]
        gens = [tuple((x + 1) % n for x in range(n))]
        gens += [tuple((a * x) % n for x in range(n)) for a in sq if a != 1]
        return PermutationGroup(n, gens, order=len(elems), kind="affine-square",
                                elements=elems)
    if kind in ("symmetric", "sym"):
        if n > 9:
            raise ValueError(f"refusing to materialize S_{n}")
        elems = list(permutations(range(n)))
        gens = []
        if n > 1:
            gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return PermutationGroup(n, gens, order=math.factorial(n), kind="symmetric",
                                elements=elems)
    raise ValueError(f"unknown group kind {kind!r}")


# -- action on blocks ------------------------------------------------------

def act(perm: Sequence[int], g: LabeledGraph) -> LabeledGraph:
    return g.relabel(perm)


class BlockAction:
    """Vectorized action of a group on a fixed list of same-size blocks.

    ``table[s, i]`` is the index of the image of block ``i`` under element
    ``s``; it raises if the block list is not closed under the group.
    """

    def __init__(self, group: PermutationGroup, blocks: Sequence[LabeledGraph]):
        self.group = group
        self.blocks = list(blocks)
        self.index = {b.key: i for i, b in enumerate(self.blocks)}
        self.table = self._build_table()

    def _build_table(self) -> np.ndarray:
        blocks = self.blocks
        if not blocks:
            return np.zeros((self.group.order, 0), dtype=np.int64)
        n = self.group.degree
        sizes = {len(b.edges) for b in blocks}
        if len(sizes) != 1:
            return self._build_table_slow()
        m = sizes.pop()
        edges = np.array([b.edges for b in blocks], dtype=np.int64).reshape(len(blocks), m, 2)
        base = n * n
        if m * math.log2(max(base, 2)) >= 62:
            return self._build_table_slow()
        weights = base ** np.arange(m - 1, -1, -1, dtype=np.int64)

        def encode(e: np.ndarray) -> np.ndarray:
            codes = e[:, :, 0] * n + e[:, :, 1]
            codes.sort(axis=1)
            return codes @ weights

        ref = encode(edges)
        order = np.argsort(ref)
        ref_sorted = ref[order]
        table = np.empty((self.group.order, len(blocks)), dtype=np.int64)
        for s, p in enumerate(self.group.element_array):
            img = p[edges]
            img.sort(axis=2)
            code = encode(img)
            pos = np.searchsorted(ref_sorted, code)
            pos = np.minimum(pos, len(ref_sorted) - 1)
            if not np.array_equal(ref_sorted[pos], code):
                raise ValueError("block list is not closed under the group")
            table[s] = order[pos]
        return table

    def _build_table_slow(self) -> np.ndarray:
        table = np.empty((self.group.order, len(self.blocks)), dtype=np.int64)
        for s, p in enumerate(self.group.elements):
            for i, b in enumerate(self.blocks):
                j = self.index.get(b.relabel(p).key)
                if j is None:
                    raise ValueError("block list is not closed under the group")
                table[s, i] = j
        return table


@dataclass
class Orbit:
    representative: int
    members: list[int]
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class OrbitDecomposition:
    """Orbits of a group on a block list; indices refer to ``objects``."""

    group: PermutationGroup
    objects: list[LabeledGraph]
    orbit_of: list[int]
    orbits: list[Orbit]
    action: BlockAction = field(repr=False)

    @property
    def representatives(self) -> list[LabeledGraph]:
        return [self.objects[o.representative] for o in self.orbits]

    def orbit_id(self, g: LabeledGraph) -> int:
        return self.orbit_of[self.action.index[g.key]]

    def transporter(self, src: int, dst: int) -> list[int]:
        """Indices of group elements sending object ``src`` to ``dst``."""
        col = self.action.table[:, src]
        return np.flatnonzero(col == dst).tolist()

    def to_json(self) -> dict:
        return {"group": self.group.to_json(),
                "orbits": [{"rep": self.objects[o.representative].to_json(),
                            "size": o.size, "stab": o.stabilizer_order}
                           for o in self.orbits]}


def orbits(group: PermutationGroup, objects: Sequence[LabeledGraph]) -> OrbitDecomposition:
    """Partition ``objects`` into orbits; representatives have minimum key."""
    objs = sorted(objects, key=lambda b: b.key)
    action = BlockAction(group, objs)
    orbit_of = [-1] * len(objs)
    result: list[Orbit] = []
    for i in range(len(objs)):
        if orbit_of[i] >= 0:
            continue
        col = action.table[:, i]
        members = sorted(set(col.tolist()))
        for j in members:
            orbit_of[j] = len(result)
        stab = int(np.count_nonzero(col == i))
        # objs is key-sorted, so the first unseen index is the orbit minimum.
        result.append(Orbit(representative=i, members=members, stabilizer_order=stab))
    return OrbitDecomposition(group, objs, orbit_of, result, action)


def is_semiregular(group: PermutationGroup, objects) -> bool:
    """True iff every object has a trivial stabilizer."""
    dec = objects if isinstance(objects, OrbitDecomposition) else orbits(group, objects)
    return all(o.stabilizer_order == 1 for o in dec.orbits)


def is_transitive(group: PermutationGroup, objects) -> bool:
    dec = objects if isinstance(objects, OrbitDecomposition) else orbits(group, objects)
    return len(dec.orbits) == 1
