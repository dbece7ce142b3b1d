"""The bipartite containment graph between two block collections."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .designs import BlockSet, DesignError
from .graphs import LabeledGraph, enumerate_copies, is_subgraph


class NotBiregularError(ValueError):
    """Left or right degrees of a containment graph are not constant."""


@dataclass
class ContainmentGraph:
    """Left block ``i`` is joined to right block ``j`` when right[j] is a
    proper subgraph of left[i]."""

    left: tuple[LabeledGraph, ...]
    right: tuple[LabeledGraph, ...]
    adjacency: list[list[int]]
    degrees: tuple[int, int] | None = None

    @property
    def left_size(self) -> int:
        return len(self.left)

    @property
    def right_size(self) -> int:
        return len(self.right)

    @property
    def n_left(self) -> int:
        return len(self.left)

    @property
    def n_right(self) -> int:
        return len(self.right)

    def edges(self):
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                yield i, j

    def left_degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def right_degrees(self) -> list[int]:
        deg = [0] * len(self.right)
        for a in self.adjacency:
            for j in a:
                deg[j] += 1
        return deg


def _pairwise_column(left, j, rb) -> list[int]:
    return [i for i, lb in enumerate(left) if lb != rb and is_subgraph(rb, lb)]


def build_containment(A: BlockSet, B: BlockSet, method: str = "auto") -> ContainmentGraph:
    """Containment graph from the blocks of ``A`` (left) to those of ``B``.

    ``method="pairwise"`` tests every pair with :func:`is_subgraph`.  The
    default enumerates, inside each left block, the copies of the first right
    block's shape and looks them up; right blocks left isolated by that pass
    are re-checked pairwise, so the result equals the pairwise one.
    """
    if A.host != B.host:
        raise DesignError("block sets live on different hosts")
    left = tuple(sorted(A.blocks, key=lambda b: b.key))
    right = tuple(sorted(B.blocks, key=lambda b: b.key))
    if method == "pairwise" or not right:
        adjacency = [[j for j, rb in enumerate(right) if rb != lb and is_subgraph(rb, lb)]
                     for lb in left]
        return ContainmentGraph(left, right, adjacency)
    if method != "auto":
        raise ValueError(f"unknown containment method {method!r}")

    rindex: dict[tuple, list[int]] = {}
    for j, rb in enumerate(right):
        rindex.setdefault(rb.edges, []).append(j)
    shape = right[0].compact()
    # Sub-copies of a left block are the sub-copies of its compacted form
    # pushed through the increasing map back to its vertices; blocks sharing
    # a compacted form share the enumeration.
    local: dict[tuple, list[tuple]] = {}
    adjacency = []
    for lb in left:
        V = lb.vertices
        c = lb.compact()
        subs = local.get(c.edges)
        if subs is None:
            subs = [g.edges for g in enumerate_copies(c, shape)] if shape.n <= c.n else []
            local[c.edges] = subs
        found = set()
        for sub in subs:
            for j in rindex.get(tuple((V[a], V[b]) for a, b in sub), ()):
                if right[j] != lb:
                    found.add(j)
        adjacency.append(sorted(found))
    hit = set(j for a in adjacency for j in a)
    for j, rb in enumerate(right):
        if j in hit:
            continue
        for i in _pairwise_column(left, j, rb):
            adjacency[i].append(j)
    for a in adjacency:
        a.sort()
    return ContainmentGraph(left, right, adjacency)


def biregular_degrees(cg: ContainmentGraph) -> tuple[int, int]:
    """Return ``(d, e)`` when every left vertex has degree d and every right
    vertex degree e; the pair is stored on ``cg``."""
    ld, rd = cg.left_degrees(), cg.right_degrees()
    if len(set(ld)) > 1 or len(set(rd)) > 1:
        raise NotBiregularError(
            f"left degrees {sorted(set(ld))}, right degrees {sorted(set(rd))}")
    d = ld[0] if ld else 0
    e = rd[0] if rd else 0
    if d * len(ld) != e * len(rd):
        raise AssertionError("handshake identity violated")
    cg.degrees = (d, e)
    return d, e


@dataclass
class ReplicatedGraph:
    """``base`` with every left vertex copied ``left_copies`` times and every
    right vertex ``right_copies`` times.

    Vertex ``(i, c)`` on the left has flat index ``i * left_copies + c``;
    right vertices are flattened the same way with ``right_copies``.
    """

    base: ContainmentGraph
    left_copies: int
    right_copies: int
    adjacency: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        if self.left_copies < 1 or self.right_copies < 1:
            raise ValueError("replication counts must be at least 1")
        b = self.right_copies
        rows = [[j * b + c for j in nbrs for c in range(b)] for nbrs in self.base.adjacency]
        self.adjacency = [list(r) for r in rows for _ in range(self.left_copies)]

    @property
    def n_left(self) -> int:
        return self.left_copies * self.base.n_left

    @property
    def n_right(self) -> int:
        return self.right_copies * self.base.n_right

    def left_vertex(self, flat: int) -> tuple[int, int]:
        return divmod(flat, self.left_copies)

    def right_vertex(self, flat: int) -> tuple[int, int]:
        return divmod(flat, self.right_copies)

    def degrees(self) -> tuple[int, int]:
        """Replicated degrees ``(d * right_copies, e * left_copies)``."""
        d, e = self.base.degrees or biregular_degrees(self.base)
        return d * self.right_copies, e * self.left_copies

    def collapse(self) -> list[list[int]]:
        """Base adjacency recovered by forgetting copy ids."""
        out = []
        for i in range(self.base.n_left):
            flat = self.adjacency[i * self.left_copies]
            out.append(sorted({self.right_vertex(x)[0] for x in flat}))
        return out


def replicate(cg: ContainmentGraph, a: int, b: int) -> ReplicatedGraph:
    return ReplicatedGraph(cg, a, b)


def balanced_replication(cg: ContainmentGraph) -> ReplicatedGraph:
    """Replicate both sides up to ``m = lcm(b1, b2)`` vertices."""
    m = math.lcm(cg.n_left, cg.n_right)
    return replicate(cg, m // cg.n_left, m // cg.n_right)
