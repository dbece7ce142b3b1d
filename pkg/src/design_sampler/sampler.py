"""Samplings and embeddings between complete designs.

A sampling sends every block of a source design to one of its sub-blocks in
a target design and hits every target block.  Regular samplings come from a
perfect matching of the containment graph with the target side replicated
``lambda`` times; the (1,2)-semiregular construction adds a König colouring
of the residual graph.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .containment import (ContainmentGraph, biregular_degrees, build_containment,
                          replicate)
from .designs import (BlockSet, DesignError, Redundancy, as_graph, complete_design,
                      required_redundancy)
from .graphs import is_subgraph
from .matching import bipartite_edge_coloring, coloring_classes, full_matching


class SamplingError(ValueError):
    """A map violates containment or surjectivity."""

    def __init__(self, message: str, indices=()):
        super().__init__(message)
        self.indices = list(indices)


class NoSamplingError(ValueError):
    """The requested regular map cannot exist (divisibility fails)."""

    def __init__(self, redundancy: Redundancy, message: str | None = None):
        super().__init__(message or f"no regular map: {redundancy}")
        self.redundancy = redundancy


@dataclass(frozen=True)
class RedundancyProfile:
    counts: tuple[int, ...]

    @property
    def min(self) -> int:
        return min(self.counts, default=0)

    @property
    def max(self) -> int:
        return max(self.counts, default=0)

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.counts).items()))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def kind(self) -> str:
        if not self.counts:
            return "empty"
        if self.min == self.max:
            return "regular"
        if self.max == self.min + 1:
            return "semiregular"
        return "irregular"

    def is_regular(self, lam: int | None = None) -> bool:
        return self.kind == "regular" and (lam is None or self.min == lam)

    def describe(self) -> str:
        if self.kind == "regular":
            return f"regular({self.min})"
        if self.kind == "semiregular":
            return f"semiregular({self.min},{self.max})"
        return f"{self.kind} {self.histogram}"

    def to_json(self) -> dict:
        return {"min": self.min, "max": self.max, "kind": self.kind,
                "histogram": {str(k): v for k, v in self.histogram.items()}}


@dataclass(frozen=True)
class SamplingMap:
    """``assignment[i]`` is the target index sampled from source block ``i``."""

    source: BlockSet
    target: BlockSet
    assignment: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(a) for a in self.assignment))
        if len(self.assignment) != len(self.source.blocks):
            raise SamplingError("assignment length differs from the source size")

    def image(self, i: int):
        return self.target.blocks[self.assignment[i]]

    def profile(self) -> RedundancyProfile:
        counts = [0] * len(self.target.blocks)
        for j in self.assignment:
            counts[j] += 1
        return RedundancyProfile(tuple(counts))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "assignment": list(self.assignment), "profile": self.profile().to_json()}

    @classmethod
    def from_json(cls, data: dict) -> SamplingMap:
        return cls(BlockSet.from_json(data["source"]), BlockSet.from_json(data["target"]),
                   tuple(data["assignment"]))


@dataclass(frozen=True)
class EmbeddingMap:
    """``assignment[i]`` is the target block containing source block ``i``."""

    source: BlockSet
    target: BlockSet
    assignment: tuple[int, ...]

    @property
    def strict(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def profile(self) -> RedundancyProfile:
        counts = [0] * len(self.target.blocks)
        for j in self.assignment:
            counts[j] += 1
        return RedundancyProfile(tuple(counts))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "assignment": list(self.assignment), "strict": self.strict,
                "profile": self.profile().to_json()}

    @classmethod
    def from_json(cls, data: dict) -> EmbeddingMap:
        return cls(BlockSet.from_json(data["source"]), BlockSet.from_json(data["target"]),
                   tuple(data["assignment"]))


def verify_sampling(sm: SamplingMap) -> RedundancyProfile:
    """Check containment and surjectivity; return the preimage profile."""
    nt = len(sm.target.blocks)
    bad = [i for i, j in enumerate(sm.assignment)
           if not (0 <= j < nt) or not is_subgraph(sm.target.blocks[j], sm.source.blocks[i])]
    if bad:
        raise SamplingError(f"containment fails at source blocks {bad[:10]}", bad)
    prof = sm.profile()
    missing = [j for j, c in enumerate(prof.counts) if c == 0]
    if missing:
        raise SamplingError(f"target blocks {missing[:10]} have no preimage", missing)
    return prof


def verify_embedding(em: EmbeddingMap) -> RedundancyProfile:
    bad = [i for i, j in enumerate(em.assignment)
           if not is_subgraph(em.source.blocks[i], em.target.blocks[j])]
    if bad:
        raise SamplingError(f"containment fails at source blocks {bad[:10]}", bad)
    return em.profile()


def _containment(A: BlockSet, B: BlockSet) -> tuple[ContainmentGraph, list[int], list[int]]:
    """Containment graph plus maps from its sorted sides back to A/B indices."""
    cg = build_containment(A, B)
    lpos = [A.index[b.key] for b in cg.left]
    rpos = [B.index[b.key] for b in cg.right]
    return cg, lpos, rpos


def _designs(n, big, small) -> tuple[BlockSet, BlockSet]:
    return complete_design(n, as_graph(big)), complete_design(n, as_graph(small))


def regular_sampling_of(A: BlockSet, B: BlockSet, lam: int) -> SamplingMap:
    """Regular sampling of redundancy ``lam`` via a perfect matching of the
    containment graph with the target side replicated ``lam`` times.

    Raises :class:`SamplingError` if no perfect matching exists, which can
    only happen on hosts whose containment graph is not biregular.
    """
    cg, lpos, rpos = _containment(A, B)
    rep = replicate(cg, 1, lam)
    m = full_matching(rep)
    if m.size != cg.n_left or rep.n_left != rep.n_right:
        raise SamplingError(f"matching covers {m.size} of {cg.n_left} source blocks")
    assignment = [0] * len(A.blocks)
    for i, flat in m.pairs:
        assignment[lpos[i]] = rpos[rep.right_vertex(flat)[0]]
    return SamplingMap(A, B, tuple(assignment), {"construction": "matching", "lambda": lam})


def regular_sampling(n: int, big, small) -> SamplingMap:
    """Regular sampling ``K_n(big) -> K_n(small)``.

    Raises :class:`NoSamplingError` when ``|K_n(small)|`` does not divide
    ``|K_n(big)|``.
    """
    red = required_redundancy(n, big, small)
    if not red.exact:
        raise NoSamplingError(red)
    A, B = _designs(n, big, small)
    sm = regular_sampling_of(A, B, red.quotient)
    if not verify_sampling(sm).is_regular(red.quotient):
        raise AssertionError("matching did not produce a regular sampling")
    return sm


def regular_embedding(n: int, small, big) -> EmbeddingMap:
    """``lambda``-fold regular embedding ``K_n(small) -> K_n(big)``, each big
    block receiving exactly ``lambda`` small blocks it contains."""
    small_g, big_g = as_graph(small), as_graph(big)
    required_redundancy(n, big_g, small_g)  # rejects non-embeddable pairs
    S, L = complete_design(n, small_g), complete_design(n, big_g)
    b_small, b_big = len(S.blocks), len(L.blocks)
    if b_small % b_big:
        q, r = divmod(b_small, b_big)
        raise NoSamplingError(Redundancy(b_small, b_big, q, r),
                              f"no regular embedding: {b_small} = {q}·{b_big} + {r}")
    lam = b_small // b_big
    cg, lpos, rpos = _containment(L, S)
    # Same graph as regular_sampling when lam == 1, so the two maps are inverse.
    rep = replicate(cg, lam, 1)
    m = full_matching(rep)
    if m.size != b_small:
        raise AssertionError("containment graph has no perfect matching")
    assignment = [0] * b_small
    for flat, j in m.pairs:
        assignment[rpos[j]] = lpos[rep.left_vertex(flat)[0]]
    em = EmbeddingMap(S, L, tuple(assignment))
    if not verify_embedding(em).is_regular(lam):
        raise AssertionError("matching did not produce a regular embedding")
    return em


def floor_sampling(n: int, big, small) -> SamplingMap:
    """Sampling in which every target has at least ``floor(b1/b2)`` preimages.

    A full matching with the target side replicated ``lambda`` times fixes
    ``lambda * b2`` source blocks; each leftover block goes to its contained
    target of smallest key.
    """
    red = required_redundancy(n, big, small)
    lam = red.quotient
    if lam == 0:
        raise NoSamplingError(red, f"floor redundancy is 0: {red}")
    A, B = _designs(n, big, small)
    cg, lpos, rpos = _containment(A, B)
    rep = replicate(cg, 1, lam)
    m = full_matching(rep)
    if m.size != rep.n_right:
        raise AssertionError("replicated containment graph has no full matching")
    assignment = [-1] * len(A.blocks)
    for i, flat in m.pairs:
        assignment[lpos[i]] = rpos[rep.right_vertex(flat)[0]]
    for i, nbrs in enumerate(cg.adjacency):
        if assignment[lpos[i]] == -1:
            assignment[lpos[i]] = rpos[nbrs[0]]
    sm = SamplingMap(A, B, tuple(assignment), {"construction": "floor", "lambda": lam})
    if verify_sampling(sm).min < lam:
        raise AssertionError("floor sampling lost a preimage")
    return sm


def semiregular_sampling(n: int, big, small) -> SamplingMap:
    """(1,2)-semiregular sampling for ``b1 = b2 + r`` with ``0 < r < b2``.

    Requires ``b1 > e r^2 / (e + r - 1)`` where ``e`` is the number of big
    blocks containing a given small block.  A full matching handles ``b2``
    source blocks; the ``r`` leftovers take the colour class, in a König
    colouring of the residual graph, that touches all of them.
    """
    red = required_redundancy(n, big, small)
    b1, b2 = red.big_count, red.small_count
    r = b1 - b2
    if not 0 < r < b2:
        raise DesignError(f"need 0 < r < {b2}, got r = {r}")
    A, B = _designs(n, big, small)
    cg, lpos, rpos = _containment(A, B)
    d, e = biregular_degrees(cg)
    if not b1 * (e + r - 1) > e * r * r:
        raise DesignError(f"{b1} <= e r^2/(e+r-1) with e={e}, r={r}")
    if not d * r > (r - 1) * (e - 1):
        raise AssertionError(f"derived bound d > (r-1)(e-1)/r fails: d={d}, e={e}, r={r}")

    m = full_matching(cg)
    if m.size != b2:
        raise AssertionError("containment graph has no full matching")
    matched = m.left_to_right()
    rest = [i for i in range(cg.n_left) if i not in matched]
    residual = [cg.adjacency[i] for i in rest]
    colors = bipartite_edge_coloring(residual, cg.n_right)
    classes = coloring_classes(colors)
    chosen = None
    for c in sorted(classes):
        if len({li for li, _ in classes[c]}) == len(rest):
            chosen = c
            break
    if chosen is None:
        raise AssertionError("no colour class covers the unmatched source blocks")
    assignment = [-1] * len(A.blocks)
    for i, j in matched.items():
        assignment[lpos[i]] = rpos[j]
    for li, j in classes[chosen]:
        assignment[lpos[rest[li]]] = rpos[j]
    sm = SamplingMap(A, B, tuple(assignment),
                     {"construction": "semiregular", "r": r, "degrees": [d, e], "color": chosen})
    prof = verify_sampling(sm)
    if set(prof.counts) - {1, 2} or prof.histogram.get(2, 0) != r:
        raise AssertionError(f"unexpected profile {prof.histogram}")
    return sm


def _align(bs: BlockSet, ref: BlockSet) -> list[int] | None:
    """Positions in ``ref`` of the blocks of ``bs`` when both hold the same
    blocks, else None."""
    if bs.host != ref.host or len(bs.blocks) != len(ref.blocks):
        return None
    try:
        pos = [ref.index[b.key] for b in bs.blocks]
    except KeyError:
        return None
    return pos if len(set(pos)) == len(pos) else None


def compose(first: SamplingMap, second: SamplingMap) -> SamplingMap:
    """``second`` after ``first``: source of first to target of second."""
    if first.target == second.source:
        assignment = [second.assignment[j] for j in first.assignment]
    else:
        pos = _align(first.target, second.source)
        if pos is None:
            raise SamplingError("the middle designs of the two samplings differ")
        assignment = [second.assignment[pos[j]] for j in first.assignment]
    return SamplingMap(first.source, second.target, tuple(assignment),
                       {"construction": "composition"})


def identity_sampling(bs: BlockSet) -> SamplingMap:
    return SamplingMap(bs, bs, tuple(range(len(bs.blocks))))
