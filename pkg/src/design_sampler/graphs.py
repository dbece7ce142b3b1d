"""Small labeled graphs: representation, copy enumeration, automorphisms.

Graphs live on integer vertices ``0..n-1``.  A :class:`LabeledGraph` is an
immutable value; two graphs are equal iff they have the same vertex count and
the same edge set.  Copies of a pattern inside a host are identified by their
edge sets, so a pattern's isolated vertices never distinguish two copies.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

# Graphs above this order are refused by graph_automorphisms.
DEFAULT_AUTOMORPHISM_BOUND = 16


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on vertices ``0..n-1`` with a sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            norm.add((u, v))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]) -> LabeledGraph:
        # Caller guarantees sorted, normalized, in-range edges.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @cached_property
    def key(self) -> bytes:
        """Canonical byte key; ordering by key is ordering by (n, edges)."""
        return canonical_key(self)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertices incident with at least one edge, ascending."""
        return tuple(sorted({x for e in self.edges for x in e}))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def relabel(self, perm: Sequence[int], n: int | None = None) -> LabeledGraph:
        """Image of the graph under the vertex map ``x -> perm[x]``."""
        return LabeledGraph(self.n if n is None else n,
                            ((perm[u], perm[v]) for u, v in self.edges))

    def union(self, other: LabeledGraph) -> LabeledGraph:
        return LabeledGraph(max(self.n, other.n), self.edges + other.edges)

    def difference(self, other: LabeledGraph) -> LabeledGraph:
        return LabeledGraph(self.n, self.edge_set - other.edge_set)

    def compact(self) -> LabeledGraph:
        """Relabel the non-isolated vertices to ``0..k-1`` preserving order."""
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        return LabeledGraph(len(verts), ((index[u], index[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> LabeledGraph:
        return cls(data["n"], data["edges"])

    def __lt__(self, other: LabeledGraph) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={list(self.edges)})"


def canonical_key(g: LabeledGraph) -> bytes:
    # Fixed-width big-endian fields make bytewise order equal tuple order.
    return struct.pack(f">I{2 * len(g.edges)}I", g.n,
                       *(x for e in g.edges for x in e))


# -- constructors ----------------------------------------------------------

def complete_graph(k: int, n: int | None = None) -> LabeledGraph:
    return LabeledGraph(k if n is None else n,
                        ((u, v) for u in range(k) for v in range(u + 1, k)))


def cycle_graph(k: int, n: int | None = None) -> LabeledGraph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return LabeledGraph(k if n is None else n, ((i, (i + 1) % k) for i in range(k)))


def path_graph(h: int, n: int | None = None) -> LabeledGraph:
    if h < 2:
        raise ValueError("a path needs at least 2 vertices")
    return LabeledGraph(h if n is None else n, ((i, i + 1) for i in range(h - 1)))


def star_graph(k: int, n: int | None = None) -> LabeledGraph:
    """Star with ``k`` vertices: centre 0 joined to ``1..k-1``."""
    if k < 2:
        raise ValueError("a star needs at least 2 vertices")
    return LabeledGraph(k if n is None else n, ((0, i) for i in range(1, k)))


def wheel_graph(k: int, n: int | None = None) -> LabeledGraph:
    """Wheel with ``k`` vertices: hub 0 over the rim cycle ``1..k-1``."""
    if k < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    m = k - 1
    rim = ((1 + i, 1 + (i + 1) % m) for i in range(m))
    spokes = ((0, i) for i in range(1, k))
    return LabeledGraph(k if n is None else n, list(rim) + list(spokes))


def path_through(vertices: Sequence[int], n: int) -> LabeledGraph:
    return LabeledGraph(n, zip(vertices, vertices[1:]))


def cycle_through(vertices: Sequence[int], n: int) -> LabeledGraph:
    vs = list(vertices)
    return LabeledGraph(n, zip(vs, vs[1:] + vs[:1]))


def clique_on(vertices: Iterable[int], n: int) -> LabeledGraph:
    vs = sorted(vertices)
    return LabeledGraph(n, ((u, v) for i, u in enumerate(vs) for v in vs[i + 1:]))


# -- relations -------------------------------------------------------------

def is_subgraph(a: LabeledGraph, b: LabeledGraph) -> bool:
    """True iff every edge of ``a`` is an edge of ``b`` (labels fixed)."""
    return a.edge_set <= b.edge_set


def _search_order(pattern: LabeledGraph) -> list[int]:
    # Start from a max-degree vertex and grow through neighbours so that most
    # placements are constrained by an already placed vertex.
    remaining = set(pattern.vertices)
    order: list[int] = []
    adj = pattern.adjacency
    while remaining:
        start = max(sorted(remaining), key=lambda v: len(adj[v]))
        order.append(start)
        remaining.discard(start)
        while True:
            frontier = [v for v in sorted(remaining)
                        if any(w in adj[v] for w in order)]
            if not frontier:
                break
            nxt = max(frontier, key=lambda v: (sum(w in adj[v] for w in order), len(adj[v])))
            order.append(nxt)
            remaining.discard(nxt)
    return order


def embeddings(host: LabeledGraph, pattern: LabeledGraph) -> Iterator[dict[int, int]]:
    """Yield every injective map of the pattern's non-isolated vertices into
    the host under which pattern edges land on host edges."""
    order = _search_order(pattern)
    if not order:
        yield {}
        return
    padj = pattern.adjacency
    hadj = host.adjacency
    host_vertices = [v for v in range(host.n) if hadj[v]]
    back = [[w for w in order[:i] if w in padj[v]] for i, v in enumerate(order)]
    need = [len(padj[v]) for v in order]
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(image)
            return
        v = order[i]
        if back[i]:
            anchor = image[back[i][0]]
            cands = sorted(hadj[anchor])
        else:
            cands = host_vertices
        for c in cands:
            if c in used or len(hadj[c]) < need[i]:
                continue
            if any(image[w] not in hadj[c] for w in back[i]):
                continue
            image[v] = c
            used.add(c)
            yield from extend(i + 1)
            used.discard(c)
            del image[v]

    yield from extend(0)


def copies_with_maps(host: LabeledGraph, pattern: LabeledGraph) -> dict[bytes, tuple[LabeledGraph, dict[int, int]]]:
    """Distinct copies keyed by canonical key, each with one realizing map."""
    if pattern.n > host.n:
        return {}
    found: dict[bytes, tuple[LabeledGraph, dict[int, int]]] = {}
    for phi in embeddings(host, pattern):
        g = LabeledGraph(host.n, ((phi[u], phi[v]) for u, v in pattern.edges))
        found.setdefault(g.key, (g, phi))
    return found


def local_forms(pattern: LabeledGraph) -> list[tuple[Edge, ...]]:
    """Distinct labelings of the compacted pattern on ``0..k-1``, as sorted
    edge tuples."""
    c = pattern.compact()
    return sorted(g.edges for g in enumerate_copies(complete_graph(c.n), c))


def _is_complete(g: LabeledGraph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def enumerate_copies(host: LabeledGraph, pattern: LabeledGraph) -> list[LabeledGraph]:
    """All subgraphs of ``host`` isomorphic to ``pattern``, sorted by key.

    Copies are compared as edge sets; the pattern must not have more vertices
    than the host.
    """
    if pattern.n > host.n:
        return []
    k = len(pattern.vertices)
    if _is_complete(host) and 0 < k < host.n:
        # Every copy is one labeling on one k-subset; the increasing vertex
        # map keeps edge tuples sorted, so no deduplication is needed.
        from itertools import combinations
        forms = local_forms(pattern)
        out = [tuple((V[a], V[b]) for a, b in f)
               for V in combinations(range(host.n), k) for f in forms]
        out.sort()
        return [LabeledGraph._trusted(host.n, e) for e in out]
    found = copies_with_maps(host, pattern)
    return [found[k][0] for k in sorted(found)]


def count_embeddings(host: LabeledGraph, pattern: LabeledGraph) -> int:
    return sum(1 for _ in embeddings(host, pattern))


# -- automorphisms ---------------------------------------------------------

def _find_automorphism(g: LabeledGraph, fixed: dict[int, int]) -> tuple[int, ...] | None:
    """One automorphism extending the partial map ``fixed``, or None."""
    n = g.n
    adj = g.adjacency
    deg = [len(a) for a in adj]
    image = dict(fixed)
    used = set(image.values())
    for u, a in image.items():
        if deg[u] != deg[a]:
            return None
    for u in image:
        for w in image:
            if (w in adj[u]) != (image[w] in adj[image[u]]):
                return None
    rest = [v for v in range(n) if v not in image]
    # Place neighbours of already-placed vertices early to prune quickly.
    rest.sort(key=lambda v: (-sum(w in adj[v] for w in image), -deg[v], v))

    def extend(i: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        for c in range(n):
            if c in used or deg[c] != deg[v]:
                continue
            if any((w in adj[v]) != (image[w] in adj[c]) for w in image):
                continue
            image[v] = c
            used.add(c)
            if extend(i + 1):
                return True
            used.discard(c)
            del image[v]
        return False

    if extend(0):
        return tuple(image[v] for v in range(n))
    return None


def graph_automorphisms(g: LabeledGraph, bound: int = DEFAULT_AUTOMORPHISM_BOUND):
    """Automorphism group of ``g`` as a generating set plus its order.

    Walks the pointwise stabilizer chain of ``0, 1, ...``; at each level one
    coset representative per reachable image is kept as a generator and the
    order is the product of the level orbit lengths.
    """
    from .groups import PermutationGroup

    if g.n > bound:
        raise ValueError(f"graph order {g.n} exceeds automorphism bound {bound}")
    generators: list[tuple[int, ...]] = []
    order = 1
    fixed: dict[int, int] = {}
    for base in range(g.n):
        orbit = 1
        for target in range(g.n):
            if target == base or target in fixed.values():
                continue
            perm = _find_automorphism(g, {**fixed, base: target})
            if perm is not None:
                orbit += 1
                generators.append(perm)
        order *= orbit
        fixed[base] = base
    return PermutationGroup(g.n, generators, order=order, kind="custom")


def canonical_form(g: LabeledGraph) -> tuple[int, tuple[Edge, ...]]:
    """Isomorphism-invariant form of a small graph (brute force over
    relabelings of its non-isolated vertices)."""
    from itertools import permutations
    c = g.compact()
    best = None
    for perm in permutations(range(c.n)):
        form = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in c.edges))
        if best is None or form < best:
            best = form
    return c.n, best or ()


def all_patterns(max_vertices: int) -> list[LabeledGraph]:
    """One graph per isomorphism class with 2..max_vertices vertices and no
    isolated vertex, ordered by (vertices, edges, form)."""
    from itertools import combinations
    found: dict[tuple, LabeledGraph] = {}
    for k in range(2, max_vertices + 1):
        pairs = list(combinations(range(k), 2))
        for r in range(1, len(pairs) + 1):
            for es in combinations(pairs, r):
                if len({x for e in es for x in e}) != k:
                    continue
                g = LabeledGraph(k, es)
                form = canonical_form(g)
                if form not in found:
                    found[form] = LabeledGraph(k, form[1])
    return [found[f] for f in sorted(found, key=lambda f: (f[0], len(f[1]), f[1]))]
