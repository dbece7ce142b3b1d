"""Bipartite matchings and König edge colourings.

Bipartite graphs are passed as left adjacency lists: ``adj[i]`` lists the
right neighbours of left vertex ``i``.  Anything exposing ``adjacency``,
``n_left`` and ``n_right`` (containment graphs, replicated graphs) is
accepted as well.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

UNMATCHED = -1


@dataclass
class Matching:
    pairs: list[tuple[int, int]]
    n_left: int
    n_right: int

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def full(self) -> bool:
        return self.size == min(self.n_left, self.n_right)

    def left_to_right(self) -> dict[int, int]:
        return dict(self.pairs)

    def right_to_left(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}


def _unpack(g, n_right: int | None) -> tuple[list[list[int]], int]:
    if hasattr(g, "adjacency"):
        return g.adjacency, g.n_right
    adj = [list(a) for a in g]
    if n_right is None:
        n_right = 1 + max((j for a in adj for j in a), default=-1)
    return adj, n_right


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> list[int]:
    """Maximum matching; returns ``match_left`` with -1 for unmatched.

    Neighbours are tried in the order given, so the result is deterministic.
    """
    n_left = len(adj)
    match_l = [UNMATCHED] * n_left
    match_r = [UNMATCHED] * n_right
    # Greedy start; Hopcroft-Karp phases then only fix the remainder.
    for i, nbrs in enumerate(adj):
        for j in nbrs:
            if match_r[j] == UNMATCHED:
                match_l[i], match_r[j] = j, i
                break
    inf = n_left + n_right + 1
    dist = [0] * n_left
    while True:
        queue = deque()
        for i in range(n_left):
            if match_l[i] == UNMATCHED:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = inf
        limit = inf
        while queue:
            i = queue.popleft()
            if dist[i] >= limit:
                continue
            for j in adj[i]:
                k = match_r[j]
                if k == UNMATCHED:
                    limit = min(limit, dist[i] + 1)
                elif dist[k] == inf:
                    dist[k] = dist[i] + 1
                    queue.append(k)
        if limit == inf:
            break
        pos = [0] * n_left
        for root in range(n_left):
            if match_l[root] != UNMATCHED:
                continue
            # Iterative layered DFS from a free left vertex.
            stack = [root]
            path_r: list[int] = []
            while stack:
                i = stack[-1]
                advanced = False
                while pos[i] < len(adj[i]):
                    j = adj[i][pos[i]]
                    pos[i] += 1
                    k = match_r[j]
                    if k == UNMATCHED:
                        if dist[i] + 1 == limit:
                            path_r.append(j)
                            for li, rj in zip(stack, path_r):
                                match_l[li] = rj
                                match_r[rj] = li
                            stack = []
                            advanced = True
                            break
                    elif dist[k] == dist[i] + 1:
                        path_r.append(j)
                        stack.append(k)
                        advanced = True
                        break
                if not advanced:
                    dist[i] = inf
                    stack.pop()
                    if path_r:
                        path_r.pop()
    return match_l


def full_matching(g, n_right: int | None = None) -> Matching:
    """Maximum matching of a bipartite graph.

    On biregular inputs this saturates the smaller side; otherwise it is still
    maximum and ``Matching.full`` reports whether the smaller side is covered.
    """
    adj, nr = _unpack(g, n_right)
    match_l = hopcroft_karp(adj, nr)
    pairs = [(i, j) for i, j in enumerate(match_l) if j != UNMATCHED]
    return Matching(pairs, len(adj), nr)


class NotBipartiteError(ValueError):
    pass


def bipartition(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Two-colour the vertices of a simple graph; raises if impossible."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    raise NotBipartiteError(f"odd cycle through edge {(u, v)}")
    return side


def bipartite_edge_coloring(adj_or_graph, n_right: int | None = None) -> list[dict[int, int]]:
    """Proper edge colouring with exactly max-degree colours.

    Returns ``colors`` with ``colors[i][j]`` the colour (``0..D-1``) of the edge
    between left vertex ``i`` and right vertex ``j``.  Edges are coloured in
    order; when no colour is free at both ends, the alternating path of the two
    candidate colours starting at the right end is swapped first.
    """
    adj, nr = _unpack(adj_or_graph, n_right)
    nl = len(adj)
    # at_left[i][c] = right neighbour joined to i by colour c (or -1)
    deg_r = [0] * nr
    for nbrs in adj:
        for j in nbrs:
            deg_r[j] += 1
    delta = max([len(a) for a in adj] + deg_r + [0])
    at_left = [[-1] * delta for _ in range(nl)]
    at_right = [[-1] * delta for _ in range(nr)]
    for i, nbrs in enumerate(adj):
        if len(set(nbrs)) != len(nbrs):
            raise ValueError(f"parallel edges at left vertex {i}")
        for j in nbrs:
            a = at_left[i].index(-1)
            if at_right[j][a] == -1:
                at_left[i][a] = j
                at_right[j][a] = i
                continue
            b = at_right[j].index(-1)
            # Swap colours a and b along the path j -a- i1 -b- j1 -a- ...
            # It cannot reach i, since i misses a and the path would be odd.
            path_r, path_l = [j], []
            while True:
                li = at_right[path_r[-1]][a]
                if li == -1:
                    break
                path_l.append(li)
                rj = at_left[li][b]
                if rj == -1:
                    break
                path_r.append(rj)
            # Clear then rewrite every edge on the path with the other colour.
            segs = []
            for k, li in enumerate(path_l):
                segs.append((li, path_r[k], a))
                if k + 1 < len(path_r):
                    segs.append((li, path_r[k + 1], b))
            for li, rj, c in segs:
                at_left[li][c] = -1
                at_right[rj][c] = -1
            for li, rj, c in segs:
                c2 = b if c == a else a
                at_left[li][c2] = rj
                at_right[rj][c2] = li
            at_left[i][a] = j
            at_right[j][a] = i
    colors: list[dict[int, int]] = [{} for _ in range(nl)]
    for i in range(nl):
        for c, j in enumerate(at_left[i]):
            if j != -1:
                colors[i][j] = c
    return colors


def coloring_classes(colors: list[dict[int, int]]) -> dict[int, list[tuple[int, int]]]:
    classes: dict[int, list[tuple[int, int]]] = {}
    for i, row in enumerate(colors):
        for j, c in row.items():
            classes.setdefault(c, []).append((i, j))
    return classes


def is_proper_coloring(colors: list[dict[int, int]]) -> bool:
    seen_right: set[tuple[int, int]] = set()
    for row in colors:
        if len(set(row.values())) != len(row):
            return False
        for j, c in row.items():
            if (j, c) in seen_right:
                return False
            seen_right.add((j, c))
    return True


def color_graph_edges(g) -> dict[tuple[int, int], int]:
    """König colouring of a bipartite :class:`LabeledGraph`, keyed by edge."""
    side = bipartition(g.n, g.edges)
    left = [v for v in range(g.n) if side[v] == 0]
    right = [v for v in range(g.n) if side[v] == 1]
    lpos = {v: i for i, v in enumerate(left)}
    rpos = {v: i for i, v in enumerate(right)}
    adj: list[list[int]] = [[] for _ in left]
    for u, v in g.edges:
        if side[u] == 1:
            u, v = v, u
        adj[lpos[u]].append(rpos[v])
    colors = bipartite_edge_coloring(adj, len(right))
    out = {}
    for i, row in enumerate(colors):
        for j, c in row.items():
            u, v = left[i], right[j]
            out[(min(u, v), max(u, v))] = c
    return out
