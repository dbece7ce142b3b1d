"""Plain-text tables of samplings.

Lifted samplings print one row per orbit representative with the sampled
sub-block in brackets, e.g. ``[01]2`` or ``[0,1,2],5``.  Other samplings
print one ``block -> sample`` line per source block.
"""
from __future__ import annotations

from .graphs import LabeledGraph
from .nesting import cycle_order, is_cycle
from .sampler import SamplingMap


def _path_order(p: LabeledGraph) -> list[int]:
    ends = [v for v in p.vertices if p.degree(v) == 1]
    if not ends:
        return list(p.vertices)
    order, prev = [ends[0]], None
    while True:
        nxt = [w for w in sorted(p.adjacency[order[-1]]) if w != prev]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def _is_clique(g: LabeledGraph) -> bool:
    k = len(g.vertices)
    return len(g.edges) == k * (k - 1) // 2


def _fmt(vertices, compact: bool) -> str:
    if compact:
        return "".join(format(v, "x") for v in vertices)
    return ",".join(str(v) for v in vertices)


def format_row(block: LabeledGraph, sample: LabeledGraph, compact: bool) -> str:
    if _is_clique(block):
        head = sorted(sample.vertices)
        tail = [v for v in sorted(block.vertices) if v not in head]
    elif is_cycle(block):
        head = _path_order(sample)
        cyc = cycle_order(block)
        i = cyc.index(head[0])
        walk = cyc[i:] + cyc[:i]
        if len(head) > 1 and walk[1] != head[1]:
            walk = [walk[0]] + walk[1:][::-1]
        tail = walk[len(head):]
    else:
        head = list(sample.vertices)
        tail = [v for v in block.vertices if v not in head]
    sep = "" if compact else ","
    body = f"[{_fmt(head, compact)}]"
    return body + (sep + _fmt(tail, compact) if tail else "")


def report(sm: SamplingMap, style: str = "auto") -> str:
    """Deterministic text table; ``style`` is ``compact``, ``plain`` or
    ``auto`` (compact when every vertex is a single hex digit)."""
    n = sm.source.host.n
    compact = style == "compact" or (style == "auto" and n <= 16)
    rows = sm.meta.get("rows")
    lines: list[str] = []
    if rows:
        starter = sm.meta.get("starter")
        labels = {}
        if starter is not None:
            for name, fam in starter.families.items():
                for t in fam:
                    labels.setdefault(frozenset(t), name)
            # keep the starter's own order
            order = {frozenset(t): k for k, t in enumerate(starter.triples)}
            rows = sorted(rows, key=lambda r: order.get(frozenset(r[0].vertices), len(order)))
        else:
            rows = sorted(rows, key=lambda r: (r[1].key, r[0].key))
        for big, small in rows:
            label = labels.get(frozenset(big.vertices))
            if label is None:
                label = _fmt(sorted(small.vertices) if _is_clique(small) else _path_order(small),
                             compact)
            lines.append(f"{label}\t{format_row(big, small, compact)}")
    else:
        for i, j in enumerate(sm.assignment):
            lines.append(f"{_fmt(sm.source.blocks[i].vertices, compact)}\t->\t"
                         f"{format_row(sm.source.blocks[i], sm.target.blocks[j], compact)}")
    return "\n".join(lines) + ("\n" if lines else "")
