"""Complete designs, block-set verification and redundancy arithmetic."""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .graphs import (LabeledGraph, complete_graph, cycle_graph, enumerate_copies,
                     is_subgraph, path_graph, star_graph, wheel_graph)


class DesignError(ValueError):
    """Raised on malformed design requests."""


class NotSubgraphError(DesignError):
    """The smaller pattern does not embed in the larger one."""


@dataclass(frozen=True)
class PatternFamily:
    """A named pattern: ``K`` complete, ``C`` cycle, ``P`` path, ``S`` star,
    ``W`` wheel; ``size`` is the number of vertices."""

    kind: str
    size: int

    _MIN = {"K": 1, "C": 3, "P": 2, "S": 2, "W": 4}

    def __post_init__(self):
        if self.kind not in self._MIN:
            raise DesignError(f"unknown pattern family {self.kind!r}")
        if self.size < self._MIN[self.kind]:
            raise DesignError(f"{self.kind}{self.size} is below the smallest legal order "
                              f"{self._MIN[self.kind]}")

    @classmethod
    def parse(cls, text: str) -> PatternFamily:
        m = re.fullmatch(r"\s*([KCPSW])_?(\d+)\s*", text)
        if not m:
            raise DesignError(f"cannot parse pattern shorthand {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def graph(self) -> LabeledGraph:
        build = {"K": complete_graph, "C": cycle_graph, "P": path_graph,
                 "S": star_graph, "W": wheel_graph}[self.kind]
        return build(self.size)

    def __str__(self) -> str:
        return f"{self.kind}{self.size}"


def as_graph(pattern) -> LabeledGraph:
    if isinstance(pattern, LabeledGraph):
        return pattern
    if isinstance(pattern, str):
        pattern = PatternFamily.parse(pattern)
    if isinstance(pattern, PatternFamily):
        return pattern.graph()
    raise TypeError(f"not a pattern: {pattern!r}")


@dataclass(frozen=True)
class BlockSet:
    """A host graph, an edge multiplicity and a sequence of blocks."""

    host: LabeledGraph
    multiplicity: int
    blocks: tuple[LabeledGraph, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.multiplicity < 1:
            raise DesignError("multiplicity must be at least 1")
        for b in self.blocks:
            if not is_subgraph(b, self.host):
                raise DesignError(f"block {b} is not a subgraph of the host")

    def __len__(self) -> int:
        return len(self.blocks)

    @cached_property
    def index(self) -> dict[bytes, int]:
        """Block key to position; the first position wins on repeats."""
        idx: dict[bytes, int] = {}
        for i, b in enumerate(self.blocks):
            idx.setdefault(b.key, i)
        return idx

    def to_json(self) -> dict:
        return {"host": self.host.to_json(), "multiplicity": self.multiplicity,
                "blocks": [b.to_json() for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> BlockSet:
        return cls(LabeledGraph.from_json(data["host"]), int(data["multiplicity"]),
                   tuple(LabeledGraph.from_json(b) for b in data["blocks"]))


@dataclass
class CoverageReport:
    ok: bool
    multiplicity: int
    under: dict[tuple[int, int], int]
    over: dict[tuple[int, int], int]
    foreign: dict[tuple[int, int], int]

    def __bool__(self) -> bool:
        return self.ok


def verify_design(bs: BlockSet) -> CoverageReport:
    """Check that every host edge lies in exactly ``multiplicity`` blocks.

    The report maps under- and over-covered host edges to their counts;
    ``foreign`` collects block edges missing from the host.
    """
    tally = Counter(e for b in bs.blocks for e in b.edges)
    lam = bs.multiplicity
    under = {e: tally.get(e, 0) for e in bs.host.edges if tally.get(e, 0) < lam}
    over = {e: tally[e] for e in bs.host.edges if tally.get(e, 0) > lam}
    foreign = {e: c for e, c in tally.items() if e not in bs.host.edge_set}
    return CoverageReport(not (under or over or foreign), lam, under, over, foreign)


@lru_cache(maxsize=None)
def _complete_blocks(n: int, pattern: LabeledGraph) -> tuple[LabeledGraph, ...]:
    return tuple(enumerate_copies(complete_graph(n), pattern))


def complete_design(n: int, pattern) -> BlockSet:
    """All copies of ``pattern`` in ``K_n``, with the uniform edge-cover count
    as multiplicity."""
    pattern = as_graph(pattern)
    if pattern.n > n:
        raise DesignError(f"pattern on {pattern.n} vertices does not fit in K_{n}")
    blocks = _complete_blocks(n, pattern)
    edges = n * (n - 1) // 2
    # Edge-transitivity of K_n makes every edge lie in the same number of copies.
    lam = len(blocks) * len(pattern.edges) // edges if edges and blocks else 1
    return BlockSet(complete_graph(n), max(lam, 1), blocks, verified=True)


def closed_form_count(n: int, fam) -> int:
    """Exact ``|K_n(fam)|`` for complete graphs, cycles and paths."""
    if isinstance(fam, str):
        fam = PatternFamily.parse(fam)
    k = fam.size
    if k > n:
        raise DesignError(f"{fam} does not fit in K_{n}")
    if fam.kind == "K":
        return math.comb(n, k)
    if fam.kind == "C":
        return math.comb(n, k) * math.factorial(k - 1) // 2
    if fam.kind == "P":
        return math.comb(n, k) * math.factorial(k) // 2
    raise DesignError(f"no closed form for {fam}; use enumeration")


def count_copies(n: int, pattern) -> int:
    """``|K_n(pattern)|``: closed form for supported families, else enumeration."""
    if isinstance(pattern, (str, PatternFamily)):
        fam = PatternFamily.parse(pattern) if isinstance(pattern, str) else pattern
        if fam.kind in "KCP":
            return closed_form_count(n, fam)
        pattern = fam.graph()
    if pattern.n > n:
        return 0
    return len(_complete_blocks(n, pattern))


@dataclass(frozen=True)
class Redundancy:
    big_count: int
    small_count: int
    quotient: int
    remainder: int

    @property
    def exact(self) -> bool:
        return self.remainder == 0 and self.quotient > 0

    @property
    def lam(self) -> int | None:
        return self.quotient if self.exact else None

    def __str__(self) -> str:
        return f"{self.big_count} = {self.quotient}·{self.small_count} + {self.remainder}"


def embeds_in(small: LabeledGraph, big: LabeledGraph) -> bool:
    return bool(enumerate_copies(big, small))


def required_redundancy(n: int, big, small) -> Redundancy:
    """Divide ``|K_n(big)|`` by ``|K_n(small)|``.

    Raises :class:`NotSubgraphError` when ``small`` does not embed in ``big``.
    """
    big_g, small_g = as_graph(big), as_graph(small)
    if big_g.n > n:
        raise DesignError(f"pattern on {big_g.n} vertices does not fit in K_{n}")
    if not embeds_in(small_g, big_g):
        raise NotSubgraphError("the small pattern is not a subgraph of the big one")
    b1, b2 = count_copies(n, big), count_copies(n, small)
    q, r = divmod(b1, b2)
    return Redundancy(b1, b2, q, r)


def block_set(host: LabeledGraph, blocks: Sequence[LabeledGraph], multiplicity: int = 1) -> BlockSet:
    return BlockSet(host, multiplicity, tuple(blocks))
