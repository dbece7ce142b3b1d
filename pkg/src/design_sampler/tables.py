"""Representative tables for the worked constructions.

Rows are ``(block, sample)``.  For cycles a block ``abcd`` is the cycle
a-b-c-d-a and its sample the path on the first three letters; for subsets
the sample is the leading sub-tuple.
"""
from __future__ import annotations

from .constructions import lift_sampling, subsets, subset_lift
from .graphs import LabeledGraph, complete_graph, cycle_through, enumerate_copies, path_through
from .groups import make_group, orbits
from .sampler import SamplingMap

# n = 7, cyclic group: 15 cycle representatives, sample = first three vertices
C4_CYCLIC_ROWS = ["0126", "0136", "0146", "0152", "0163",
                  "0231", "0245", "0253", "0261", "0346",
                  "0351", "0362", "0451", "0461", "0562"]

# n = 7, affine-square group of order 21
C4_AFFINE_ROWS = ["0126", "0136", "0146", "0154", "0351"]

P3_CYCLIC_REPS = ["012", "013", "014", "015", "016", "023", "024", "025", "026", "034",
                  "035", "036", "045", "046", "056"]
P3_AFFINE_REPS = ["012", "013", "014", "015", "035"]

# n = 14 and n = 17 reference starters, family by family
N14_FAMILIES = {
    "T1": ["012", "013", "014", "015", "023", "024", "025", "026", "034", "035",
           "036", "037", "045", "046", "047", "048", "056", "057", "058", "059"],
    "T2": ["067", "068", "069"],
    "T3": ["061"],
    "T4^2": ["071", "072"],
}
N17_FAMILIES = {
    "T1": ["012", "013", "014", "015", "016", "023", "024", "025", "026", "027",
           "034", "035", "036", "037", "038", "045", "046", "047", "048", "049",
           "056", "057", "058", "059", "05a", "067", "068", "069", "06a", "06b"],
    "T2": ["078", "079", "07a", "07b"],
    "T3": ["071"],
    "T4^1": ["081", "082", "089", "08a", "08b"],
}

# n = 23, affine-square group: 3-subset system and 35 compatible 4-subsets
N23_TRIPLES = [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 1, 5), (0, 1, 7), (0, 1, 9), (0, 1, 13)]
N23_EXTRA = {
    (0, 1, 2): (5, 7, 10, 11, 14),
    (0, 1, 3): (7, 15, 19, 21, 22),
    (0, 1, 4): (5, 7, 11, 15, 17),
    (0, 1, 5): (6, 14, 15, 20, 22),
    (0, 1, 7): (5, 9, 10, 21, 22),
    (0, 1, 9): (2, 5, 8, 16, 20),
    (0, 1, 13): (3, 5, 7, 9, 12),
}
N23_ROWS = [(t + (x,), t) for t in N23_TRIPLES for x in N23_EXTRA[t]]

# n = 11, affine-square group of order 55
N11_U2 = [(0, 1)]
N11_U3_ROWS = [((0, 1, 2), (0, 1)), ((0, 1, 3), (0, 1)), ((0, 1, 5), (0, 1))]
N11_U4_ROWS = [((0, 1, 2, 3), (0, 1, 2)), ((0, 1, 2, 4), (0, 1, 2)),
               ((0, 1, 3, 5), (0, 1, 3)), ((0, 1, 3, 7), (0, 1, 3)),
               ((0, 1, 5, 4), (0, 1, 5)), ((0, 1, 5, 8), (0, 1, 5))]
# alternative starter sampled straight down to pairs
N11_U4_DIRECT_ROWS = [((0, 1, 2, 3), (0, 1)), ((0, 1, 2, 4), (0, 1)), ((0, 1, 2, 5), (0, 1)),
                      ((0, 1, 2, 6), (0, 1)), ((0, 1, 2, 8), (0, 1)), ((0, 1, 3, 4), (0, 1))]


def digits(word: str) -> list[int]:
    """Decode a representative word; ``a`` and ``b`` stand for 10 and 11."""
    return [int(c, 16) for c in word]


def cycle_row(word: str, n: int) -> tuple[LabeledGraph, LabeledGraph]:
    vs = digits(word)
    return cycle_through(vs, n), path_through(vs[:3], n)


def c4_p3_sampling(group_kind: str, rows=None) -> SamplingMap:
    """Lift of a 4-cycle table at n = 7 through the cyclic or affine group."""
    n = 7
    if rows is None:
        rows = C4_CYCLIC_ROWS if group_kind == "cyclic" else C4_AFFINE_ROWS
    group = make_group(group_kind, n)
    host = complete_graph(n)
    big = orbits(group, enumerate_copies(host, cycle_through(range(4), 4)))
    small = orbits(group, enumerate_copies(host, path_through(range(3), 3)))
    return lift_sampling(group, big, small, [cycle_row(w, n) for w in rows])


def n23_sampling() -> SamplingMap:
    return subset_lift(23, "affine-square", N23_ROWS)


def n11_samplings() -> tuple[SamplingMap, SamplingMap]:
    """(4 -> 3, lambda 2) and (3 -> 2, lambda 3) under the order-55 group."""
    return (subset_lift(11, "affine-square", N11_U4_ROWS),
            subset_lift(11, "affine-square", N11_U3_ROWS))


def family_rows(families: dict[str, list[str]]) -> list[tuple[int, ...]]:
    return [tuple(digits(w)) for fam in families.values() for w in fam]


__all__ = ["C4_AFFINE_ROWS", "C4_CYCLIC_ROWS", "N11_U3_ROWS", "N11_U4_DIRECT_ROWS",
           "N11_U4_ROWS", "N14_FAMILIES", "N17_FAMILIES", "N23_ROWS", "N23_TRIPLES",
           "P3_AFFINE_REPS", "P3_CYCLIC_REPS", "c4_p3_sampling", "cycle_row", "digits",
           "family_rows", "n11_samplings", "n23_sampling", "subsets"]
