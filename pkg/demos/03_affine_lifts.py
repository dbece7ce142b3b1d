"""Lifting small tables through the group x -> a*x + b (a a nonzero square).

The group is semiregular on 3- and 4-subsets of Z_23, so a table with one
row per orbit determines a sampling of all 8855 four-subsets.
"""
from __future__ import annotations

from design_sampler.constructions import LiftError, subsets
from design_sampler.groups import make_group, orbits
from design_sampler.sampler import compose, verify_sampling
from design_sampler.tables import C4_AFFINE_ROWS, c4_p3_sampling, n11_samplings, n23_sampling

g = make_group("affine-square", 23)
print("group order:", g.order)
for k in (2, 3, 4):
    dec = orbits(g, subsets(23, k))
    stabs = sorted({o.stabilizer_order for o in dec.orbits})
    print(f"  {k}-subsets: {len(dec.orbits)} orbits, stabilizer orders {stabs}")

sm = n23_sampling()
print("4 -> 3 on Z_23:", verify_sampling(sm).describe())

# Two regular steps compose; redundancies multiply.
four, three = n11_samplings()
both = compose(four, three)
print("Z_11: 4 -> 3", verify_sampling(four).describe(),
      "then 3 -> 2", verify_sampling(three).describe(),
      "gives", verify_sampling(both).describe())

# Rows in one orbit cannot be chosen independently.
try:
    c4_p3_sampling("affine-square", C4_AFFINE_ROWS + ["0152"])
except LiftError as exc:
    print("lift refused:", exc)
    print("forced path:", exc.forced.edges)
