"""When the counts do not divide: a (1,2)-semiregular sampling.

A full matching of the containment graph picks one triangle for each edge;
a colour class of the leftover triangles' containment graph then hands each
leftover a distinct edge.
"""
from __future__ import annotations

from design_sampler.containment import biregular_degrees, build_containment
from design_sampler.designs import complete_design
from design_sampler.sampler import floor_sampling, semiregular_sampling, verify_sampling

for n, big, small in [(6, "K3", "K2"), (8, "K4", "K3")]:
    cg = build_containment(complete_design(n, big), complete_design(n, small))
    d, e = biregular_degrees(cg)
    sm = semiregular_sampling(n, big, small)
    prof = verify_sampling(sm)
    print(f"n={n} {big}->{small}: {cg.n_left} -> {cg.n_right}, degrees ({d},{e}), "
          f"{prof.describe()} {prof.histogram}, colour {sm.meta['color']}")

# The floor construction only promises at least one preimage each.
print("floor K3->K2 on K7:", verify_sampling(floor_sampling(7, "K3", "K2")).histogram)
