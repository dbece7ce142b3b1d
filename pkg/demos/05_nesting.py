"""Nesting the Steiner triple system {i, i+1, i+3} mod 7.

Each triangle gets a hub off the triangle; the three hub-to-triangle edges
must together cover K_7 once.  Triangle plus star is a wheel, and the wheels
cover K_7 twice.
"""
from __future__ import annotations

from design_sampler.nesting import (nesting_from_sampling, search_nesting, sts7,
                                    verify_nesting, wheels_from_nesting)
from design_sampler.nesting import NestingAssignment

cs = sts7()
for c in range(7):
    f = NestingAssignment(tuple((i + c) % 7 for i in range(7)))
    print(f"hub offset {c}: {'nesting' if verify_nesting(cs, f) else '-'}")

res = search_nesting(cs)
print("search:", res.status, "after", res.nodes, "nodes, hubs", res.assignment.hubs)

wd, to_cycles, to_stars = wheels_from_nesting(cs, res.assignment)
print("wheel design covers K7 twice:", bool(wd.verify()))
back = nesting_from_sampling(wd, to_stars)
print("round trip recovers the nesting:", back == (cs, res.assignment))
