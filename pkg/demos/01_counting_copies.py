"""Counting copies of small graphs in K_n and deciding when a regular
sampling can exist."""
from __future__ import annotations

from design_sampler import complete_design, required_redundancy
from design_sampler.designs import closed_form_count
from design_sampler.sampler import NoSamplingError, regular_sampling, verify_sampling

# Enumerate every 4-cycle and every 3-vertex path inside K_7.
cycles = complete_design(7, "C4")
paths = complete_design(7, "P3")
print("4-cycles in K7:", len(cycles.blocks), "closed form", closed_form_count(7, "C4"))
print("3-paths  in K7:", len(paths.blocks), "closed form", closed_form_count(7, "P3"))

# Equal counts: a bijection sending each cycle to a path inside it.
sm = regular_sampling(7, "C4", "P3")
print("C4 -> P3 on K7:", verify_sampling(sm).describe())
first = sm.source.blocks[0]
print("  e.g.", first.edges, "->", sm.image(0).edges)

# Triangles to edges: 364 = 4 * 91 on K_14, but 20 = 1 * 15 + 5 on K_6.
for n in (14, 6):
    red = required_redundancy(n, "K3", "K2")
    print(f"n={n}: {red}")
    try:
        print("  ", verify_sampling(regular_sampling(n, "K3", "K2")).describe())
    except NoSamplingError:
        print("   no regular sampling")
