"""Samplings and embeddings between complete graph designs."""
from .containment import (ContainmentGraph, NotBiregularError, ReplicatedGraph,
                          biregular_degrees, build_containment, replicate)
from .constructions import (LiftError, TripleStarter, equivariance_violations, lift_sampling,
                            triple_sampling, triple_starter)
from .designs import (BlockSet, PatternFamily, closed_form_count, complete_design,
                      required_redundancy, verify_design)
from .graphs import (LabeledGraph, canonical_key, enumerate_copies, graph_automorphisms,
                     is_subgraph)
from .groups import OrbitDecomposition, PermutationGroup, is_semiregular, make_group, orbits
from .matching import bipartite_edge_coloring, full_matching
from .nesting import (CycleSystem, NestingAssignment, WheelDesign, nesting_from_sampling,
                      search_nesting, verify_nesting, wheels_from_nesting)
from .sampler import (EmbeddingMap, NoSamplingError, RedundancyProfile, SamplingError,
                      SamplingMap, compose, floor_sampling, regular_embedding,
                      regular_sampling, semiregular_sampling, verify_sampling)

__version__ = "0.1.0"
