"""Playground analyses: queries, censuses, frontiers, iterated types and orbits."""

from lambda_playground.lab.queries import (
    GROWTH_MATCHES, growth_sequence, query_typed, type_siblings,
)
from lambda_playground.lab.census import (
    CensusRow, census_frame, sk_density, type_census, useless_counts, x_density,
)
from lambda_playground.lab.frontier import (
    FrontierDecomposition, extract_frontier, frontier_stats, fuse_frontier,
    simplify_sk, well_typed_frontier,
)
from lambda_playground.lab.xtypes import (
    gen_self_typed, inflate_b2b, inflate_t2t, iter_stats, iter_type,
)
from lambda_playground.lab.orbits import eval_or_next, orbit, orbit_frame
