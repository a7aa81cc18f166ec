#pragma once

#include "reccs/graph.hpp"
#include "reccs/params.hpp"
#include "reccs/rng.hpp"

namespace reccs {

/// Degree-corrected SBM sample. For every unordered block pair (r, s)
/// exactly B[r][s] edges are placed; each endpoint is drawn from its
/// block's members with probability proportional to target degree.
/// Within-block pairs may produce self-loops and parallel edges.
/// Each block pair draws from its own (seed, r, s) sub-stream, so
/// output is independent of sampling order.
MultiGraph sample_sbm(const NetworkParams& p, const RngStream& rng);

/// sample_sbm followed by simplification; the edge deficit relative to
/// sum(B) is what RECCS later repairs.
Graph generate_simple_sbm(const NetworkParams& p, const RngStream& rng);

}  // namespace reccs
