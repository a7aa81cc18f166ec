#pragma once

#include "reccs/graph.hpp"
#include "reccs/params.hpp"
#include "reccs/rng.hpp"

namespace reccs {

enum class OutlierStrategy { s1, s2, s3 };

/// Parameters of the outlier subnetwork g_star: every outlier is its own
/// block, non-singleton clusters stay blocks, degrees are g_star degrees.
/// Any edge between two clustered nodes is a contract error.
NetworkParams extract_outlier_params(const Graph& g_star, const Clustering& c);

/// Per-outlier degree restricted to outlier-outlier edges, keyed by block
/// index of `p` (zero for clustered blocks).
std::vector<std::uint64_t> outlier_outlier_degrees(const NetworkParams& p);

/// Collapses all singleton (outlier) blocks of `p` into one block, summing
/// edge counts; block 0 is the outlier block. This is Strategy 3's SBM input.
NetworkParams collapse_outlier_params(const NetworkParams& p);

/// Strategy 1: outlier-outlier edges reproduced exactly; each outlier's
/// per-cluster edge counts preserved exactly, with the clustered endpoints
/// drawn degree-proportionally without replacement.
Graph strategy1(const NetworkParams& p, const RngStream& rng);

/// Strategy 2: outlier-outlier edges resampled as a one-block
/// degree-corrected model from the outlier-restricted degree sequence;
/// outlier-to-cluster edges handled exactly as Strategy 1.
Graph strategy2(const NetworkParams& p, const RngStream& rng);

/// Strategy 3: single SBM sample over {outlier block} + clusters with the
/// block totals from g_star; only block totals are preserved.
Graph strategy3(const NetworkParams& p, const RngStream& rng);

/// Simplifies and dissolves any artificial outlier grouping back into
/// singleton clusters (the labels of `c` are kept as-is).
std::pair<Graph, Clustering> postprocess(const Graph& n_star, const Clustering& c,
                                         const Graph& original);

Graph run_outlier_strategy(OutlierStrategy strategy, const NetworkParams& p,
                           const RngStream& rng);

}  // namespace reccs
