#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reccs/graph.hpp"

namespace reccs {

/// A witness bipartition: `value` edges cross (side_a, side_b).
struct CutResult {
    std::uint64_t value = 0;
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
};

/// Global minimum edge cut via Stoer-Wagner. Requires a connected graph
/// with at least 2 vertices; deterministic for a given graph.
CutResult global_min_cut(const Graph& g);

struct MinCutCheck {
    bool at_least = false;
    std::optional<CutResult> witness;  // a cut of value < k, when !at_least
};

/// True iff the global min cut is >= k. May stop early as soon as any
/// scanned cut certifies the answer either way.
MinCutCheck min_cut_at_least(const Graph& g, std::uint64_t k);

/// Exact minimum by enumerating all bipartitions; test oracle, |V| <= 20.
CutResult brute_force_min_cut(const Graph& g);

/// Crossing-edge count of a bipartition given by side-a membership flags.
std::uint64_t count_crossing_edges(const Graph& g, const std::vector<bool>& in_a);

}  // namespace reccs
