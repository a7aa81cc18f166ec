#pragma once

#include <cstdint>
#include <vector>

#include "reccs/graph.hpp"
#include "reccs/params.hpp"
#include "reccs/rng.hpp"

namespace reccs {

enum class Phase2Variant { v1, v2 };

struct ReccsConfig {
    Phase2Variant phase2_variant = Phase2Variant::v1;
    std::uint64_t master_seed = 0;
    std::uint32_t max_stage3_iterations = 10000;
};

/// Mutable working state threaded through the RECCS stages. Vertices are
/// the indices of the starting network n_c; edges are only ever added.
struct ReccsState {
    std::vector<NodeId> labels;                 // vertex -> external id
    std::vector<std::vector<Vertex>> adj;       // sorted neighbor lists
    std::size_t edge_count = 0;
    std::vector<std::int64_t> residual;         // target degree - current degree
    std::vector<Clustering::ClusterId> cluster; // per vertex
    std::vector<std::vector<Vertex>> members;   // per cluster, sorted
    std::vector<std::uint64_t> k;               // effective connectivity target
    std::uint64_t inter_edges = 0;              // current inter-cluster edge count
    std::uint64_t inter_target = 0;             // sum of off-diagonal B

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    std::size_t degree(Vertex v) const { return adj[v].size(); }
    bool available(Vertex v) const { return residual[v] > 0; }

    Graph current_graph() const;
    Graph cluster_subgraph(Clustering::ClusterId c) const;
};

/// Binds n_c, its clustering and the target parameters. k(C) = 0 targets
/// are promoted to 1 so every output cluster is at least connected;
/// infeasible targets (k > |C|-1) are parameter errors.
ReccsState make_reccs_state(const Graph& n_c, const Clustering& c,
                            const NetworkParams& p);

/// Stage 1: every node gets at least k(C) neighbors inside its cluster.
void phase1_stage1_min_degree(ReccsState& st, RngStream& rng);

/// Stage 2: connect each cluster by wiring min(k(C), feasible) edges from
/// every non-largest component to the largest one.
void phase1_stage2_connect(ReccsState& st, RngStream& rng);

/// Stage 3: per cluster, iterate min-cut computations, adding edges
/// across the witness partition until the cut reaches k(C).
void phase1_stage3_connectivity(ReccsState& st, RngStream& rng,
                                std::uint32_t max_iter);

/// Phase 2 v1: pair up nodes with available degree (any clusters) until
/// no eligible non-adjacent pair remains.
void phase2_v1(ReccsState& st, RngStream& rng);

/// Phase 2 v2: like v1, but inter-cluster additions stop once the
/// inter-cluster edge count reaches the block-matrix target.
void phase2_v2(ReccsState& st, RngStream& rng);

/// Full RECCS: phase 1 stages 1-3, then the configured phase 2 variant.
/// Output is a supergraph of n_c meeting every cluster's k(C).
Graph run_reccs(const Graph& n_c, const Clustering& c, const NetworkParams& p,
                const ReccsConfig& cfg);

}  // namespace reccs
