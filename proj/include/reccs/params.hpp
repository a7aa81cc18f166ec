#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "reccs/graph.hpp"

namespace reccs {

/// Symmetric sparse matrix of block-pair edge counts. B[r][r] counts
/// edges inside block r; B[r][s] counts edges between r and s.
class BlockMatrix {
public:
    BlockMatrix() = default;
    explicit BlockMatrix(std::uint32_t num_blocks) : n_(num_blocks) {}

    std::uint32_t num_blocks() const { return n_; }

    void add(std::uint32_t r, std::uint32_t s, std::uint64_t count);
    void set(std::uint32_t r, std::uint32_t s, std::uint64_t count);
    std::uint64_t get(std::uint32_t r, std::uint32_t s) const;

    /// Non-zero (r, s, count) entries with r <= s, sorted by (r, s).
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> entries() const;

    std::uint64_t total() const;
    std::uint64_t total_inter() const;  // off-diagonal only

    bool operator==(const BlockMatrix& other) const;

private:
    static std::uint64_t key(std::uint32_t r, std::uint32_t s) {
        if (r > s) std::swap(r, s);
        return (static_cast<std::uint64_t>(r) << 32) | s;
    }
    std::uint32_t n_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

/// Full parameter set extracted from a clustered network: the SBM inputs
/// (membership, degrees, block edge counts) plus the per-cluster edge
/// connectivity requirement k(C).
struct NetworkParams {
    std::vector<std::string> cluster_labels;       // block index -> label
    std::vector<NodeId> node_ids;                  // ascending
    std::vector<std::uint32_t> membership;         // per node, block index
    std::vector<std::uint64_t> degrees;            // per node, target degree
    BlockMatrix block_edges;
    std::vector<std::uint64_t> connectivity;       // per block; 0 = undefined/disconnected

    std::size_t num_nodes() const { return node_ids.size(); }
    std::size_t num_blocks() const { return cluster_labels.size(); }
    std::uint64_t degree_sum() const;

    /// Degree-sum identity: sum(degrees) == 2 * total block edges.
    bool consistent() const { return degree_sum() == 2 * block_edges.total(); }

    bool operator==(const NetworkParams& other) const;
};

struct ExtractOptions {
    unsigned threads = 1;  // per-cluster min-cut extraction parallelism
};

/// Parameters of (g, c): exact counts plus per-cluster global min cut
/// (0 when the induced subgraph is disconnected or the cluster is a
/// singleton).
NetworkParams extract_params(const Graph& g, const Clustering& c,
                             const ExtractOptions& opts = {});

/// Splits g into the subgraph induced by clustered (non-outlier) nodes
/// and the graph of edges with at least one outlier endpoint. The two
/// edge sets partition E(g); g_star keeps all of g's nodes.
std::pair<Graph, Graph> split_real_network(const Graph& g, const Clustering& c);

}  // namespace reccs
