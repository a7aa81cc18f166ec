#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reccs {

/// External node label as it appears in edge-list files.
using NodeId = std::int64_t;

/// Dense internal vertex index, 0..n-1, ordered by ascending NodeId.
using Vertex = std::uint32_t;

class MultiGraph;

/// Immutable simple undirected graph. Vertices are compacted to
/// 0..n-1 in ascending order of their external ids; adjacency lists
/// are sorted so iteration order (hence RNG consumption downstream)
/// is deterministic. Isolated vertices are representable.
class Graph {
public:
    Graph() = default;

    /// Builds from explicit nodes plus edges. Endpoints not listed in
    /// `nodes` are added. Self-loops are dropped, parallels collapsed.
    static Graph from_edges(std::vector<NodeId> nodes,
                            const std::vector<std::pair<NodeId, NodeId>>& edges);

    std::size_t num_nodes() const { return labels_.size(); }
    std::size_t num_edges() const { return edge_count_; }

    NodeId node_id(Vertex v) const { return labels_[v]; }
    const std::vector<NodeId>& node_ids() const { return labels_; }

    std::optional<Vertex> find_vertex(NodeId id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Throws std::invalid_argument on unknown id.
    Vertex vertex_of(NodeId id) const;

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Visits each edge once with u < v (internal indices).
    template <typename F>
    void for_each_edge(F&& f) const {
        for (Vertex u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                if (v > u) f(u, v);
            }
        }
    }

    /// Edge list as external-id pairs, min id first, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

    bool operator==(const Graph& other) const;

private:
    friend Graph induced_subgraph(const Graph&, std::span<const Vertex>);
    friend Graph simplify(const MultiGraph&);

    std::vector<NodeId> labels_;
    std::unordered_map<NodeId, Vertex> index_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;

    void finish_build();  // sorts adjacency, counts edges
};

/// Undirected multigraph: raw SBM sample before simplification.
/// Self-loops and parallel edges are allowed; edge order is the
/// construction order.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {}

    void add_edge(NodeId u, NodeId v) { edges_.emplace_back(u, v); }

    const std::vector<NodeId>& node_ids() const { return nodes_; }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    std::size_t num_edges() const { return edges_.size(); }

private:
    std::vector<NodeId> nodes_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Drops self-loops, collapses parallel edges. Node set is preserved.
Graph simplify(const MultiGraph& mg);

MultiGraph as_multigraph(const Graph& g);

/// Subgraph on the given vertices (isolated ones retained). The result's
/// external ids are the originals, so vertex indices do not carry over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Same, keyed by external node ids; unknown ids are input errors.
Graph induced_subgraph_by_id(const Graph& g, std::span<const NodeId> ids);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Node partition into clusters over a fixed graph. Clusters are indexed
/// densely; original labels are kept for output. Singleton clusters mark
/// outliers.
class Clustering {
public:
    using ClusterId = std::uint32_t;

    /// Assignment by external node id; nodes of `g` absent from the map
    /// become fresh singleton clusters. Unknown node ids and duplicate
    /// assignments are input errors (duplicates are caught at file parse).
    static Clustering from_assignment(const Graph& g,
                                      const std::map<NodeId, std::string>& assignment);

    std::size_t num_clusters() const { return members_.size(); }
    ClusterId cluster_of(Vertex v) const { return assignment_[v]; }
    const std::vector<Vertex>& members(ClusterId c) const { return members_[c]; }
    const std::string& label(ClusterId c) const { return labels_[c]; }

    bool is_singleton(ClusterId c) const { return members_[c].size() == 1; }
    bool is_outlier(Vertex v) const { return is_singleton(assignment_[v]); }

    std::vector<ClusterId> non_singleton_clusters() const;
    std::size_t num_outliers() const;

    /// Clustering over a node-induced subgraph: keeps labels, re-derives
    /// membership against the subgraph's vertex indexing.
    Clustering restrict_to(const Graph& original, const Graph& sub) const;

private:
    std::vector<std::string> labels_;
    std::vector<ClusterId> assignment_;        // per vertex
    std::vector<std::vector<Vertex>> members_; // per cluster, sorted
};

}  // namespace reccs
