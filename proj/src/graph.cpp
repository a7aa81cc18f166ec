#include "reccs/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace reccs {

void Graph::finish_build() {
    edge_count_ = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

Graph Graph::from_edges(std::vector<NodeId> nodes,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
    for (const auto& [u, v] : edges) {
        nodes.push_back(u);
        nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (NodeId id : nodes) {
        if (id < 0) throw std::invalid_argument("Graph: node ids must be non-negative");
    }

    Graph g;
    g.labels_ = std::move(nodes);
    g.index_.reserve(g.labels_.size() * 2);
    for (Vertex v = 0; v < g.labels_.size(); ++v) g.index_[g.labels_[v]] = v;
    g.adj_.resize(g.labels_.size());
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        const Vertex u = g.index_.at(a);
        const Vertex v = g.index_.at(b);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.finish_build();
    return g;
}

Vertex Graph::vertex_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::invalid_argument("Graph: unknown node id " + std::to_string(id));
    }
    return it->second;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for_each_edge([&](Vertex u, Vertex v) {
        NodeId a = labels_[u];
        NodeId b = labels_[v];
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::operator==(const Graph& other) const {
    // labels ascending in both, so adjacency indices line up directly
    return labels_ == other.labels_ && adj_ == other.adj_;
}

Graph simplify(const MultiGraph& mg) {
    return Graph::from_edges(mg.node_ids(), mg.edges());
}

MultiGraph as_multigraph(const Graph& g) {
    MultiGraph mg(g.node_ids());
    g.for_each_edge([&](Vertex u, Vertex v) { mg.add_edge(g.node_id(u), g.node_id(v)); });
    return mg;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<NodeId> ids;
    ids.reserve(vertices.size());
    for (Vertex v : vertices) ids.push_back(g.node_id(v));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Graph sub;
    sub.labels_ = ids;
    sub.index_.reserve(ids.size() * 2);
    for (Vertex v = 0; v < ids.size(); ++v) sub.index_[ids[v]] = v;
    sub.adj_.resize(ids.size());

    for (Vertex sv = 0; sv < ids.size(); ++sv) {
        const Vertex gv = g.vertex_of(ids[sv]);
        for (Vertex gw : g.neighbors(gv)) {
            auto it = sub.index_.find(g.node_id(gw));
            if (it != sub.index_.end()) sub.adj_[sv].push_back(it->second);
        }
    }
    sub.finish_build();
    return sub;
}

Graph induced_subgraph_by_id(const Graph& g, std::span<const NodeId> ids) {
    std::vector<Vertex> vs;
    vs.reserve(ids.size());
    for (NodeId id : ids) vs.push_back(g.vertex_of(id));
    return induced_subgraph(g, vs);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    // outer scan is by ascending vertex, so components are already ordered
    // by smallest member
    return components;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

Clustering Clustering::from_assignment(const Graph& g,
                                       const std::map<NodeId, std::string>& assignment) {
    for (const auto& [id, label] : assignment) {
        (void)g.vertex_of(id);  // throws on unknown node
        if (label.empty()) {
            throw std::invalid_argument("Clustering: empty cluster label for node " +
                                        std::to_string(id));
        }
    }

    Clustering c;
    c.assignment_.assign(g.num_nodes(), 0);

    // cluster index order: named clusters by label, then generated singletons
    std::map<std::string, ClusterId> by_label;
    for (const auto& [id, label] : assignment) {
        if (by_label.emplace(label, 0).second) continue;
    }
    ClusterId next = 0;
    for (auto& [label, cid] : by_label) {
        cid = next++;
        c.labels_.push_back(label);
    }
    c.members_.resize(next);

    std::vector<Vertex> unassigned;
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        auto it = assignment.find(g.node_id(v));
        if (it == assignment.end()) {
            unassigned.push_back(v);
        } else {
            const ClusterId cid = by_label.at(it->second);
            c.assignment_[v] = cid;
            c.members_[cid].push_back(v);
        }
    }
    for (Vertex v : unassigned) {
        std::string label = "_singleton_" + std::to_string(g.node_id(v));
        while (by_label.count(label)) label += "_";
        const ClusterId cid = static_cast<ClusterId>(c.labels_.size());
        c.labels_.push_back(label);
        c.members_.push_back({v});
        c.assignment_[v] = cid;
    }
    return c;
}

std::vector<Clustering::ClusterId> Clustering::non_singleton_clusters() const {
    std::vector<ClusterId> out;
    for (ClusterId c = 0; c < members_.size(); ++c) {
        if (members_[c].size() > 1) out.push_back(c);
    }
    return out;
}

std::size_t Clustering::num_outliers() const {
    std::size_t n = 0;
    for (const auto& m : members_) {
        if (m.size() == 1) ++n;
    }
    return n;
}

Clustering Clustering::restrict_to(const Graph& original, const Graph& sub) const {
    std::map<NodeId, std::string> assignment;
    for (NodeId id : sub.node_ids()) {
        const Vertex v = original.vertex_of(id);
        assignment[id] = labels_[assignment_[v]];
    }
    return from_assignment(sub, assignment);
}

}  // namespace reccs
