#include "reccs/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "reccs/mincut.hpp"

namespace reccs {

void BlockMatrix::add(std::uint32_t r, std::uint32_t s, std::uint64_t count) {
    if (r >= n_ || s >= n_) throw std::invalid_argument("BlockMatrix: block out of range");
    if (count == 0) return;
    counts_[key(r, s)] += count;
}

void BlockMatrix::set(std::uint32_t r, std::uint32_t s, std::uint64_t count) {
    if (r >= n_ || s >= n_) throw std::invalid_argument("BlockMatrix: block out of range");
    if (count == 0) {
        counts_.erase(key(r, s));
    } else {
        counts_[key(r, s)] = count;
    }
}

std::uint64_t BlockMatrix::get(std::uint32_t r, std::uint32_t s) const {
    auto it = counts_.find(key(r, s));
    return it == counts_.end() ? 0 : it->second;
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>>
BlockMatrix::entries() const {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> out;
    out.reserve(counts_.size());
    for (const auto& [k, c] : counts_) {
        out.emplace_back(static_cast<std::uint32_t>(k >> 32),
                         static_cast<std::uint32_t>(k & 0xffffffffu), c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t BlockMatrix::total() const {
    std::uint64_t t = 0;
    for (const auto& [k, c] : counts_) t += c;
    return t;
}

std::uint64_t BlockMatrix::total_inter() const {
    std::uint64_t t = 0;
    for (const auto& [k, c] : counts_) {
        if ((k >> 32) != (k & 0xffffffffu)) t += c;
    }
    return t;
}

bool BlockMatrix::operator==(const BlockMatrix& other) const {
    return n_ == other.n_ && entries() == other.entries();
}

std::uint64_t NetworkParams::degree_sum() const {
    std::uint64_t s = 0;
    for (auto d : degrees) s += d;
    return s;
}

bool NetworkParams::operator==(const NetworkParams& other) const {
    return cluster_labels == other.cluster_labels && node_ids == other.node_ids &&
           membership == other.membership && degrees == other.degrees &&
           block_edges == other.block_edges && connectivity == other.connectivity;
}

NetworkParams extract_params(const Graph& g, const Clustering& c,
                             const ExtractOptions& opts) {
    NetworkParams p;
    const std::uint32_t nblocks = static_cast<std::uint32_t>(c.num_clusters());
    p.cluster_labels.reserve(nblocks);
    for (std::uint32_t b = 0; b < nblocks; ++b) p.cluster_labels.push_back(c.label(b));

    p.node_ids = g.node_ids();
    p.membership.resize(g.num_nodes());
    p.degrees.resize(g.num_nodes());
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        p.membership[v] = c.cluster_of(v);
        p.degrees[v] = g.degree(v);
    }

    p.block_edges = BlockMatrix(nblocks);
    g.for_each_edge([&](Vertex u, Vertex v) {
        p.block_edges.add(c.cluster_of(u), c.cluster_of(v), 1);
    });

    p.connectivity.assign(nblocks, 0);
    auto compute_block = [&](std::uint32_t b) {
        if (c.members(b).size() < 2) return;  // singleton: k undefined -> 0
        const Graph sub = induced_subgraph(g, c.members(b));
        if (!is_connected(sub)) return;       // disconnected: 0
        p.connectivity[b] = global_min_cut(sub).value;
    };

    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || nblocks < 2) {
        for (std::uint32_t b = 0; b < nblocks; ++b) compute_block(b);
    } else {
        // static block striping: each slot is written by exactly one worker,
        // so the merged result is independent of scheduling
        std::vector<std::thread> pool;
        const unsigned used = std::min<unsigned>(threads, nblocks);
        pool.reserve(used);
        for (unsigned t = 0; t < used; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint32_t b = t; b < nblocks; b += used) compute_block(b);
            });
        }
        for (auto& th : pool) th.join();
    }
    return p;
}

std::pair<Graph, Graph> split_real_network(const Graph& g, const Clustering& c) {
    std::vector<NodeId> clustered_ids;
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        if (!c.is_outlier(v)) clustered_ids.push_back(g.node_id(v));
    }
    Graph g_c = induced_subgraph_by_id(g, clustered_ids);

    std::vector<std::pair<NodeId, NodeId>> star_edges;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (c.is_outlier(u) || c.is_outlier(v)) {
            star_edges.emplace_back(g.node_id(u), g.node_id(v));
        }
    });
    Graph g_star = Graph::from_edges(g.node_ids(), star_edges);
    return {std::move(g_c), std::move(g_star)};
}

}  // namespace reccs
