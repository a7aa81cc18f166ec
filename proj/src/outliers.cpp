#include "reccs/outliers.hpp"

#include <algorithm>
#include <stdexcept>

#include "reccs/sbm.hpp"

namespace reccs {

namespace {

std::vector<std::vector<Vertex>> block_members(const NetworkParams& p) {
    std::vector<std::vector<Vertex>> members(p.num_blocks());
    for (Vertex v = 0; v < p.num_nodes(); ++v) members[p.membership[v]].push_back(v);
    return members;
}

/// Weighted sampling of `count` distinct entries; once all remaining
/// weights are zero, the rest are drawn uniformly.
std::vector<Vertex> sample_distinct(const std::vector<Vertex>& candidates,
                                    const std::vector<std::uint64_t>& weights,
                                    std::uint64_t count, RngStream& rng) {
    if (count > candidates.size()) {
        throw std::invalid_argument("outlier strategy: more edges requested into a "
                                    "cluster than it has members");
    }
    std::vector<std::pair<Vertex, std::uint64_t>> items;
    items.reserve(candidates.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        items.emplace_back(candidates[i], weights[i]);
        total += weights[i];
    }
    std::vector<Vertex> picked;
    picked.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        if (total == 0) {
            for (auto& it : items) it.second = 1;
            total = items.size();
        }
        std::uint64_t x = rng.uniform(total);
        std::size_t chosen = items.size() - 1;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (x < items[i].second) {
                chosen = i;
                break;
            }
            x -= items[i].second;
        }
        picked.push_back(items[chosen].first);
        total -= items[chosen].second;
        items[chosen] = items.back();
        items.pop_back();
    }
    return picked;
}

bool is_singleton_block(const std::vector<std::vector<Vertex>>& members,
                        std::uint32_t b) {
    return members[b].size() == 1;
}

/// Adds the exact per-(outlier, cluster) edges shared by Strategies 1 and 2:
/// each outlier keeps its g_star edge count into every cluster, with the
/// clustered endpoints sampled degree-proportionally without replacement.
void add_outlier_cluster_edges(const NetworkParams& p,
                               const std::vector<std::vector<Vertex>>& members,
                               MultiGraph& mg, const RngStream& rng) {
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        const bool sr = is_singleton_block(members, r);
        const bool ss = is_singleton_block(members, s);
        if (sr == ss) continue;  // outlier-outlier or cluster-cluster
        const std::uint32_t outlier = sr ? r : s;
        const std::uint32_t cluster = sr ? s : r;
        if (members[cluster].empty()) {
            throw std::invalid_argument("outlier strategy: edges requested into an "
                                        "empty cluster block");
        }
        const NodeId o = p.node_ids[members[outlier].front()];
        std::vector<std::uint64_t> weights;
        weights.reserve(members[cluster].size());
        for (Vertex v : members[cluster]) weights.push_back(p.degrees[v]);
        RngStream sub = rng.substream(r, s);
        for (Vertex v : sample_distinct(members[cluster], weights, count, sub)) {
            mg.add_edge(o, p.node_ids[v]);
        }
    }
}

}  // namespace

NetworkParams extract_outlier_params(const Graph& g_star, const Clustering& c) {
    g_star.for_each_edge([&](Vertex u, Vertex v) {
        if (!c.is_outlier(u) && !c.is_outlier(v)) {
            throw std::invalid_argument(
                "extract_outlier_params: edge between two clustered nodes");
        }
    });

    NetworkParams p;
    const std::uint32_t nblocks = static_cast<std::uint32_t>(c.num_clusters());
    for (std::uint32_t b = 0; b < nblocks; ++b) p.cluster_labels.push_back(c.label(b));
    p.node_ids = g_star.node_ids();
    p.membership.resize(g_star.num_nodes());
    p.degrees.resize(g_star.num_nodes());
    for (Vertex v = 0; v < g_star.num_nodes(); ++v) {
        p.membership[v] = c.cluster_of(v);
        p.degrees[v] = g_star.degree(v);
    }
    p.block_edges = BlockMatrix(nblocks);
    g_star.for_each_edge([&](Vertex u, Vertex v) {
        p.block_edges.add(c.cluster_of(u), c.cluster_of(v), 1);
    });
    p.connectivity.assign(nblocks, 0);
    return p;
}

std::vector<std::uint64_t> outlier_outlier_degrees(const NetworkParams& p) {
    const auto members = block_members(p);
    std::vector<std::uint64_t> deg(p.num_blocks(), 0);
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        if (!is_singleton_block(members, r) || !is_singleton_block(members, s)) continue;
        if (r == s) {
            deg[r] += 2 * count;
        } else {
            deg[r] += count;
            deg[s] += count;
        }
    }
    return deg;
}

NetworkParams collapse_outlier_params(const NetworkParams& p) {
    const auto members = block_members(p);

    NetworkParams out;
    out.node_ids = p.node_ids;
    out.degrees = p.degrees;

    std::string outlier_label = "_outliers_";
    std::vector<std::uint32_t> remap(p.num_blocks());
    out.cluster_labels.push_back(outlier_label);
    for (std::uint32_t b = 0; b < p.num_blocks(); ++b) {
        if (is_singleton_block(members, b)) {
            remap[b] = 0;
        } else {
            remap[b] = static_cast<std::uint32_t>(out.cluster_labels.size());
            out.cluster_labels.push_back(p.cluster_labels[b]);
        }
    }
    out.membership.resize(p.num_nodes());
    for (Vertex v = 0; v < p.num_nodes(); ++v) out.membership[v] = remap[p.membership[v]];

    out.block_edges = BlockMatrix(static_cast<std::uint32_t>(out.cluster_labels.size()));
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        out.block_edges.add(remap[r], remap[s], count);
    }
    out.connectivity.assign(out.cluster_labels.size(), 0);
    return out;
}

Graph strategy1(const NetworkParams& p, const RngStream& rng) {
    const auto members = block_members(p);
    MultiGraph mg(p.node_ids);
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        const bool sr = is_singleton_block(members, r);
        const bool ss = is_singleton_block(members, s);
        if (!sr && !ss) {
            throw std::invalid_argument("strategy1: cluster-to-cluster edges in "
                                        "outlier parameters");
        }
        if (sr && ss) {
            if (r == s) continue;  // self-loop, dropped at simplification anyway
            const NodeId u = p.node_ids[members[r].front()];
            const NodeId v = p.node_ids[members[s].front()];
            for (std::uint64_t e = 0; e < count; ++e) mg.add_edge(u, v);
        }
    }
    add_outlier_cluster_edges(p, members, mg, rng);
    return simplify(mg);
}

Graph strategy2(const NetworkParams& p, const RngStream& rng) {
    const auto members = block_members(p);

    // validate block structure up front
    for (const auto& [r, s, count] : p.block_edges.entries()) {
        if (!is_singleton_block(members, r) && !is_singleton_block(members, s)) {
            throw std::invalid_argument("strategy2: cluster-to-cluster edges in "
                                        "outlier parameters");
        }
    }

    const auto oo_deg = outlier_outlier_degrees(p);
    std::vector<Vertex> outliers;
    std::vector<std::uint64_t> weights;
    std::uint64_t oo_edges = 0;
    for (std::uint32_t b = 0; b < p.num_blocks(); ++b) {
        if (!is_singleton_block(members, b)) continue;
        if (oo_deg[b] > 0) {
            outliers.push_back(members[b].front());
            weights.push_back(oo_deg[b]);
        }
        oo_edges += oo_deg[b];
    }
    oo_edges /= 2;

    MultiGraph mg(p.node_ids);
    if (oo_edges > 0) {
        AliasTable table(weights);
        RngStream sub = rng.substream("outlier-block");
        for (std::uint64_t e = 0; e < oo_edges; ++e) {
            const NodeId u = p.node_ids[outliers[table.sample(sub)]];
            const NodeId v = p.node_ids[outliers[table.sample(sub)]];
            mg.add_edge(u, v);
        }
    }
    add_outlier_cluster_edges(p, members, mg, rng);
    return simplify(mg);
}

Graph strategy3(const NetworkParams& p, const RngStream& rng) {
    return generate_simple_sbm(collapse_outlier_params(p), rng);
}

std::pair<Graph, Clustering> postprocess(const Graph& n_star, const Clustering& c,
                                         const Graph& original) {
    Graph simple = simplify(as_multigraph(n_star));
    Clustering restricted = c.restrict_to(original, simple);
    return {std::move(simple), std::move(restricted)};
}

Graph run_outlier_strategy(OutlierStrategy strategy, const NetworkParams& p,
                           const RngStream& rng) {
    switch (strategy) {
        case OutlierStrategy::s1: return strategy1(p, rng);
        case OutlierStrategy::s2: return strategy2(p, rng);
        case OutlierStrategy::s3: return strategy3(p, rng);
    }
    throw std::logic_error("unknown outlier strategy");
}

}  // namespace reccs
