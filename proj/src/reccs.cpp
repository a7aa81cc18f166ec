#include "reccs/reccs.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "reccs/mincut.hpp"

namespace reccs {

bool ReccsState::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void ReccsState::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::logic_error("ReccsState: self-loop");
    if (has_edge(u, v)) throw std::logic_error("ReccsState: parallel edge");
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    ++edge_count;
    --residual[u];
    --residual[v];
    if (cluster[u] != cluster[v]) ++inter_edges;
}

Graph ReccsState::current_graph() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(edge_count);
    for (Vertex u = 0; u < adj.size(); ++u) {
        for (Vertex v : adj[u]) {
            if (v > u) edges.emplace_back(labels[u], labels[v]);
        }
    }
    return Graph::from_edges(labels, edges);
}

Graph ReccsState::cluster_subgraph(Clustering::ClusterId c) const {
    std::vector<NodeId> ids;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (Vertex u : members[c]) {
        ids.push_back(labels[u]);
        for (Vertex v : adj[u]) {
            if (v > u && cluster[v] == c) edges.emplace_back(labels[u], labels[v]);
        }
    }
    return Graph::from_edges(std::move(ids), edges);
}

namespace {

struct StateIndex {
    std::unordered_map<NodeId, Vertex> map;
    explicit StateIndex(const ReccsState& st) {
        map.reserve(st.labels.size() * 2);
        for (Vertex v = 0; v < st.labels.size(); ++v) map[st.labels[v]] = v;
    }
    Vertex at(NodeId id) const { return map.at(id); }
};

/// Uniform pick among cluster members that are non-adjacent to v, with
/// available-degree members preferred. Empty optional when none exists.
std::optional<Vertex> pick_cluster_partner(const ReccsState& st, RngStream& rng,
                                           Vertex v, const std::vector<Vertex>& pool) {
    std::vector<Vertex> avail, any;
    for (Vertex w : pool) {
        if (w == v || st.has_edge(v, w)) continue;
        any.push_back(w);
        if (st.available(w)) avail.push_back(w);
    }
    const auto& candidates = avail.empty() ? any : avail;
    if (candidates.empty()) return std::nullopt;
    return candidates[rng.uniform(candidates.size())];
}

/// Uniform pick from `side`, preferring available-degree nodes.
Vertex pick_side_node(const ReccsState& st, RngStream& rng,
                      const std::vector<Vertex>& side) {
    std::vector<Vertex> avail;
    for (Vertex w : side) {
        if (st.available(w)) avail.push_back(w);
    }
    const auto& candidates = avail.empty() ? side : avail;
    return candidates[rng.uniform(candidates.size())];
}

/// Adds `want` distinct edges between two disjoint vertex sets, preferring
/// available-degree endpoints; falls back to enumerating the remaining
/// non-adjacent cross pairs. Returns the number actually added.
std::uint64_t add_cross_edges(ReccsState& st, RngStream& rng,
                              const std::vector<Vertex>& side_a,
                              const std::vector<Vertex>& side_b,
                              std::uint64_t want) {
    std::uint64_t added = 0;
    std::uint64_t misses = 0;
    const std::uint64_t miss_cap = 8 * (want + 4);
    while (added < want && misses < miss_cap) {
        const Vertex a = pick_side_node(st, rng, side_a);
        const Vertex b = pick_side_node(st, rng, side_b);
        if (st.has_edge(a, b)) {
            ++misses;
            continue;
        }
        st.add_edge(a, b);
        ++added;
    }
    if (added < want) {
        std::vector<std::pair<Vertex, Vertex>> free_pairs;
        for (Vertex a : side_a) {
            for (Vertex b : side_b) {
                if (!st.has_edge(a, b)) free_pairs.emplace_back(a, b);
            }
        }
        rng.shuffle(free_pairs);
        for (const auto& [a, b] : free_pairs) {
            if (added >= want) break;
            if (st.has_edge(a, b)) continue;
            st.add_edge(a, b);
            ++added;
        }
    }
    return added;
}

std::vector<std::vector<Vertex>> cluster_components(const ReccsState& st,
                                                    Clustering::ClusterId c) {
    const auto& mem = st.members[c];
    std::unordered_map<Vertex, bool> seen;
    seen.reserve(mem.size() * 2);
    for (Vertex v : mem) seen[v] = false;

    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s : mem) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : st.adj[u]) {
                auto it = seen.find(v);
                if (it != seen.end() && !it->second) {
                    it->second = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

ReccsState make_reccs_state(const Graph& n_c, const Clustering& c,
                            const NetworkParams& p) {
    ReccsState st;
    st.labels = n_c.node_ids();
    st.adj.resize(n_c.num_nodes());
    for (Vertex v = 0; v < n_c.num_nodes(); ++v) {
        auto nbrs = n_c.neighbors(v);
        st.adj[v].assign(nbrs.begin(), nbrs.end());
    }
    st.edge_count = n_c.num_edges();

    std::unordered_map<NodeId, Vertex> param_index;
    param_index.reserve(p.num_nodes() * 2);
    for (Vertex i = 0; i < p.num_nodes(); ++i) param_index[p.node_ids[i]] = i;

    st.residual.resize(n_c.num_nodes());
    for (Vertex v = 0; v < n_c.num_nodes(); ++v) {
        auto it = param_index.find(n_c.node_id(v));
        if (it == param_index.end()) {
            throw std::invalid_argument("run_reccs: node " +
                                        std::to_string(n_c.node_id(v)) +
                                        " has no target degree in params");
        }
        st.residual[v] = static_cast<std::int64_t>(p.degrees[it->second]) -
                         static_cast<std::int64_t>(n_c.degree(v));
    }

    st.cluster.resize(n_c.num_nodes());
    st.members.resize(c.num_clusters());
    for (Vertex v = 0; v < n_c.num_nodes(); ++v) {
        st.cluster[v] = c.cluster_of(v);
        st.members[c.cluster_of(v)].push_back(v);
    }
    for (auto& m : st.members) std::sort(m.begin(), m.end());

    std::unordered_map<std::string, std::uint32_t> block_of;
    for (std::uint32_t b = 0; b < p.num_blocks(); ++b) block_of[p.cluster_labels[b]] = b;

    st.k.assign(c.num_clusters(), 0);
    for (Clustering::ClusterId cid = 0; cid < c.num_clusters(); ++cid) {
        const std::size_t size = st.members[cid].size();
        if (size < 2) continue;  // singleton: nothing to enforce
        auto it = block_of.find(c.label(cid));
        std::uint64_t k = it == block_of.end() ? 0 : p.connectivity[it->second];
        if (k == 0) k = 1;  // connectedness floor
        if (k > size - 1) {
            throw std::invalid_argument("run_reccs: cluster '" + c.label(cid) +
                                        "' demands k=" + std::to_string(k) +
                                        " > |C|-1=" + std::to_string(size - 1));
        }
        st.k[cid] = k;
    }

    st.inter_target = p.block_edges.total_inter();
    st.inter_edges = 0;
    for (Vertex u = 0; u < st.adj.size(); ++u) {
        for (Vertex v : st.adj[u]) {
            if (v > u && st.cluster[u] != st.cluster[v]) ++st.inter_edges;
        }
    }
    return st;
}

void phase1_stage1_min_degree(ReccsState& st, RngStream& rng) {
    for (Clustering::ClusterId cid = 0; cid < st.members.size(); ++cid) {
        const std::uint64_t k = st.k[cid];
        if (k == 0) continue;
        const auto& mem = st.members[cid];
        RngStream crng = rng.substream(cid);

        std::unordered_map<Vertex, std::uint64_t> intra;
        intra.reserve(mem.size() * 2);
        for (Vertex v : mem) {
            std::uint64_t d = 0;
            for (Vertex w : st.adj[v]) {
                if (st.cluster[w] == cid) ++d;
            }
            intra[v] = d;
        }
        for (Vertex v : mem) {
            while (intra[v] < k) {
                auto partner = pick_cluster_partner(st, crng, v, mem);
                if (!partner) {
                    throw std::logic_error("stage 1: no partner despite k <= |C|-1");
                }
                st.add_edge(v, *partner);
                ++intra[v];
                ++intra[*partner];
            }
        }
    }
}

void phase1_stage2_connect(ReccsState& st, RngStream& rng) {
    for (Clustering::ClusterId cid = 0; cid < st.members.size(); ++cid) {
        const std::uint64_t k = st.k[cid];
        if (k == 0) continue;
        auto comps = cluster_components(st, cid);
        if (comps.size() < 2) continue;
        RngStream crng = rng.substream(cid);

        std::size_t largest = 0;
        for (std::size_t i = 1; i < comps.size(); ++i) {
            if (comps[i].size() > comps[largest].size()) largest = i;
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i == largest) continue;
            const std::uint64_t feasible =
                static_cast<std::uint64_t>(comps[i].size()) * comps[largest].size();
            add_cross_edges(st, crng, comps[i], comps[largest], std::min(k, feasible));
        }
    }
}

void phase1_stage3_connectivity(ReccsState& st, RngStream& rng,
                                std::uint32_t max_iter) {
    StateIndex index(st);
    for (Clustering::ClusterId cid = 0; cid < st.members.size(); ++cid) {
        const std::uint64_t k = st.k[cid];
        if (k == 0) continue;
        RngStream crng = rng.substream(cid);

        for (std::uint32_t iter = 0;; ++iter) {
            if (iter >= max_iter) {
                throw std::runtime_error(
                    "stage 3: iteration bound exceeded on a cluster of size " +
                    std::to_string(st.members[cid].size()));
            }
            const Graph sub = st.cluster_subgraph(cid);
            const MinCutCheck check = min_cut_at_least(sub, k);
            if (check.at_least) break;

            const CutResult& cut = *check.witness;
            auto lift = [&](const std::vector<Vertex>& side) {
                std::vector<Vertex> out;
                out.reserve(side.size());
                for (Vertex sv : side) out.push_back(index.at(sub.node_id(sv)));
                return out;
            };
            const auto side_a = lift(cut.side_a);
            const auto side_b = lift(cut.side_b);
            add_cross_edges(st, crng, side_a, side_b, k - cut.value);
        }
    }
}

namespace {

enum class PairingMode { unrestricted, capped_inter };

/// Shared phase-2 loop: repeatedly joins non-adjacent available-degree
/// pairs until none remains. A node leaves the pool when its residual is
/// exhausted or no eligible partner exists; both conditions are monotone,
/// so a removed node can never become eligible again.
void phase2_pairing(ReccsState& st, RngStream& rng, PairingMode mode) {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < st.adj.size(); ++v) {
        if (st.available(v)) pool.push_back(v);
    }
    std::vector<std::size_t> pos(st.adj.size(), SIZE_MAX);
    for (std::size_t i = 0; i < pool.size(); ++i) pos[pool[i]] = i;

    auto remove_from_pool = [&](Vertex v) {
        const std::size_t i = pos[v];
        pos[v] = SIZE_MAX;
        pool[i] = pool.back();
        if (i < pool.size() - 1) pos[pool[i]] = i;
        pool.pop_back();
    };
    auto pair_allowed = [&](Vertex u, Vertex v) {
        if (u == v || st.has_edge(u, v)) return false;
        if (mode == PairingMode::capped_inter && st.cluster[u] != st.cluster[v] &&
            st.inter_edges >= st.inter_target) {
            return false;
        }
        return true;
    };

    constexpr int kRetries = 32;
    while (pool.size() >= 2) {
        const Vertex u = pool[rng.uniform(pool.size())];
        std::optional<Vertex> partner;
        for (int r = 0; r < kRetries; ++r) {
            const Vertex v = pool[rng.uniform(pool.size())];
            if (pair_allowed(u, v)) {
                partner = v;
                break;
            }
        }
        if (!partner) {
            // exact scan before giving up on u
            std::vector<Vertex> eligible;
            for (Vertex v : pool) {
                if (pair_allowed(u, v)) eligible.push_back(v);
            }
            if (eligible.empty()) {
                remove_from_pool(u);
                continue;
            }
            partner = eligible[rng.uniform(eligible.size())];
        }
        st.add_edge(u, *partner);
        if (!st.available(u)) remove_from_pool(u);
        if (!st.available(*partner)) remove_from_pool(*partner);
    }
}

}  // namespace

void phase2_v1(ReccsState& st, RngStream& rng) {
    phase2_pairing(st, rng, PairingMode::unrestricted);
}

void phase2_v2(ReccsState& st, RngStream& rng) {
    phase2_pairing(st, rng, PairingMode::capped_inter);
}

Graph run_reccs(const Graph& n_c, const Clustering& c, const NetworkParams& p,
                const ReccsConfig& cfg) {
    ReccsState st = make_reccs_state(n_c, c, p);
    RngStream rng(cfg.master_seed);
    RngStream s1 = rng.substream("stage1");
    RngStream s2 = rng.substream("stage2");
    RngStream s3 = rng.substream("stage3");
    RngStream p2 = rng.substream("phase2");
    phase1_stage1_min_degree(st, s1);
    phase1_stage2_connect(st, s2);
    phase1_stage3_connectivity(st, s3, cfg.max_stage3_iterations);
    if (cfg.phase2_variant == Phase2Variant::v1) {
        phase2_v1(st, p2);
    } else {
        phase2_v2(st, p2);
    }
    return st.current_graph();
}

}  // namespace reccs
