#include "reccs/mincut.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace reccs {

namespace {

void require_cuttable(const Graph& g) {
    if (g.num_nodes() < 2) {
        throw std::invalid_argument("min cut: graph needs at least 2 nodes");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("min cut: graph must be connected");
    }
}

CutResult make_result(const Graph& g, std::uint64_t value,
                      const std::vector<Vertex>& side_a_vertices) {
    CutResult r;
    r.value = value;
    std::vector<bool> in_a(g.num_nodes(), false);
    for (Vertex v : side_a_vertices) in_a[v] = true;
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        (in_a[v] ? r.side_a : r.side_b).push_back(v);
    }
    return r;
}

// Stoer-Wagner on adjacency maps. Ties in the maximum-adjacency order are
// broken toward the smaller supernode id, so runs are deterministic.
// When stop_below is set, returns the first phase cut with value < *stop_below.
CutResult stoer_wagner(const Graph& g, std::optional<std::uint64_t> stop_below) {
    const std::size_t n = g.num_nodes();
    std::vector<std::unordered_map<Vertex, std::uint64_t>> w(n);
    std::vector<std::vector<Vertex>> group(n);
    std::vector<bool> alive(n, true);
    g.for_each_edge([&](Vertex u, Vertex v) {
        w[u][v] += 1;
        w[v][u] += 1;
    });
    for (Vertex v = 0; v < n; ++v) group[v] = {v};

    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> best_side;
    std::size_t alive_count = n;

    std::vector<std::uint64_t> key(n);
    std::vector<bool> in_order(n);

    while (alive_count > 1) {
        Vertex start = 0;
        while (!alive[start]) ++start;

        std::fill(key.begin(), key.end(), 0);
        std::fill(in_order.begin(), in_order.end(), false);

        // max on weight; ties -> smaller vertex on top
        auto cmp = [](const std::pair<std::uint64_t, Vertex>& a,
                      const std::pair<std::uint64_t, Vertex>& b) {
            return a.first < b.first || (a.first == b.first && a.second > b.second);
        };
        std::priority_queue<std::pair<std::uint64_t, Vertex>,
                            std::vector<std::pair<std::uint64_t, Vertex>>, decltype(cmp)>
            pq(cmp);

        in_order[start] = true;
        for (const auto& [x, wt] : w[start]) {
            key[x] = wt;
            pq.emplace(wt, x);
        }
        Vertex s = start, t = start;
        std::uint64_t last_key = 0;
        std::size_t added = 1;
        while (added < alive_count) {
            Vertex u;
            std::uint64_t ku;
            do {
                if (pq.empty()) {
                    throw std::logic_error("Stoer-Wagner: graph became disconnected");
                }
                std::tie(ku, u) = pq.top();
                pq.pop();
            } while (in_order[u] || ku != key[u]);
            in_order[u] = true;
            s = t;
            t = u;
            last_key = ku;
            ++added;
            for (const auto& [x, wt] : w[u]) {
                if (!in_order[x]) {
                    key[x] += wt;
                    pq.emplace(key[x], x);
                }
            }
        }

        // cut-of-the-phase: group[t] against everything else
        if (last_key < best_value) {
            best_value = last_key;
            best_side = group[t];
            if (stop_below && best_value < *stop_below) {
                return make_result(g, best_value, best_side);
            }
        }

        // merge t into s
        w[s].erase(t);
        w[t].erase(s);
        for (const auto& [x, wt] : w[t]) {
            w[s][x] += wt;
            w[x].erase(t);
            w[x][s] += wt;
        }
        w[t].clear();
        group[s].insert(group[s].end(), group[t].begin(), group[t].end());
        group[t].clear();
        alive[t] = false;
        --alive_count;
    }

    return make_result(g, best_value, best_side);
}

}  // namespace

CutResult global_min_cut(const Graph& g) {
    require_cuttable(g);
    return stoer_wagner(g, std::nullopt);
}

MinCutCheck min_cut_at_least(const Graph& g, std::uint64_t k) {
    require_cuttable(g);
    MinCutCheck out;
    if (k == 0) {
        out.at_least = true;
        return out;
    }
    // cheap certificate: a single vertex of degree < k
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        if (g.degree(v) < k) {
            out.at_least = false;
            out.witness = make_result(g, g.degree(v), {v});
            return out;
        }
    }
    CutResult cut = stoer_wagner(g, k);
    out.at_least = cut.value >= k;
    if (!out.at_least) out.witness = std::move(cut);
    return out;
}

std::uint64_t count_crossing_edges(const Graph& g, const std::vector<bool>& in_a) {
    std::uint64_t crossing = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (in_a[u] != in_a[v]) ++crossing;
    });
    return crossing;
}

CutResult brute_force_min_cut(const Graph& g) {
    const std::size_t n = g.num_nodes();
    if (n < 2) {
        throw std::invalid_argument("brute_force_min_cut: graph needs at least 2 nodes");
    }
    if (n > 20) {
        throw std::invalid_argument("brute_force_min_cut: size cap is 20 nodes");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    g.for_each_edge([&](Vertex u, Vertex v) { edges.emplace_back(u, v); });

    // vertex n-1 is pinned to side B, so each bipartition is visited once
    const std::uint32_t limit = 1u << (n - 1);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::uint64_t crossing = 0;
        for (const auto& [u, v] : edges) {
            const bool au = u < n - 1 && (mask >> u & 1);
            const bool av = v < n - 1 && (mask >> v & 1);
            if (au != av) ++crossing;
        }
        if (crossing < best) {
            best = crossing;
            best_mask = mask;
        }
    }

    std::vector<Vertex> side_a;
    for (Vertex v = 0; v + 1 < n; ++v) {
        if (best_mask >> v & 1) side_a.push_back(v);
    }
    return make_result(g, best, side_a);
}

}  // namespace reccs
