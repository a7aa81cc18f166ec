#include "reccs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "reccs/mincut.hpp"

namespace reccs {

const EvalEntry& EvalReport::entry(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return e;
    }
    throw std::invalid_argument("EvalReport: no entry named '" + name + "'");
}

double rmse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("rmse: length mismatch");
    if (a.empty()) throw std::invalid_argument("rmse: empty sequences");
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

double simple_diff(double s, double s_prime) { return s - s_prime; }

double relative_diff(double s, double s_prime) {
    if (s == 0) throw std::invalid_argument("relative_diff: real value is zero");
    return (s - s_prime) / s;
}

double mixing_parameter(const Graph& g, const Clustering& c) {
    if (g.num_edges() == 0) {
        throw std::invalid_argument("mixing_parameter: graph has no edges");
    }
    std::uint64_t inter = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (c.cluster_of(u) != c.cluster_of(v)) ++inter;
    });
    return static_cast<double>(inter) / static_cast<double>(g.num_edges());
}

double mixing_parameter_local(const Graph& g, const Clustering& c) {
    if (g.num_edges() == 0) {
        throw std::invalid_argument("mixing_parameter_local: graph has no edges");
    }
    double sum = 0;
    std::size_t counted = 0;
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        if (g.degree(v) == 0) continue;
        std::uint64_t inter = 0;
        for (Vertex w : g.neighbors(v)) {
            if (c.cluster_of(v) != c.cluster_of(w)) ++inter;
        }
        sum += static_cast<double>(inter) / static_cast<double>(g.degree(v));
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

ClusteringCoefficients clustering_coefficients(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::uint64_t> tri(n, 0);
    g.for_each_edge([&](Vertex u, Vertex v) {
        // common neighbors of u and v each close one triangle
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        auto iu = nu.begin();
        auto iv = nv.begin();
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                ++tri[*iu];
                ++iu;
                ++iv;
            }
        }
    });

    std::uint64_t triangles3 = 0;  // 3 * triangle count
    std::uint64_t wedges = 0;
    double local_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t d = g.degree(v);
        const std::uint64_t w = d * (d - (d > 0 ? 1 : 0)) / 2;
        wedges += w;
        triangles3 += tri[v];
        if (w > 0) local_sum += static_cast<double>(tri[v]) / static_cast<double>(w);
    }

    ClusteringCoefficients cc;
    cc.global = wedges == 0 ? 0.0
                            : static_cast<double>(triangles3) / static_cast<double>(wedges);
    cc.mean_local = n == 0 ? 0.0 : local_sum / static_cast<double>(n);
    return cc;
}

namespace {

struct BfsResult {
    std::vector<std::uint32_t> dist;  // UINT32_MAX = unreachable
    Vertex farthest = 0;
    std::uint32_t ecc = 0;
};

BfsResult bfs(const Graph& g, Vertex src) {
    BfsResult r;
    r.dist.assign(g.num_nodes(), std::numeric_limits<std::uint32_t>::max());
    r.dist[src] = 0;
    r.farthest = src;
    std::vector<Vertex> frontier{src}, next;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex u : frontier) {
            for (Vertex v : g.neighbors(u)) {
                if (r.dist[v] == std::numeric_limits<std::uint32_t>::max()) {
                    r.dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        if (!next.empty()) {
            r.ecc = level;
            r.farthest = *std::min_element(next.begin(), next.end());
        }
        std::swap(frontier, next);
    }
    return r;
}

}  // namespace

std::uint64_t diameter(const Graph& g) {
    if (g.num_nodes() == 0) throw std::invalid_argument("diameter: empty graph");
    auto comps = connected_components(g);
    const auto& comp = *std::max_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (comp.size() == 1) return 0;
    const Graph sub = induced_subgraph(g, comp);

    // double sweep from a max-degree vertex
    Vertex hub = 0;
    for (Vertex v = 0; v < sub.num_nodes(); ++v) {
        if (sub.degree(v) > sub.degree(hub)) hub = v;
    }
    const BfsResult sweep1 = bfs(sub, hub);
    const BfsResult sweep2 = bfs(sub, sweep1.farthest);
    std::uint32_t lb = sweep2.ecc;

    // midpoint of the sweep path: a vertex at distance ~lb/2 from both ends
    const BfsResult sweep3 = bfs(sub, sweep2.farthest);
    Vertex mid = sweep1.farthest;
    for (Vertex v = 0; v < sub.num_nodes(); ++v) {
        if (sweep2.dist[v] + sweep3.dist[v] == lb &&
            sweep2.dist[v] == lb / 2) {
            mid = v;
            break;
        }
    }

    // iFUB: sweep levels of the midpoint BFS top-down until the bound closes
    const BfsResult from_mid = bfs(sub, mid);
    std::vector<std::vector<Vertex>> levels(from_mid.ecc + 1);
    for (Vertex v = 0; v < sub.num_nodes(); ++v) levels[from_mid.dist[v]].push_back(v);
    lb = std::max(lb, from_mid.ecc);
    for (std::uint32_t i = from_mid.ecc; i > 0; --i) {
        if (lb >= 2 * i) break;
        for (Vertex v : levels[i]) {
            lb = std::max(lb, bfs(sub, v).ecc);
        }
    }
    return lb;
}

std::vector<std::uint64_t> min_cut_by_cluster(const Graph& g, const Clustering& c) {
    std::vector<std::uint64_t> out;
    for (auto cid : c.non_singleton_clusters()) {
        const Graph sub = induced_subgraph(g, c.members(cid));
        out.push_back(is_connected(sub) ? global_min_cut(sub).value : 0);
    }
    return out;
}

std::vector<std::uint64_t> min_cut_sequence(const Graph& g, const Clustering& c) {
    auto out = min_cut_by_cluster(g, c);
    std::sort(out.begin(), out.end());
    return out;
}

double disconnected_ratio(const Graph& g, const Clustering& c) {
    const auto clusters = c.non_singleton_clusters();
    if (clusters.empty()) {
        throw std::invalid_argument("disconnected_ratio: no non-singleton clusters");
    }
    std::size_t disconnected = 0;
    for (auto cid : clusters) {
        if (!is_connected(induced_subgraph(g, c.members(cid)))) ++disconnected;
    }
    return static_cast<double>(disconnected) / static_cast<double>(clusters.size());
}

double normalized_edit_distance(const Graph& g, const Graph& n) {
    if (g.num_edges() == 0) {
        throw std::invalid_argument("normalized_edit_distance: real edge set is empty");
    }
    std::uint64_t shared = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        const auto nu = n.find_vertex(g.node_id(u));
        const auto nv = n.find_vertex(g.node_id(v));
        if (nu && nv && n.has_edge(*nu, *nv)) ++shared;
    });
    const std::uint64_t sym_diff = (g.num_edges() - shared) + (n.num_edges() - shared);
    return static_cast<double>(sym_diff) / static_cast<double>(g.num_edges());
}

OutlierStats outlier_stats(const Graph& g, const Clustering& c) {
    OutlierStats s;
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        if (c.is_outlier(v)) s.degree_sequence.push_back(g.degree(v));
    }
    g.for_each_edge([&](Vertex u, Vertex v) {
        const bool ou = c.is_outlier(u);
        const bool ov = c.is_outlier(v);
        if (ou && ov) {
            ++s.outlier_outlier_edges;
        } else if (ou || ov) {
            ++s.outlier_clustered_edges;
        }
    });
    return s;
}

namespace {

EvalEntry make_simple(std::string name, double s, double sp) {
    return {std::move(name), s, sp, simple_diff(s, sp), DistanceKind::simple};
}

EvalEntry make_relative(std::string name, double s, double sp) {
    double d;
    if (s == 0 && sp == 0) {
        d = 0;  // identical, distance trivially zero
    } else if (s == 0) {
        d = std::numeric_limits<double>::quiet_NaN();
    } else {
        d = relative_diff(s, sp);
    }
    return {std::move(name), s, sp, d, DistanceKind::relative};
}

EvalEntry make_rmse(std::string name, std::span<const double> a,
                    std::span<const double> b) {
    const double d = a.empty() ? 0.0 : rmse(a, b);
    return {std::move(name), 0, 0, d, DistanceKind::rmse};
}

std::vector<double> to_doubles(const std::vector<std::uint64_t>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

EvalReport full_report(const Graph& g_real, const Clustering& c, const Graph& g_syn) {
    if (g_real.node_ids() != g_syn.node_ids()) {
        throw std::invalid_argument("full_report: node universes differ");
    }
    if (g_real.num_edges() == 0) {
        throw std::invalid_argument("full_report: real network has no edges");
    }

    EvalReport rep;

    std::vector<double> deg_real, deg_syn;
    deg_real.reserve(g_real.num_nodes());
    for (Vertex v = 0; v < g_real.num_nodes(); ++v) {
        deg_real.push_back(static_cast<double>(g_real.degree(v)));
        deg_syn.push_back(static_cast<double>(g_syn.degree(v)));
    }
    rep.entries.push_back(make_rmse("degree_sequence", deg_real, deg_syn));

    const OutlierStats os_real = outlier_stats(g_real, c);
    const OutlierStats os_syn = outlier_stats(g_syn, c);
    rep.entries.push_back(make_rmse("outlier_degree_sequence",
                                    to_doubles(os_real.degree_sequence),
                                    to_doubles(os_syn.degree_sequence)));

    // aligned by cluster label; sorted-order alignment gives the same RMSE
    rep.entries.push_back(make_rmse("min_cut_sequence",
                                    to_doubles(min_cut_by_cluster(g_real, c)),
                                    to_doubles(min_cut_by_cluster(g_syn, c))));

    const auto cc_real = clustering_coefficients(g_real);
    const auto cc_syn = clustering_coefficients(g_syn);
    rep.entries.push_back(
        make_simple("global_clustering_coefficient", cc_real.global, cc_syn.global));
    rep.entries.push_back(make_simple("mean_local_clustering_coefficient",
                                      cc_real.mean_local, cc_syn.mean_local));

    const double mix_real = mixing_parameter(g_real, c);
    const double mix_syn = g_syn.num_edges() == 0 ? 0.0 : mixing_parameter(g_syn, c);
    rep.entries.push_back(make_simple("mixing_parameter", mix_real, mix_syn));

    rep.entries.push_back(make_relative("diameter",
                                        static_cast<double>(diameter(g_real)),
                                        static_cast<double>(diameter(g_syn))));
    rep.entries.push_back(
        make_relative("outlier_outlier_edges",
                      static_cast<double>(os_real.outlier_outlier_edges),
                      static_cast<double>(os_syn.outlier_outlier_edges)));
    rep.entries.push_back(
        make_relative("outlier_clustered_edges",
                      static_cast<double>(os_real.outlier_clustered_edges),
                      static_cast<double>(os_syn.outlier_clustered_edges)));

    const bool any_cluster = !c.non_singleton_clusters().empty();
    rep.disconnected_ratio_real = any_cluster ? disconnected_ratio(g_real, c) : 0.0;
    rep.disconnected_ratio_synthetic = any_cluster ? disconnected_ratio(g_syn, c) : 0.0;
    rep.normalized_edit_distance = normalized_edit_distance(g_real, g_syn);
    return rep;
}

}  // namespace reccs
