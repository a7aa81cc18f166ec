#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reccs/graph.hpp"

namespace reccs {

enum class DistanceKind { simple, relative, rmse };

struct EvalEntry {
    std::string name;
    double real_value = 0;
    double synthetic_value = 0;
    double distance = 0;  // NaN when undefined (relative diff with s = 0)
    DistanceKind kind = DistanceKind::simple;
};

struct EvalReport {
    std::vector<EvalEntry> entries;
    double disconnected_ratio_real = 0;
    double disconnected_ratio_synthetic = 0;
    double normalized_edit_distance = 0;

    const EvalEntry& entry(const std::string& name) const;
};

double rmse(std::span<const double> a, std::span<const double> b);
double simple_diff(double s, double s_prime);
double relative_diff(double s, double s_prime);  // requires s != 0

/// Fraction of edges whose endpoints lie in different clusters.
double mixing_parameter(const Graph& g, const Clustering& c);

/// LFR-style alternative: per-node inter-cluster edge fraction, averaged
/// over nodes of positive degree.
double mixing_parameter_local(const Graph& g, const Clustering& c);

struct ClusteringCoefficients {
    double global = 0;      // 3 * triangles / wedges
    double mean_local = 0;  // degree < 2 nodes contribute 0
};
ClusteringCoefficients clustering_coefficients(const Graph& g);

/// Exact diameter of the largest connected component (iFUB with a
/// double-sweep lower bound).
std::uint64_t diameter(const Graph& g);

/// Per non-singleton cluster: global min cut of its induced subgraph
/// (0 when disconnected), sorted ascending.
std::vector<std::uint64_t> min_cut_sequence(const Graph& g, const Clustering& c);

/// Same values keyed by cluster label order instead of sorted.
std::vector<std::uint64_t> min_cut_by_cluster(const Graph& g, const Clustering& c);

/// Share of non-singleton clusters whose induced subgraph is disconnected.
double disconnected_ratio(const Graph& g, const Clustering& c);

/// |E(g) symmetric-difference E(n)| / |E(g)|, in [0, 2].
double normalized_edit_distance(const Graph& g, const Graph& n);

struct OutlierStats {
    std::vector<std::uint64_t> degree_sequence;  // outliers, by ascending node id
    std::uint64_t outlier_outlier_edges = 0;
    std::uint64_t outlier_clustered_edges = 0;
};
OutlierStats outlier_stats(const Graph& g, const Clustering& c);

/// Full fit report between a real network and a synthetic one over the
/// identity node bijection.
EvalReport full_report(const Graph& g_real, const Clustering& c, const Graph& g_syn);

}  // namespace reccs
