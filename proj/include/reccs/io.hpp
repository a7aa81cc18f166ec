#pragma once

#include <stdexcept>
#include <string>

#include "reccs/graph.hpp"
#include "reccs/metrics.hpp"
#include "reccs/params.hpp"

namespace reccs {

/// Malformed file content; carries path and line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable/unwritable file.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge list: two whitespace-separated non-negative integer ids per line.
/// Blank lines and '#' comments are skipped; duplicate edges and self-loops
/// collapse into the simple graph. A single-integer line declares an
/// isolated node, so writing and re-reading preserves the node set.
Graph read_graph(const std::string& path);

/// Byte-stable: isolated nodes first (ascending), then edges with
/// min(u,v) first in lexicographic order.
void write_graph(const Graph& g, const std::string& path);

/// One "node_id<TAB>cluster_id" line per clustered node. Nodes of g absent
/// from the file become singleton clusters (outliers); duplicate node lines
/// and ids unknown to g are errors.
Clustering read_clustering(const std::string& path, const Graph& g);

/// Writes non-singleton memberships only, sorted by node id.
void write_clustering(const Graph& g, const Clustering& c, const std::string& path);

inline constexpr const char* kParamsFormatVersion = "reccs-params-v1";

void write_params(const NetworkParams& p, const std::string& path);
NetworkParams read_params(const std::string& path);

void write_report(const EvalReport& report, const std::string& path);
void write_report_csv(const EvalReport& report, const std::string& path,
                      bool header = true);
std::string report_csv_header(const EvalReport& report);
std::string report_csv_row(const EvalReport& report);

}  // namespace reccs
