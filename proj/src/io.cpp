#include "reccs/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace reccs {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

NodeId parse_node_id(const std::string& tok, const std::string& path,
                     std::size_t line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        parse_fail(path, line, "expected non-negative integer, got '" + tok + "'");
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* kind_name(DistanceKind k) {
    switch (k) {
        case DistanceKind::simple: return "simple";
        case DistanceKind::relative: return "relative";
        case DistanceKind::rmse: return "rmse";
    }
    return "?";
}

}  // namespace

Graph read_graph(const std::string& path) {
    auto in = open_in(path);
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line, tok;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            nodes.push_back(parse_node_id(toks[0], path, lineno));
        } else if (toks.size() == 2) {
            edges.emplace_back(parse_node_id(toks[0], path, lineno),
                               parse_node_id(toks[1], path, lineno));
        } else {
            parse_fail(path, lineno, "expected 1 or 2 fields, got " +
                                         std::to_string(toks.size()));
        }
    }
    return Graph::from_edges(std::move(nodes), edges);
}

void write_graph(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        if (g.degree(v) == 0) out << g.node_id(v) << '\n';
    }
    for (const auto& [u, v] : g.edge_list()) {
        out << u << '\t' << v << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

Clustering read_clustering(const std::string& path, const Graph& g) {
    auto in = open_in(path);
    std::map<NodeId, std::string> assignment;
    std::string line, tok;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 2) {
            parse_fail(path, lineno, "expected 'node cluster', got " +
                                         std::to_string(toks.size()) + " fields");
        }
        const NodeId id = parse_node_id(toks[0], path, lineno);
        if (!g.find_vertex(id)) {
            parse_fail(path, lineno,
                       "node " + std::to_string(id) + " not present in graph");
        }
        if (!assignment.emplace(id, toks[1]).second) {
            parse_fail(path, lineno, "duplicate assignment for node " + std::to_string(id));
        }
    }
    return Clustering::from_assignment(g, assignment);
}

void write_clustering(const Graph& g, const Clustering& c, const std::string& path) {
    auto out = open_out(path);
    for (Vertex v = 0; v < g.num_nodes(); ++v) {
        const auto cid = c.cluster_of(v);
        if (!c.is_singleton(cid)) {
            out << g.node_id(v) << '\t' << c.label(cid) << '\n';
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_params(const NetworkParams& p, const std::string& path) {
    auto out = open_out(path);
    out << "format " << kParamsFormatVersion << '\n';
    out << "blocks " << p.num_blocks() << '\n';
    for (std::uint32_t b = 0; b < p.num_blocks(); ++b) {
        out << "block " << p.cluster_labels[b] << ' ' << p.connectivity[b] << '\n';
    }
    out << "nodes " << p.num_nodes() << '\n';
    for (Vertex v = 0; v < p.num_nodes(); ++v) {
        out << "node " << p.node_ids[v] << ' ' << p.membership[v] << ' '
            << p.degrees[v] << '\n';
    }
    const auto entries = p.block_edges.entries();
    out << "edges " << entries.size() << '\n';
    for (const auto& [r, s, count] : entries) {
        out << "e " << r << ' ' << s << ' ' << count << '\n';
    }
    out << "end\n";
    if (!out) throw IoError("write failed: " + path);
}

NetworkParams read_params(const std::string& path) {
    auto in = open_in(path);
    std::size_t lineno = 0;
    auto next_line = [&](std::istringstream& ls) {
        std::string line;
        if (!std::getline(in, line)) parse_fail(path, lineno, "unexpected end of file");
        ++lineno;
        ls.clear();
        ls.str(line);
    };
    auto expect = [&](std::istringstream& ls, const std::string& kw) {
        std::string tok;
        if (!(ls >> tok) || tok != kw) {
            parse_fail(path, lineno, "expected '" + kw + "'");
        }
    };

    std::istringstream ls;
    next_line(ls);
    expect(ls, "format");
    std::string version;
    ls >> version;
    if (version != kParamsFormatVersion) {
        parse_fail(path, lineno, "unsupported format version '" + version +
                                     "' (want " + kParamsFormatVersion + ")");
    }

    NetworkParams p;
    std::size_t nblocks = 0;
    next_line(ls);
    expect(ls, "blocks");
    if (!(ls >> nblocks)) parse_fail(path, lineno, "bad block count");
    p.cluster_labels.reserve(nblocks);
    p.connectivity.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        next_line(ls);
        expect(ls, "block");
        std::string label;
        std::uint64_t k = 0;
        if (!(ls >> label >> k)) parse_fail(path, lineno, "bad block line");
        p.cluster_labels.push_back(label);
        p.connectivity.push_back(k);
    }

    std::size_t nnodes = 0;
    next_line(ls);
    expect(ls, "nodes");
    if (!(ls >> nnodes)) parse_fail(path, lineno, "bad node count");
    for (std::size_t i = 0; i < nnodes; ++i) {
        next_line(ls);
        expect(ls, "node");
        NodeId id;
        std::uint32_t block;
        std::uint64_t degree;
        if (!(ls >> id >> block >> degree) || id < 0 || block >= nblocks) {
            parse_fail(path, lineno, "bad node line");
        }
        if (!p.node_ids.empty() && id <= p.node_ids.back()) {
            parse_fail(path, lineno, "node ids must be strictly ascending");
        }
        p.node_ids.push_back(id);
        p.membership.push_back(block);
        p.degrees.push_back(degree);
    }

    std::size_t nentries = 0;
    next_line(ls);
    expect(ls, "edges");
    if (!(ls >> nentries)) parse_fail(path, lineno, "bad edge-entry count");
    p.block_edges = BlockMatrix(static_cast<std::uint32_t>(nblocks));
    for (std::size_t i = 0; i < nentries; ++i) {
        next_line(ls);
        expect(ls, "e");
        std::uint32_t r, s;
        std::uint64_t count;
        if (!(ls >> r >> s >> count) || r >= nblocks || s >= nblocks) {
            parse_fail(path, lineno, "bad edge entry");
        }
        p.block_edges.add(r, s, count);
    }
    next_line(ls);
    expect(ls, "end");
    return p;
}

void write_report(const EvalReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "format reccs-report-v1\n";
    for (const auto& e : report.entries) {
        out << "stat " << e.name << ' ' << kind_name(e.kind) << ' '
            << format_double(e.real_value) << ' ' << format_double(e.synthetic_value)
            << ' ' << format_double(e.distance) << '\n';
    }
    out << "disconnected_ratio_real " << format_double(report.disconnected_ratio_real)
        << '\n';
    out << "disconnected_ratio_synthetic "
        << format_double(report.disconnected_ratio_synthetic) << '\n';
    out << "normalized_edit_distance "
        << format_double(report.normalized_edit_distance) << '\n';
    out << "end\n";
    if (!out) throw IoError("write failed: " + path);
}

std::string report_csv_header(const EvalReport& report) {
    std::string h;
    for (const auto& e : report.entries) {
        if (!h.empty()) h += ',';
        h += e.name;
    }
    h += ",disconnected_ratio_real,disconnected_ratio_synthetic,normalized_edit_distance";
    return h;
}

std::string report_csv_row(const EvalReport& report) {
    std::string row;
    for (const auto& e : report.entries) {
        if (!row.empty()) row += ',';
        row += format_double(e.distance);
    }
    row += ',' + format_double(report.disconnected_ratio_real);
    row += ',' + format_double(report.disconnected_ratio_synthetic);
    row += ',' + format_double(report.normalized_edit_distance);
    return row;
}

void write_report_csv(const EvalReport& report, const std::string& path, bool header) {
    auto out = open_out(path);
    if (header) out << report_csv_header(report) << '\n';
    out << report_csv_row(report) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace reccs
