#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "reccs/io.hpp"
#include "reccs/metrics.hpp"
#include "reccs/pipeline.hpp"

namespace {

using namespace reccs;

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

GenerationVariant parse_variant(const std::string& s) {
    if (s == "sbm") return GenerationVariant::sbm;
    if (s == "reccs-v1") return GenerationVariant::reccs_v1;
    if (s == "reccs-v2") return GenerationVariant::reccs_v2;
    throw CLI::ValidationError("--variant", "unknown variant: " + s);
}

std::optional<OutlierStrategy> parse_strategy(const std::string& s) {
    if (s == "none") return std::nullopt;
    if (s == "s1") return OutlierStrategy::s1;
    if (s == "s2") return OutlierStrategy::s2;
    if (s == "s3") return OutlierStrategy::s3;
    throw CLI::ValidationError("--outliers", "unknown strategy: " + s);
}

int cmd_extract(const std::string& graph_path, const std::string& clustering_path,
                const std::string& out_params, unsigned threads) {
    const Graph g = read_graph(graph_path);
    const Clustering c = read_clustering(clustering_path, g);

    auto [g_c, g_star] = split_real_network(g, c);
    const Clustering c_c = c.restrict_to(g, g_c);
    ExtractOptions ex;
    ex.threads = threads;
    const NetworkParams params = extract_params(g_c, c_c, ex);
    write_params(params, out_params);

    std::map<std::uint64_t, std::size_t> k_hist;
    for (auto k : params.connectivity) ++k_hist[k];
    std::cout << "clusters: " << params.num_blocks() << '\n'
              << "outliers: " << c.num_outliers() << '\n'
              << "clustered-subnetwork edges: " << g_c.num_edges() << '\n'
              << "outlier edges: " << g_star.num_edges() << '\n'
              << "k(C) histogram:" << '\n';
    for (const auto& [k, n] : k_hist) {
        std::cout << "  k=" << k << ": " << n << '\n';
    }
    return 0;
}

int cmd_generate(const std::string& params_path, const std::string& graph_path,
                 const std::string& clustering_path, const std::string& variant,
                 const std::string& outliers, std::uint64_t seed,
                 const std::string& out_graph, const std::string& out_clustering,
                 unsigned threads) {
    PipelineConfig cfg;
    cfg.variant = parse_variant(variant);
    cfg.outliers = parse_strategy(outliers);
    cfg.master_seed = seed;
    cfg.threads = threads;

    PipelineResult result;
    if (!params_path.empty()) {
        if (cfg.outliers) {
            throw std::invalid_argument(
                "--params input carries no outlier information; use --outliers none");
        }
        const NetworkParams params = read_params(params_path);
        result = run_pipeline_from_params(params, cfg);
        if (!out_clustering.empty()) {
            std::map<NodeId, std::string> assignment;
            for (Vertex v = 0; v < params.num_nodes(); ++v) {
                assignment[params.node_ids[v]] =
                    params.cluster_labels[params.membership[v]];
            }
            const Clustering c = Clustering::from_assignment(result.graph, assignment);
            write_clustering(result.graph, c, out_clustering);
        }
    } else {
        const Graph g = read_graph(graph_path);
        const Clustering c = read_clustering(clustering_path, g);
        result = run_pipeline(g, c, cfg);
        if (!out_clustering.empty()) {
            write_clustering(result.graph, c, out_clustering);
        }
    }
    write_graph(result.graph, out_graph);
    write_manifest(result, cfg, out_graph + ".manifest");
    std::cout << "nodes: " << result.graph.num_nodes()
              << "  edges: " << result.graph.num_edges()
              << "  (step1: " << result.step1_edges
              << ", step2: " << result.step2_edges << ")\n";
    return 0;
}

int cmd_evaluate(const std::string& real_path, const std::string& clustering_path,
                 const std::string& syn_path, const std::string& out_report,
                 const std::string& out_csv) {
    const Graph g_real = read_graph(real_path);
    const Clustering c = read_clustering(clustering_path, g_real);
    const Graph g_syn = read_graph(syn_path);
    const EvalReport report = full_report(g_real, c, g_syn);
    write_report(report, out_report);
    if (!out_csv.empty()) write_report_csv(report, out_csv);
    std::cout << "report written to " << out_report << '\n';
    return 0;
}

int cmd_edit_distance(const std::string& real_path, const std::string& syn_path) {
    const Graph g_real = read_graph(real_path);
    const Graph g_syn = read_graph(syn_path);
    std::cout << normalized_edit_distance(g_real, g_syn) << '\n';
    return 0;
}

// Manifest line: <label> <real-graph> <clustering> <syn-graph>
int cmd_report_batch(const std::string& manifest_path, const std::string& out_csv) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open for reading: " + manifest_path);
    std::ofstream out(out_csv, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + out_csv);

    std::string line;
    std::size_t lineno = 0;
    bool wrote_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label, real_path, clustering_path, syn_path;
        if (!(ls >> label >> real_path >> clustering_path >> syn_path)) {
            throw ParseError(manifest_path + ":" + std::to_string(lineno) +
                             ": expected 'label real clustering synthetic'");
        }
        const Graph g_real = read_graph(real_path);
        const Clustering c = read_clustering(clustering_path, g_real);
        const Graph g_syn = read_graph(syn_path);
        const EvalReport report = full_report(g_real, c, g_syn);
        if (!wrote_header) {
            out << "label," << report_csv_header(report) << '\n';
            wrote_header = true;
        }
        out << label << ',' << report_csv_row(report) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic network generation with cluster edge-connectivity targets"};
    app.require_subcommand(1);

    std::string graph_path, clustering_path, out_params;
    std::string params_path, out_graph, out_clustering;
    std::string syn_path, real_path, out_report, out_csv, manifest_path;
    std::string variant = "reccs-v1";
    std::string outliers = "s1";
    std::uint64_t seed = 0;
    unsigned threads = default_threads();

    auto* extract = app.add_subcommand("extract", "Extract generation parameters");
    extract->add_option("--graph", graph_path)->required();
    extract->add_option("--clustering", clustering_path)->required();
    extract->add_option("--out-params", out_params)->required();
    extract->add_option("--threads", threads);

    auto* generate = app.add_subcommand("generate", "Generate a synthetic network");
    generate->add_option("--params", params_path);
    generate->add_option("--graph", graph_path);
    generate->add_option("--clustering", clustering_path);
    generate->add_option("--variant", variant, "sbm | reccs-v1 | reccs-v2");
    generate->add_option("--outliers", outliers, "s1 | s2 | s3 | none");
    generate->add_option("--seed", seed);
    generate->add_option("--out-graph", out_graph)->required();
    generate->add_option("--out-clustering", out_clustering);
    generate->add_option("--threads", threads);

    auto* evaluate = app.add_subcommand("evaluate", "Compare synthetic to real");
    evaluate->add_option("--real-graph", real_path)->required();
    evaluate->add_option("--clustering", clustering_path)->required();
    evaluate->add_option("--syn-graph", syn_path)->required();
    evaluate->add_option("--out-report", out_report)->required();
    evaluate->add_option("--out-csv", out_csv);

    auto* edit = app.add_subcommand("edit-distance", "Normalized edge edit distance");
    edit->add_option("--real-graph", real_path)->required();
    edit->add_option("--syn-graph", syn_path)->required();

    auto* batch = app.add_subcommand("report-batch", "Evaluate a list of runs to CSV");
    batch->add_option("--manifest", manifest_path)->required();
    batch->add_option("--out-csv", out_csv)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (extract->parsed()) {
            return cmd_extract(graph_path, clustering_path, out_params, threads);
        }
        if (generate->parsed()) {
            if (params_path.empty() && (graph_path.empty() || clustering_path.empty())) {
                throw std::invalid_argument(
                    "generate needs --params or both --graph and --clustering");
            }
            return cmd_generate(params_path, graph_path, clustering_path, variant,
                                outliers, seed, out_graph, out_clustering, threads);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(real_path, clustering_path, syn_path, out_report,
                                out_csv);
        }
        if (edit->parsed()) {
            return cmd_edit_distance(real_path, syn_path);
        }
        if (batch->parsed()) {
            return cmd_report_batch(manifest_path, out_csv);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
