#include "reccs/pipeline.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "reccs/io.hpp"
#include "reccs/sbm.hpp"

namespace reccs {

namespace {

Graph run_step1(const Graph& n_c, const Clustering& c_c, const NetworkParams& params,
                const PipelineConfig& cfg, const RngStream& base) {
    if (cfg.variant == GenerationVariant::sbm) return n_c;
    ReccsConfig rcfg;
    rcfg.phase2_variant = cfg.variant == GenerationVariant::reccs_v1 ? Phase2Variant::v1
                                                                     : Phase2Variant::v2;
    rcfg.master_seed = base.substream("reccs").next();
    rcfg.max_stage3_iterations = cfg.max_stage3_iterations;
    return run_reccs(n_c, c_c, params, rcfg);
}

Graph merge_steps(const std::vector<NodeId>& all_nodes, const Graph& step1,
                  const Graph& step2, PipelineResult& result) {
    auto edges = step1.edge_list();
    const auto star_edges = step2.edge_list();
    edges.insert(edges.end(), star_edges.begin(), star_edges.end());
    Graph merged = Graph::from_edges(all_nodes, edges);
    if (merged.num_edges() != step1.num_edges() + step2.num_edges()) {
        throw std::logic_error("pipeline: step 1 and step 2 edge sets overlap");
    }
    result.step1_edges = step1.num_edges();
    result.step2_edges = step2.num_edges();
    return merged;
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const Clustering& c,
                            const PipelineConfig& cfg) {
    PipelineResult result;
    const RngStream base(cfg.master_seed);

    auto [g_c, g_star] = split_real_network(g, c);
    const Clustering c_c = c.restrict_to(g, g_c);
    ExtractOptions ex;
    ex.threads = cfg.threads;
    const NetworkParams params = extract_params(g_c, c_c, ex);

    const MultiGraph mg = sample_sbm(params, base.substream("sbm"));
    result.sbm_multigraph_edges = mg.num_edges();
    const Graph n_c = simplify(mg);
    result.sbm_simple_edges = n_c.num_edges();

    const Graph step1 = run_step1(n_c, c_c, params, cfg, base);

    Graph step2;
    if (cfg.outliers) {
        const NetworkParams star_params = extract_outlier_params(g_star, c);
        step2 = run_outlier_strategy(*cfg.outliers, star_params,
                                     base.substream("outliers"));
    }

    result.graph = merge_steps(g.node_ids(), step1, step2, result);
    return result;
}

PipelineResult run_pipeline_from_params(const NetworkParams& params,
                                        const PipelineConfig& cfg) {
    PipelineResult result;
    const RngStream base(cfg.master_seed);

    const MultiGraph mg = sample_sbm(params, base.substream("sbm"));
    result.sbm_multigraph_edges = mg.num_edges();
    const Graph n_c = simplify(mg);
    result.sbm_simple_edges = n_c.num_edges();

    std::map<NodeId, std::string> assignment;
    for (Vertex v = 0; v < params.num_nodes(); ++v) {
        assignment[params.node_ids[v]] = params.cluster_labels[params.membership[v]];
    }
    const Clustering c = Clustering::from_assignment(n_c, assignment);

    const Graph step1 = run_step1(n_c, c, params, cfg, base);
    result.graph = merge_steps(n_c.node_ids(), step1, Graph{}, result);
    return result;
}

const char* variant_name(GenerationVariant v) {
    switch (v) {
        case GenerationVariant::sbm: return "sbm";
        case GenerationVariant::reccs_v1: return "reccs-v1";
        case GenerationVariant::reccs_v2: return "reccs-v2";
    }
    return "?";
}

const char* strategy_name(const std::optional<OutlierStrategy>& s) {
    if (!s) return "none";
    switch (*s) {
        case OutlierStrategy::s1: return "s1";
        case OutlierStrategy::s2: return "s2";
        case OutlierStrategy::s3: return "s3";
    }
    return "?";
}

void write_manifest(const PipelineResult& result, const PipelineConfig& cfg,
                    const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "format reccs-manifest-v1\n";
    out << "variant " << variant_name(cfg.variant) << '\n';
    out << "outliers " << strategy_name(cfg.outliers) << '\n';
    out << "seed " << cfg.master_seed << '\n';
    out << "nodes " << result.graph.num_nodes() << '\n';
    out << "edges " << result.graph.num_edges() << '\n';
    out << "sbm_multigraph_edges " << result.sbm_multigraph_edges << '\n';
    out << "sbm_simple_edges " << result.sbm_simple_edges << '\n';
    out << "step1_edges " << result.step1_edges << '\n';
    out << "step2_edges " << result.step2_edges << '\n';
    out << "end\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace reccs
