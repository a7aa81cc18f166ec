#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "reccs/graph.hpp"
#include "reccs/outliers.hpp"
#include "reccs/params.hpp"
#include "reccs/reccs.hpp"

namespace reccs {

enum class GenerationVariant { sbm, reccs_v1, reccs_v2 };

struct PipelineConfig {
    GenerationVariant variant = GenerationVariant::reccs_v1;
    std::optional<OutlierStrategy> outliers = OutlierStrategy::s1;  // nullopt = none
    std::uint64_t master_seed = 0;
    std::uint32_t max_stage3_iterations = 10000;
    unsigned threads = 1;
};

struct PipelineResult {
    Graph graph;              // merged synthetic network over all input nodes
    std::size_t step1_edges = 0;
    std::size_t step2_edges = 0;
    std::size_t sbm_multigraph_edges = 0;
    std::size_t sbm_simple_edges = 0;
};

/// Full two-step generation: extract Param(G_c, C), sample + simplify the
/// SBM, optionally run RECCS, generate the outlier network, merge. The
/// seed is split into named sub-streams per stage so changing the outlier
/// strategy does not perturb step-1 output. The output clustering is the
/// input clustering.
PipelineResult run_pipeline(const Graph& g, const Clustering& c,
                            const PipelineConfig& cfg);

/// Same, but starting from pre-extracted clustered-subnetwork parameters
/// (step 2 is skipped; no outlier information is present).
PipelineResult run_pipeline_from_params(const NetworkParams& params,
                                        const PipelineConfig& cfg);

/// Run manifest: config, seed and stage edge counts as structured text.
void write_manifest(const PipelineResult& result, const PipelineConfig& cfg,
                    const std::string& path);

const char* variant_name(GenerationVariant v);
const char* strategy_name(const std::optional<OutlierStrategy>& s);

}  // namespace reccs
