#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reccs/io.hpp"
#include "reccs/metrics.hpp"
#include "reccs/mincut.hpp"
#include "reccs/pipeline.hpp"
#include "test_support.hpp"

using namespace reccs;
using namespace reccs::testing;

namespace {

bool same_node_set(const Graph& a, const Graph& b) {
    return a.node_ids() == b.node_ids();
}

// every cluster of the merged network is connected with min cut >= k(C)
void check_connectivity_targets(const Graph& real, const Clustering& c,
                                const Graph& syn) {
    auto [g_c, g_star] = split_real_network(real, c);
    Clustering c_c = c.restrict_to(real, g_c);
    NetworkParams p = extract_params(g_c, c_c);
    Clustering syn_c = c.restrict_to(real, syn);
    for (auto cid : syn_c.non_singleton_clusters()) {
        Graph sub = induced_subgraph(syn, syn_c.members(cid));
        REQUIRE(is_connected(sub));
        // match the cluster by label in the params
        std::size_t k = 0;
        for (std::uint32_t b = 0; b < p.num_blocks(); ++b) {
            if (p.cluster_labels[b] == syn_c.label(cid)) k = p.connectivity[b];
        }
        if (k == 0) k = 1;
        CHECK(global_min_cut(sub).value >= k);
    }
}

}  // namespace

TEST_CASE("pipeline preserves the node universe and splits edges by step") {
    RealFixture fx = make_real_fixture(11, {.num_clusters = 6,
                                            .min_cluster = 4,
                                            .max_cluster = 12,
                                            .outlier_fraction = 0.1});
    for (auto variant : {GenerationVariant::sbm, GenerationVariant::reccs_v1,
                         GenerationVariant::reccs_v2}) {
        PipelineConfig cfg;
        cfg.variant = variant;
        cfg.master_seed = 5;
        PipelineResult r = run_pipeline(fx.g, fx.c, cfg);
        CHECK(same_node_set(r.graph, fx.g));
        CHECK(r.graph.num_edges() == r.step1_edges + r.step2_edges);
        CHECK(r.sbm_simple_edges <= r.sbm_multigraph_edges);
    }
}

TEST_CASE("reccs variants meet per-cluster connectivity targets") {
    RealFixture fx = make_real_fixture(12, {.num_clusters = 5,
                                            .min_cluster = 4,
                                            .max_cluster = 10,
                                            .outlier_fraction = 0.08});
    for (auto variant : {GenerationVariant::reccs_v1, GenerationVariant::reccs_v2}) {
        PipelineConfig cfg;
        cfg.variant = variant;
        cfg.master_seed = 77;
        PipelineResult r = run_pipeline(fx.g, fx.c, cfg);
        check_connectivity_targets(fx.g, fx.c, r.graph);
    }
}

TEST_CASE("outlier strategy change leaves step 1 untouched") {
    RealFixture fx = make_real_fixture(13, {.num_clusters = 4,
                                            .min_cluster = 4,
                                            .max_cluster = 9,
                                            .outlier_fraction = 0.15});
    PipelineConfig cfg;
    cfg.master_seed = 3;
    cfg.outliers = OutlierStrategy::s1;
    PipelineResult a = run_pipeline(fx.g, fx.c, cfg);
    cfg.outliers = OutlierStrategy::s3;
    PipelineResult b = run_pipeline(fx.g, fx.c, cfg);
    CHECK(a.step1_edges == b.step1_edges);

    // intra-clustered edges identical across strategies
    auto clustered_edges = [&](const Graph& g) {
        std::vector<std::pair<NodeId, NodeId>> out;
        g.for_each_edge([&](Vertex u, Vertex v) {
            const bool ou = fx.c.is_outlier(fx.g.vertex_of(g.node_id(u)));
            const bool ov = fx.c.is_outlier(fx.g.vertex_of(g.node_id(v)));
            if (!ou && !ov) out.emplace_back(g.node_id(u), g.node_id(v));
        });
        return out;
    };
    CHECK(clustered_edges(a.graph) == clustered_edges(b.graph));
}

TEST_CASE("no outlier strategy means no outlier-incident edges") {
    RealFixture fx = make_real_fixture(14, {.num_clusters = 4,
                                            .min_cluster = 4,
                                            .max_cluster = 9,
                                            .outlier_fraction = 0.2});
    PipelineConfig cfg;
    cfg.outliers = std::nullopt;
    cfg.master_seed = 8;
    PipelineResult r = run_pipeline(fx.g, fx.c, cfg);
    CHECK(r.step2_edges == 0);
    r.graph.for_each_edge([&](Vertex u, Vertex v) {
        CHECK(!fx.c.is_outlier(fx.g.vertex_of(r.graph.node_id(u))));
        CHECK(!fx.c.is_outlier(fx.g.vertex_of(r.graph.node_id(v))));
    });
    CHECK(same_node_set(r.graph, fx.g));
}

TEST_CASE("all-outlier input produces only the outlier network") {
    Graph g = Graph::from_edges({}, {{0, 1}, {1, 2}, {2, 3}});
    Clustering c = all_singletons(g);
    PipelineConfig cfg;
    cfg.master_seed = 4;
    cfg.outliers = OutlierStrategy::s1;
    PipelineResult r = run_pipeline(g, c, cfg);
    CHECK(r.step1_edges == 0);
    CHECK(r.step2_edges == 3);  // s1 copies outlier-outlier edges exactly
    CHECK(same_node_set(r.graph, g));
}

TEST_CASE("pipeline is deterministic, including across thread counts") {
    RealFixture fx = make_real_fixture(15, {.num_clusters = 8,
                                            .min_cluster = 4,
                                            .max_cluster = 12,
                                            .outlier_fraction = 0.1});
    PipelineConfig cfg;
    cfg.master_seed = 1001;
    cfg.threads = 1;
    PipelineResult a = run_pipeline(fx.g, fx.c, cfg);
    PipelineResult b = run_pipeline(fx.g, fx.c, cfg);
    CHECK(a.graph == b.graph);
    cfg.threads = 4;
    PipelineResult par = run_pipeline(fx.g, fx.c, cfg);
    CHECK(a.graph == par.graph);

    cfg.master_seed = 1002;
    PipelineResult other = run_pipeline(fx.g, fx.c, cfg);
    CHECK(!(a.graph == other.graph));

    // byte-identical on disk
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("reccs_pipe_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write_graph(a.graph, (dir / "a.txt").string());
    write_graph(par.graph, (dir / "b.txt").string());
    std::ifstream fa(dir / "a.txt"), fb(dir / "b.txt");
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    fs::remove_all(dir);
}

TEST_CASE("pipeline from params skips the outlier step") {
    RealFixture fx = make_real_fixture(16, {.num_clusters = 4,
                                            .min_cluster = 4,
                                            .max_cluster = 9});
    auto [g_c, g_star] = split_real_network(fx.g, fx.c);
    Clustering c_c = fx.c.restrict_to(fx.g, g_c);
    NetworkParams p = extract_params(g_c, c_c);

    PipelineConfig cfg;
    cfg.master_seed = 55;
    cfg.outliers = std::nullopt;
    PipelineResult from_params = run_pipeline_from_params(p, cfg);
    PipelineResult full = run_pipeline(fx.g, fx.c, cfg);
    CHECK(from_params.step2_edges == 0);
    // same clustered subnetwork as the full pipeline restricted to g_c's nodes
    Graph full_on_gc = induced_subgraph_by_id(full.graph, g_c.node_ids());
    Graph params_on_gc = induced_subgraph_by_id(from_params.graph, g_c.node_ids());
    CHECK(full_on_gc == params_on_gc);
}

TEST_CASE("manifest names the variant, strategy and seed") {
    RealFixture fx = make_real_fixture(17, {.num_clusters = 3,
                                            .min_cluster = 4,
                                            .max_cluster = 8});
    PipelineConfig cfg;
    cfg.variant = GenerationVariant::reccs_v2;
    cfg.outliers = OutlierStrategy::s2;
    cfg.master_seed = 90210;
    PipelineResult r = run_pipeline(fx.g, fx.c, cfg);

    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() /
                    ("reccs_manifest_" + std::to_string(::getpid()) + ".txt");
    write_manifest(r, cfg, path.string());
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("reccs-v2") != std::string::npos);
    CHECK(text.find("s2") != std::string::npos);
    CHECK(text.find("90210") != std::string::npos);
    fs::remove(path);
}
