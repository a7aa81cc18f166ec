#include <doctest.h>

#include "reccs/mincut.hpp"
#include "test_support.hpp"

using namespace reccs;
using namespace reccs::testing;

namespace {

void check_witness(const Graph& g, const CutResult& cut) {
    REQUIRE(!cut.side_a.empty());
    REQUIRE(!cut.side_b.empty());
    CHECK(cut.side_a.size() + cut.side_b.size() == g.num_nodes());
    std::vector<bool> in_a(g.num_nodes(), false);
    for (Vertex v : cut.side_a) in_a[v] = true;
    for (Vertex v : cut.side_b) CHECK(!in_a[v]);
    CHECK(count_crossing_edges(g, in_a) == cut.value);
}

}  // namespace

TEST_CASE("single edge has cut value 1") {
    Graph g = Graph::from_edges({}, {{0, 1}});
    auto cut = global_min_cut(g);
    CHECK(cut.value == 1);
    check_witness(g, cut);
}

TEST_CASE("K4 has cut value 3") {
    auto cut = global_min_cut(complete_graph(4));
    CHECK(cut.value == 3);
}

TEST_CASE("two K4s joined by 2 edges split at the bridge") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(i + 4, j + 4);
        }
    }
    edges.emplace_back(0, 4);
    edges.emplace_back(1, 5);
    Graph g = Graph::from_edges({}, edges);
    auto cut = global_min_cut(g);
    CHECK(cut.value == 2);
    check_witness(g, cut);
    CHECK(cut.side_a.size() == 4);  // one K4 on each side
}

TEST_CASE("contract errors") {
    CHECK_THROWS_AS(global_min_cut(Graph::from_edges({0}, {})), std::invalid_argument);
    CHECK_THROWS_AS(global_min_cut(Graph::from_edges({}, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_min_cut(complete_graph(21)), std::invalid_argument);
}

TEST_CASE("brute force oracle on small named graphs") {
    CHECK(brute_force_min_cut(path_graph(3)).value == 1);
    CHECK(brute_force_min_cut(cycle_graph(5)).value == 2);
    CHECK(brute_force_min_cut(complete_graph(5)).value == 4);
}

TEST_CASE("min_cut_at_least with and without witness") {
    Graph tri = complete_graph(3);
    CHECK(min_cut_at_least(tri, 2).at_least);
    auto check = min_cut_at_least(tri, 3);
    CHECK(!check.at_least);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->value == 2);
    check_witness(tri, *check.witness);

    RngStream rng(3);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_connected_graph(8, 6, rng);
        CHECK(min_cut_at_least(g, 1).at_least);  // connected => cut >= 1
    }
}

TEST_CASE("Stoer-Wagner agrees with the brute-force oracle") {
    RngStream rng(1234);
    int tested = 0;
    while (tested < 250) {
        const std::size_t n = 2 + rng.uniform(11);
        Graph g = random_graph(n, rng.uniform(2 * n + 1), rng);
        if (!is_connected(g) || g.num_nodes() < 2) continue;
        ++tested;
        auto fast = global_min_cut(g);
        auto exact = brute_force_min_cut(g);
        CHECK(fast.value == exact.value);
        check_witness(g, fast);
        // min cut never exceeds min degree
        std::size_t min_deg = g.num_nodes();
        for (Vertex v = 0; v < g.num_nodes(); ++v) min_deg = std::min(min_deg, g.degree(v));
        CHECK(fast.value <= min_deg);
    }
}
