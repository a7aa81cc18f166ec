#include <doctest.h>

#include "reccs/graph.hpp"
#include "test_support.hpp"

using namespace reccs;
using namespace reccs::testing;

TEST_CASE("graph construction collapses duplicates and loops") {
    Graph g = Graph::from_edges({}, {{1, 2}, {2, 1}, {1, 1}, {2, 3}});
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(g.vertex_of(1), g.vertex_of(2)));
    CHECK(!g.has_edge(g.vertex_of(1), g.vertex_of(3)));
}

TEST_CASE("graph keeps isolated nodes") {
    Graph g = Graph::from_edges({5, 7}, {{1, 2}});
    CHECK(g.num_nodes() == 4);
    CHECK(g.degree(g.vertex_of(5)) == 0);
}

TEST_CASE("negative ids rejected") {
    CHECK_THROWS_AS(Graph::from_edges({-1}, {}), std::invalid_argument);
}

TEST_CASE("induced subgraph of a triangle edge pair") {
    Graph tri = complete_graph(3);
    std::vector<NodeId> nodes{0, 1};
    Graph sub = induced_subgraph_by_id(tri, nodes);
    CHECK(sub.num_nodes() == 2);
    CHECK(sub.num_edges() == 1);
}

TEST_CASE("induced subgraph on the full node set is the graph itself") {
    RngStream rng(7);
    Graph g = random_graph(12, 20, rng);
    CHECK(induced_subgraph_by_id(g, g.node_ids()) == g);
}

TEST_CASE("induced subgraph can be edgeless with nodes retained") {
    Graph p = path_graph(5);
    std::vector<NodeId> nodes{0, 2, 4};
    Graph sub = induced_subgraph_by_id(p, nodes);
    CHECK(sub.num_nodes() == 3);
    CHECK(sub.num_edges() == 0);
}

TEST_CASE("induced subgraph rejects unknown node ids") {
    Graph tri = complete_graph(3);
    std::vector<NodeId> nodes{0, 99};
    CHECK_THROWS_AS(induced_subgraph_by_id(tri, nodes), std::invalid_argument);
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph{}).empty());
    CHECK(connected_components(complete_graph(3)).size() == 1);

    Graph two = Graph::from_edges({}, {{0, 1}, {2, 3}});
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0, 1});
    CHECK(comps[1] == std::vector<Vertex>{2, 3});
}

TEST_CASE("components partition the node set") {
    RngStream rng(42);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(15, 10, rng);
        auto comps = connected_components(g);
        std::vector<bool> seen(g.num_nodes(), false);
        for (const auto& comp : comps) {
            for (Vertex v : comp) {
                CHECK(!seen[v]);
                seen[v] = true;
            }
        }
        for (bool s : seen) CHECK(s);
    }
}

TEST_CASE("simplify drops loops and parallels") {
    MultiGraph mg({1, 2});
    mg.add_edge(1, 1);
    mg.add_edge(1, 2);
    mg.add_edge(1, 2);
    Graph g = simplify(mg);
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("simplify keeps isolated nodes from loop-only edges") {
    MultiGraph mg({3, 4});
    mg.add_edge(3, 3);
    mg.add_edge(3, 3);
    Graph g = simplify(mg);
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("simplify round-trips simple graphs") {
    RngStream rng(9);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(10, 18, rng);
        CHECK(simplify(as_multigraph(g)) == g);
    }
}

TEST_CASE("clustering marks unlisted nodes as singleton outliers") {
    Graph g = complete_graph(3);
    Clustering c = Clustering::from_assignment(g, {{0, "A"}, {1, "A"}});
    CHECK(c.num_clusters() == 2);
    CHECK(c.num_outliers() == 1);
    CHECK(!c.is_outlier(g.vertex_of(0)));
    CHECK(c.is_outlier(g.vertex_of(2)));
    CHECK(c.non_singleton_clusters().size() == 1);
}

TEST_CASE("clustering rejects unknown nodes") {
    Graph g = complete_graph(3);
    CHECK_THROWS_AS(Clustering::from_assignment(g, {{42, "A"}}), std::invalid_argument);
}
