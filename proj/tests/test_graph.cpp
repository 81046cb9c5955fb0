#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bvpg/family.hpp"
#include "bvpg/graph.hpp"
#include "support.hpp"

using namespace bvpg;

TEST_CASE("graph construction rejects loops and reports duplicates") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("adjacency is symmetric and edges are listed once") {
    std::mt19937_64 rng(11);
    Graph g = testing::random_block_graph(rng, 25, {0, 0, 2, 1, 1});
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        degree_sum += static_cast<std::size_t>(g.degree(v));
        for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(g.edges().size() == g.size());
}

TEST_CASE("induced subgraph") {
    SUBCASE("restriction of K4 to three vertices is K3") {
        auto s = induced_subgraph(complete_graph(4), {0, 1, 2});
        CHECK(s.graph.order() == 3);
        CHECK(s.graph.size() == 3);
    }
    SUBCASE("ends of a path are nonadjacent") {
        auto s = induced_subgraph(path_graph(3), {0, 2});
        CHECK(s.graph.order() == 2);
        CHECK(s.graph.size() == 0);
        CHECK(s.to_parent == std::vector<Vertex>{0, 2});
    }
    SUBCASE("clique of the five-leg spider") {
        auto s = induced_subgraph(thin_spider(5), {0, 1, 2, 3, 4});
        CHECK(s.graph == complete_graph(5));
    }
    SUBCASE("full vertex set is the identity") {
        Graph g = thin_spider(4);
        CHECK(induced_subgraph(g, {0, 1, 2, 3, 4, 5, 6, 7}).graph == g);
    }
    SUBCASE("out of range") { CHECK_THROWS_AS(induced_subgraph(path_graph(3), {0, 5}), InputError); }
}

TEST_CASE("connected components") {
    CHECK(connected_components(complete_graph(3)) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(connected_components(Graph(2)) == std::vector<VertexSet>{{0}, {1}});

    Graph n5 = thin_spider(5);
    auto rest = induced_subgraph(n5, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto comps = connected_components(rest.graph);
    REQUIRE(comps.size() == 2);
    // Spider leg 5 hangs on clique vertex 0 only.
    CHECK(comps[0].size() == 8);
    CHECK(comps[1] == VertexSet{4});
    CHECK(rest.to_parent[4] == 5);

    std::mt19937_64 rng(2);
    Graph g(30);
    for (int i = 0; i < 25; ++i) {
        Vertex u = std::uniform_int_distribution<Vertex>(0, 29)(rng);
        Vertex v = std::uniform_int_distribution<Vertex>(0, 29)(rng);
        if (u != v) g.add_edge(u, v);
    }
    std::vector<int> hits(30, 0);
    for (const auto& c : connected_components(g))
        for (Vertex v : c) ++hits[v];
    for (int h : hits) CHECK(h == 1);
}

TEST_CASE("find_induced_copy") {
    SUBCASE("triangle in K4") { CHECK(find_induced_copy(complete_graph(3), complete_graph(4))); }
    SUBCASE("triangle in a tree") {
        std::mt19937_64 rng(5);
        CHECK_FALSE(find_induced_copy(complete_graph(3), testing::random_block_graph(rng, 20, {0, 0, 1})));
    }
    SUBCASE("five-leg spider in the 19-vertex family member") {
        CHECK_FALSE(find_induced_copy(thin_spider(5), family_members(1).front().graph));
    }
    SUBCASE("path is not an induced subgraph of a clique") {
        CHECK_FALSE(find_induced_copy(path_graph(3), complete_graph(6)));
    }
    SUBCASE("returned map is an induced embedding") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            Graph host = testing::random_block_graph(rng, 30, {0, 0, 3, 2, 1});
            Graph pattern = testing::random_block_graph(rng, 6, {0, 0, 3, 1});
            auto phi = find_induced_copy(pattern, host);
            if (!phi) continue;
            CHECK(make_vertex_set(*phi).size() == phi->size());
            for (Vertex u = 0; u < pattern.order(); ++u)
                for (Vertex v = u + 1; v < pattern.order(); ++v)
                    CHECK(pattern.has_edge(u, v) == host.has_edge((*phi)[u], (*phi)[v]));
        }
    }
    SUBCASE("deterministic") {
        Graph host = family_members(1).front().graph;
        CHECK(find_induced_copy(complete_graph(4), host) == find_induced_copy(complete_graph(4), host));
    }
}

TEST_CASE("small generators") {
    CHECK(complete_graph(5).size() == 10);
    CHECK(path_graph(5).size() == 4);
    CHECK(cycle_graph(4).size() == 4);
    CHECK(star_graph(4).order() == 5);
    CHECK(star_graph(4).degree(0) == 4);
}
