#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bvpg/certifier.hpp"
#include "bvpg/family.hpp"
#include "bvpg/verifier.hpp"
#include "support.hpp"

using namespace bvpg;

namespace {

VertexSet all_vertices(const Graph& g) {
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v) s.push_back(v);
    return s;
}

}  // namespace

TEST_CASE("five-leg spider") {
    Graph n5 = thin_spider(5);
    auto c = extract_certificate(n5, analyze(n5));
    CHECK(c.vertices == all_vertices(n5));
    CHECK(c.family_k == 0);
    CHECK(verify_certificate(n5, c));
}

TEST_CASE("members certify themselves from every start block") {
    for (const auto& m : enumerate_family(37)) {
        auto d = decompose(m.graph);
        for (int start = 0; start < d.block_count(); ++start) {
            auto a = analyze(m.graph, start);
            REQUIRE(a.violation);
            auto c = extract_certificate(m.graph, a);
            CHECK(c.vertices == all_vertices(m.graph));
            CHECK(c.family_k == m.k);
        }
    }
}

TEST_CASE("an extra leaf is left out") {
    Graph f = family_members(1).front().graph;
    Vertex leaf = -1;
    for (Vertex v = 0; v < f.order() && leaf < 0; ++v)
        if (f.degree(v) == 1) leaf = v;
    Graph g = f;
    g.add_edge(leaf, g.add_vertex());
    for (int start = 0; start < decompose(g).block_count(); ++start) {
        auto c = extract_certificate(g, analyze(g, start));
        CHECK(c.vertices.size() == 19);
        CHECK(verify_certificate(g, c));
        CHECK(find_induced_f_member(g));
    }
}

TEST_CASE("certificate verification") {
    Graph n5 = thin_spider(5);
    CHECK(verify_certificate(n5, {all_vertices(n5), 0}));
    CHECK_FALSE(verify_certificate(n5, {all_vertices(n5), 1}));
    CHECK_FALSE(verify_certificate(n5, {{0, 1, 2, 3, 4, 5, 6, 7, 8}, 0}));
    CHECK_FALSE(verify_certificate(n5, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 12}, 0}));
    CHECK_FALSE(verify_certificate(n5, {{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}, 0}));
    std::mt19937_64 rng(6);
    Graph tree = testing::random_block_graph(rng, 30, {0, 0, 1});
    CHECK_FALSE(verify_certificate(tree, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 0}));
}

TEST_CASE("planted members are found and certified") {
    std::mt19937_64 rng(12);
    const auto& members = enumerate_family(37);
    int surgeries = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto& m = members[static_cast<std::size_t>(trial) % members.size()];
        Graph g = testing::plant_member(m.graph, m.graph.order() + trial % 9, rng);
        auto d = decompose(g);
        int start = std::uniform_int_distribution<int>(0, d.block_count() - 1)(rng);
        auto a = analyze(g, start, static_cast<std::uint64_t>(trial));
        REQUIRE(a.violation);
        if (a.violation->condition != ClaimViolation::Condition::I) ++surgeries;
        auto c = extract_certificate(g, a);
        CHECK(verify_certificate(g, c));
        CHECK(find_induced_f_member(g));
    }
    CHECK(surgeries > 0);
}

TEST_CASE("rejects an analysis without a violation") {
    Graph p = path_graph(4);
    CHECK_THROWS_AS(extract_certificate(p, analyze(p)), std::logic_error);
}
