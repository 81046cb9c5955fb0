#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bvpg/builder.hpp"
#include "bvpg/family.hpp"
#include "bvpg/verifier.hpp"
#include "support.hpp"

using namespace bvpg;

namespace {

int block_index(const BlockDecomposition& d, const VertexSet& members) {
    for (int b = 0; b < d.block_count(); ++b)
        if (d.blocks[b] == members) return b;
    FAIL("no such block");
    return -1;
}

GridRepresentation build_checked(const Graph& g, int start = 0, std::optional<std::uint64_t> seed = {}) {
    auto a = analyze(g, start, seed);
    REQUIRE_FALSE(a.violation);
    auto rep = build_representation(g, a, true);
    auto report = verify_with_lemmas(g, rep);
    CHECK(report.mismatches.empty());
    CHECK(report.lemma_failures.empty());
    return rep;
}

Graph clique_with_legs(int k, int legs) {
    Graph g = complete_graph(k);
    for (int i = 0; i < legs; ++i) g.add_edge(i, g.add_vertex());
    return g;
}

}  // namespace

TEST_CASE("single vertex and single edge") {
    auto one = build_checked(Graph(1));
    CHECK(one.paths[0] == GridPath{0, Orientation::Horizontal, 0, 0, 0});
    auto edge = build_checked(path_graph(2));
    for (const auto& p : edge.paths) {
        CHECK(p.dir == Orientation::Horizontal);
        CHECK(p.line == 0);
    }
}

TEST_CASE("K4 alone is a line clique") {
    auto rep = build_checked(complete_graph(4));
    auto c = classify_clique_rep(rep, {0, 1, 2, 3});
    REQUIRE(c.rep);
    CHECK(c.rep->kind == CliqueRep::Kind::Line);
}

TEST_CASE("triangle with one leg: the cutpoint reaches farthest east") {
    Graph g = clique_with_legs(3, 1);
    auto rep = build_checked(g, block_index(decompose(g), {0, 1, 2}));
    auto c = classify_clique_rep(rep, {0, 1, 2});
    REQUIRE(c.rep);
    CHECK(c.rep->kind == CliqueRep::Kind::Line);
    auto far = unique_farthest(rep, {0, 1, 2}, c.rep->center);
    CHECK(far[1] == 0);
}

TEST_CASE("K4 with four legs is a cross with one cutpoint per direction") {
    Graph g = clique_with_legs(4, 4);
    const VertexSet clique{0, 1, 2, 3};
    auto rep = build_checked(g, block_index(decompose(g), clique));
    auto c = classify_clique_rep(rep, clique);
    REQUIRE(c.rep);
    CHECK(c.rep->kind == CliqueRep::Kind::Cross);
    auto far = unique_farthest(rep, clique, c.rep->center);
    VertexSet owners;
    for (auto v : far) {
        REQUIRE(v);
        owners.push_back(*v);
    }
    CHECK(make_vertex_set(owners) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("stars, caterpillars and the four-leg spider") {
    for (int leaves = 1; leaves <= 12; ++leaves) build_checked(star_graph(leaves));
    Graph caterpillar = path_graph(8);
    for (Vertex v = 0; v < 8; ++v)
        for (int i = 0; i < v % 3; ++i) caterpillar.add_edge(v, caterpillar.add_vertex());
    build_checked(caterpillar);
    Graph n4 = thin_spider(4);
    for (int start = 0; start < decompose(n4).block_count(); ++start) build_checked(n4, start);
}

TEST_CASE("two K4s with legs sharing a vertex") {
    Graph g(13);
    for (VertexSet q : {VertexSet{0, 1, 2, 3}, VertexSet{0, 4, 5, 6}})
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j) g.add_edge(q[i], q[j]);
    for (Vertex v = 1; v <= 6; ++v) g.add_edge(v, v + 6);
    auto d = decompose(g);
    for (int start = 0; start < d.block_count(); ++start) {
        auto rep = build_checked(g, start);
        CHECK(check_cardinal_lemmas(g, d, rep).empty());
    }
}

TEST_CASE("members minus a vertex exercise two free directions") {
    // Deleting a spider leg of the 19-vertex member leaves the contracted
    // vertex labelled B below a block with three cutpoints.
    Graph f = family_members(1).front().graph;
    int with_b = 0;
    for (Vertex gone = 0; gone < f.order(); ++gone) {
        VertexSet rest;
        for (Vertex v = 0; v < f.order(); ++v)
            if (v != gone) rest.push_back(v);
        Graph h = induced_subgraph(f, rest).graph;
        for (const auto& comp : connected_components(h)) {
            Graph c = induced_subgraph(h, comp).graph;
            auto d = decompose(c);
            for (int start = 0; start < d.block_count(); ++start) {
                auto a = analyze(c, start);
                REQUIRE_FALSE(a.violation);
                for (Vertex v : d.cutpoints) with_b += a.labels.is_b(v) ? 1 : 0;
                build_checked(c, start);
            }
        }
    }
    CHECK(with_b > 0);
}

TEST_CASE("invariants hold after every step on random graphs") {
    std::uint64_t seed = 0;
    for (const auto& g : testing::random_family_free_corpus(31, 80, 60)) {
        auto d = decompose(g);
        build_checked(g, static_cast<int>(seed % static_cast<std::uint64_t>(d.block_count())), seed);
        ++seed;
    }
}

TEST_CASE("refuses an analysis with a violation") {
    Graph n5 = thin_spider(5);
    auto a = analyze(n5);
    CHECK_THROWS_AS(build_representation(n5, a), std::logic_error);
}
