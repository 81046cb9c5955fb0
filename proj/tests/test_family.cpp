#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvpg/block_decomposition.hpp"
#include "bvpg/canonical.hpp"
#include "bvpg/family.hpp"

using namespace bvpg;

TEST_CASE("thin spiders") {
    CHECK(thin_spider(3).order() == 6);
    CHECK(thin_spider(3).size() == 6);
    CHECK(thin_spider(5).order() == 10);
    CHECK(thin_spider(5).size() == 15);
    auto d = decompose(thin_spider(5));
    CHECK(d.block_count() == 6);
    CHECK(d.cutpoints.size() == 5);
    CHECK(thin_spider(4).has_edge(1, 5));
    CHECK_FALSE(thin_spider(4).has_edge(1, 6));
    CHECK_THROWS_AS(thin_spider(1), InputError);
}

TEST_CASE("one application to the five-leg spider") {
    Graph n5 = thin_spider(5);
    auto steps = procedure_steps(n5);
    REQUIRE_FALSE(steps.empty());
    std::optional<std::string> form;
    for (const auto& step : steps) {
        auto applied = apply_procedure(n5, step);
        CHECK(applied.graph.order() == n5.order() + 9);
        CHECK(applied.new_id[step.v1] == -1);
        CHECK(applied.new_id[step.v2] == -1);
        auto f = block_graph_canonical_form(applied.graph);
        REQUIRE(f);
        if (form) CHECK(*f == *form);
        form = f;
    }
    CHECK(*form == family_members(1).front().canonical);
}

TEST_CASE("procedure preconditions") {
    Graph n5 = thin_spider(5);
    CHECK_THROWS_AS(apply_procedure(n5, {{0, 1, 2, 3}, 0, 0}), InputError);
    CHECK_THROWS_AS(apply_procedure(n5, {{0, 1, 2, 5}, 0, 1}), InputError);
    CHECK_THROWS_AS(apply_procedure(n5, {{0, 1, 2, 3}, 0, 4}), InputError);
    CHECK_THROWS_AS(apply_procedure(complete_graph(4), {{0, 1, 2, 3}, 0, 1}), InputError);
}

TEST_CASE("enumeration bounds") {
    CHECK(enumerate_family(18).size() == 1);
    CHECK(enumerate_family(19).size() == 2);
    CHECK(enumerate_family(9).empty());
    const auto& upto28 = enumerate_family(28);
    REQUIRE(upto28.size() == 3);
    CHECK(upto28[0].graph.order() == 10);
    CHECK(upto28[1].graph.order() == 19);
    CHECK(upto28[2].graph.order() == 28);
}

TEST_CASE("members per number of applications") {
    // Regression values from exhaustive application with isomorphism dedup.
    const std::vector<std::size_t> counts{1, 1, 1, 1, 2};
    for (int k = 0; k <= 4; ++k) {
        auto members = family_members(k);
        CHECK(members.size() == counts[k]);
        for (std::size_t i = 0; i < members.size(); ++i) {
            CHECK(members[i].k == k);
            CHECK(members[i].graph.order() == family_vertex_count(k));
            CHECK(is_block_graph(members[i].graph));
            for (std::size_t j = i + 1; j < members.size(); ++j)
                CHECK_FALSE(isomorphic_block_graphs(members[i].graph, members[j].graph));
        }
    }
}

TEST_CASE("structural properties of members") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& m : family_members(k)) {
            auto report = check_proposition(m.graph, k);
            CHECK_MESSAGE(report.ok, "k=" << k << " first failure: " << (report.failures.empty() ? "" : report.failures[0]));
            CHECK(report.counts == expected_family_counts(k));
        }
    auto one = family_counts(family_members(1).front().graph);
    CHECK(one.blocks == 12);
    CHECK(one.endblocks == 9);
    CHECK(one.almost_endblocks == 3);
    CHECK(one.internal_blocks == 0);
    CHECK(one.cutpoints == 10);
    CHECK(one.three_cutpoints == 1);
    CHECK(one.two_cutpoints == 9);
    CHECK(one.vertices == 19);
    auto two = family_counts(family_members(2).front().graph);
    CHECK(two.blocks == 18);
    CHECK(two.cutpoints == 15);
    CHECK(two.vertices == 28);
    CHECK_THROWS_AS(check_proposition(thin_spider(5), 0), InputError);
    CHECK_FALSE(check_proposition(thin_spider(5), 1).ok);
}

TEST_CASE("minimality") {
    CHECK(check_minimality(thin_spider(5)));
    CHECK(check_minimality(family_members(1).front().graph));
    Graph k5_pendants = thin_spider(5);
    auto rest = induced_subgraph(k5_pendants, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_FALSE(find_induced_family_member(rest.graph));
    // A graph that strictly contains a member is not minimal.
    Graph bigger = thin_spider(5);
    Vertex extra = bigger.add_vertex();
    bigger.add_edge(extra, 5);
    CHECK_FALSE(check_minimality(bigger));
}

TEST_CASE("family membership lookup") {
    for (const auto& m : enumerate_family(37)) CHECK(family_member_k(m.graph) == m.k);
    CHECK_FALSE(family_member_k(thin_spider(4)));
    CHECK_FALSE(family_member_k(Graph(10)));
}
