#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bvpg/grid.hpp"

using namespace bvpg;

namespace {

constexpr auto H = Orientation::Horizontal;
constexpr auto V = Orientation::Vertical;

GridRepresentation random_representation(std::mt19937_64& rng, int n, int extent) {
    std::uniform_int_distribution<int> coord(0, extent), flip(0, 1);
    GridRepresentation rep;
    for (int v = 0; v < n; ++v) {
        int a = coord(rng), b = coord(rng);
        rep.paths.push_back({v, flip(rng) ? H : V, coord(rng), std::min(a, b), std::max(a, b)});
    }
    fit_extent(rep);
    return rep;
}

std::vector<bool> intersection_matrix(const GridRepresentation& rep) {
    std::vector<bool> m;
    for (const auto& p : rep.paths)
        for (const auto& q : rep.paths) m.push_back(paths_intersect(p, q));
    return m;
}

}  // namespace

TEST_CASE("path intersection") {
    CHECK(paths_intersect({0, H, 0, 0, 2}, {1, V, 1, 0, 0}));
    CHECK_FALSE(paths_intersect({0, H, 0, 0, 2}, {1, H, 1, 0, 2}));
    CHECK(paths_intersect({0, H, 0, 0, 1}, {1, H, 0, 1, 3}));
    CHECK_FALSE(paths_intersect({0, H, 0, 0, 1}, {1, H, 0, 2, 3}));
    CHECK(paths_intersect({0, V, 4, 2, 6}, {1, H, 5, 0, 9}));
    CHECK_FALSE(paths_intersect({0, V, 4, 2, 6}, {1, H, 7, 0, 9}));
    // A point has no meaningful orientation.
    CHECK(paths_intersect({0, H, 3, 2, 2}, {1, V, 2, 0, 5}));
    CHECK(paths_intersect({0, V, 2, 3, 3}, {1, V, 2, 0, 5}));
}

TEST_CASE("intersection is symmetric") {
    std::mt19937_64 rng(1);
    auto rep = random_representation(rng, 60, 8);
    for (const auto& p : rep.paths)
        for (const auto& q : rep.paths) CHECK(paths_intersect(p, q) == paths_intersect(q, p));
}

TEST_CASE("compaction") {
    GridRepresentation one{{{0, H, 7, 100, 200}}, 0, 0};
    auto c = compact(one);
    CHECK(c.paths[0] == GridPath{0, H, 0, 0, 1});
    CHECK(c.rows == 1);
    CHECK(c.cols == 2);

    GridRepresentation cross{{{0, H, 9, 2, 5}, {1, V, 5, 9, 12}}, 0, 0};
    auto cc = compact(cross);
    CHECK(paths_intersect(cc.paths[0], cc.paths[1]));
    CHECK(cc.paths[0] == GridPath{0, H, 0, 0, 1});
    CHECK(cc.paths[1] == GridPath{1, V, 1, 0, 1});
}

TEST_CASE("compaction preserves intersections") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto rep = random_representation(rng, std::uniform_int_distribution<int>(1, 30)(rng), 40);
        auto c = compact(rep);
        CHECK(intersection_matrix(c) == intersection_matrix(rep));
        for (const auto& p : c.paths) {
            CHECK(p.lo <= p.hi);
            CHECK(p.lo >= 0);
            GridBox b = footprint(p);
            CHECK(b.x1 < c.cols);
            CHECK(b.y1 < c.rows);
        }
        CHECK(compact(c) == c);
    }
}

TEST_CASE("translation and extent") {
    GridRepresentation rep{{{0, H, 1, 0, 2}, {1, V, 3, 0, 4}}, 0, 0};
    fit_extent(rep);
    CHECK(rep.rows == 5);
    CHECK(rep.cols == 4);
    auto moved = translate(rep, 10, 1);
    CHECK(moved.paths[0] == GridPath{0, H, 2, 10, 12});
    CHECK(moved.paths[1] == GridPath{1, V, 13, 1, 5});
    CHECK(moved.cols == 14);
    CHECK(moved.rows == 6);
}
