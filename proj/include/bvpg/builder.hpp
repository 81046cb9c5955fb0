#pragma once

#include <string>
#include <vector>

#include "bvpg/graph.hpp"
#include "bvpg/grid.hpp"
#include "bvpg/recognizer.hpp"

namespace bvpg {

enum class Direction { North, East, South, West };

const char* to_string(Direction d);

// Grid-refining construction of a representation along the BFS block order.
//
// Coordinates are tokens in an order-maintained list per axis, so a new
// coordinate can always be inserted strictly between two existing ones. Each
// cutpoint owns one free box per free direction: an open rectangle that its
// own path enters and that no other path touches. Blocks hanging below a
// cutpoint are placed inside its free boxes, and their cutpoints receive
// nested, pairwise disjoint boxes.
class RepresentationBuilder {
public:
    // `a` must come from analyze(g, ...) and carry no violation.
    RepresentationBuilder(const Graph& g, const Analysis& a);

    void represent_first_block();
    // Places every block whose c(i) is `v`.
    void attach_blocks(Vertex v);
    // Compacted result; every vertex must be placed.
    GridRepresentation finalize() const;

    // Free-box hygiene and the farthest-line invariant for every placed
    // cutpoint; empty when both hold.
    std::vector<std::string> check_invariants() const;

private:
    struct Axis {
        std::vector<int> next, prev;
        int head = 0, tail = 1;

        Axis();
        int insert_after(int t);
        int insert_before(int t);
        int step(int t, int sign) { return sign > 0 ? insert_after(t) : insert_before(t); }
        std::vector<int> ranks() const;
    };

    struct TokenPath {
        Orientation dir = Orientation::Horizontal;
        int line = -1, lo = -1, hi = -1;
    };

    struct FreeBox {
        Vertex owner;
        Direction dir;
        int along_in, along_out;  // exclusive bounds on the along axis
        int perp_lo, perp_hi;     // exclusive bounds across
        bool used = false;
    };

    // Along-axis tokens of one attached block: am < center < a1 in the
    // box's direction.
    struct Slot {
        int block;
        bool heavy;
        int am = -1, center = -1, a1 = -1;
    };

    enum class Role { None, Full, Plus, Minus, Forward };

    std::vector<std::pair<Vertex, Role>> roles_for(int block, Vertex parent) const;
    bool is_heavy(int block, Vertex parent) const;
    void place_block(const Slot& slot, Vertex parent, const FreeBox& box, int bm, int bp);
    void set_point(Vertex v, int x_token, int y_token);
    GridRepresentation materialize(std::vector<char>* placed_mask) const;

    const Graph& g_;
    const Analysis& a_;
    Axis xs_, ys_;
    std::vector<TokenPath> paths_;
    std::vector<char> placed_;
    std::vector<std::vector<FreeBox>> boxes_;  // per cutpoint
};

// Builds, self-checking after every step when `self_check` is set (throws
// std::logic_error on a broken invariant).
GridRepresentation build_representation(const Graph& g, const Analysis& a, bool self_check = false);

}  // namespace bvpg
