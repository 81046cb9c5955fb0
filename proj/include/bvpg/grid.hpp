#pragma once

#include <optional>
#include <vector>

#include "bvpg/graph.hpp"

namespace bvpg {

enum class Orientation { Horizontal, Vertical };

struct GridPoint {
    int x = 0;  // column
    int y = 0;  // row

    bool operator==(const GridPoint&) const = default;
};

// A horizontal path lies on row `line` over columns [lo, hi]; a vertical
// path lies on column `line` over rows [lo, hi]. lo == hi is a single grid
// point, whose orientation is irrelevant for intersection.
struct GridPath {
    Vertex v = 0;
    Orientation dir = Orientation::Horizontal;
    int line = 0;
    int lo = 0;
    int hi = 0;

    bool is_point() const { return lo == hi; }
    bool operator==(const GridPath&) const = default;
};

// Closed axis-aligned box; every grid path is a degenerate one.
struct GridBox {
    int x0, x1, y0, y1;

    bool empty() const { return x0 > x1 || y0 > y1; }
    bool contains(GridPoint p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

GridBox footprint(const GridPath& p);
GridBox intersect(const GridBox& a, const GridBox& b);

bool paths_intersect(const GridPath& p, const GridPath& q);

// paths[v] is the path of vertex v. rows/cols bound every used coordinate.
struct GridRepresentation {
    std::vector<GridPath> paths;
    int rows = 0;
    int cols = 0;

    bool operator==(const GridRepresentation&) const = default;
};

// Smallest rows/cols covering the paths.
void fit_extent(GridRepresentation& rep);

// Rank-compresses used rows and used columns independently.
GridRepresentation compact(const GridRepresentation& rep);

GridRepresentation translate(const GridRepresentation& rep, int dx, int dy);

// How a clique's paths meet: along a common row/column, or crossing at a
// single center point.
struct CliqueRep {
    enum class Kind { Line, Cross } kind = Kind::Line;
    Orientation axis = Orientation::Horizontal;  // Line only
    int line = 0;                                // Line only
    GridPoint center;  // Cross: the center; Line: one common point
};

}  // namespace bvpg
