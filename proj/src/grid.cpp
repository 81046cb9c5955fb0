#include "bvpg/grid.hpp"

#include <algorithm>

namespace bvpg {

GridBox footprint(const GridPath& p) {
    if (p.dir == Orientation::Horizontal) return {p.lo, p.hi, p.line, p.line};
    return {p.line, p.line, p.lo, p.hi};
}

GridBox intersect(const GridBox& a, const GridBox& b) {
    return {std::max(a.x0, b.x0), std::min(a.x1, b.x1), std::max(a.y0, b.y0), std::min(a.y1, b.y1)};
}

bool paths_intersect(const GridPath& p, const GridPath& q) { return !intersect(footprint(p), footprint(q)).empty(); }

void fit_extent(GridRepresentation& rep) {
    rep.rows = rep.cols = 0;
    for (const auto& p : rep.paths) {
        auto b = footprint(p);
        rep.cols = std::max(rep.cols, b.x1 + 1);
        rep.rows = std::max(rep.rows, b.y1 + 1);
    }
}

GridRepresentation compact(const GridRepresentation& rep) {
    std::vector<int> xs, ys;
    for (const auto& p : rep.paths) {
        auto b = footprint(p);
        xs.insert(xs.end(), {b.x0, b.x1});
        ys.insert(ys.end(), {b.y0, b.y1});
    }
    auto squeeze = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    squeeze(xs);
    squeeze(ys);
    auto rank = [](const std::vector<int>& v, int c) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };

    GridRepresentation out;
    out.paths.reserve(rep.paths.size());
    for (auto p : rep.paths) {
        const auto& along = p.dir == Orientation::Horizontal ? xs : ys;
        const auto& across = p.dir == Orientation::Horizontal ? ys : xs;
        p.line = rank(across, p.line);
        p.lo = rank(along, p.lo);
        p.hi = rank(along, p.hi);
        out.paths.push_back(p);
    }
    out.cols = static_cast<int>(xs.size());
    out.rows = static_cast<int>(ys.size());
    return out;
}

GridRepresentation translate(const GridRepresentation& rep, int dx, int dy) {
    GridRepresentation out = rep;
    for (auto& p : out.paths) {
        int along = p.dir == Orientation::Horizontal ? dx : dy;
        int across = p.dir == Orientation::Horizontal ? dy : dx;
        p.line += across;
        p.lo += along;
        p.hi += along;
    }
    fit_extent(out);
    return out;
}

}  // namespace bvpg
