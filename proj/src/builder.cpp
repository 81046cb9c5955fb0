#include "bvpg/builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "bvpg/verifier.hpp"

namespace bvpg {

namespace {

bool vertical(Direction d) { return d == Direction::North || d == Direction::South; }
int sign(Direction d) { return (d == Direction::North || d == Direction::East) ? 1 : -1; }

Direction plus_across(Direction d) { return vertical(d) ? Direction::East : Direction::North; }
Direction minus_across(Direction d) { return vertical(d) ? Direction::West : Direction::South; }

// Paths running along the y axis are vertical.
Orientation along(Direction d) { return vertical(d) ? Orientation::Vertical : Orientation::Horizontal; }
Orientation across(Direction d) { return vertical(d) ? Orientation::Horizontal : Orientation::Vertical; }

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("builder: " + what); }

}  // namespace

const char* to_string(Direction d) {
    switch (d) {
        case Direction::North: return "N";
        case Direction::East: return "E";
        case Direction::South: return "S";
        case Direction::West: return "W";
    }
    return "?";
}

RepresentationBuilder::Axis::Axis() : next{1, -1}, prev{-1, 0} {}

int RepresentationBuilder::Axis::insert_after(int t) {
    if (t == tail) fail("insert after +infinity");
    int id = static_cast<int>(next.size());
    int succ = next[t];
    next.push_back(succ);
    prev.push_back(t);
    next[t] = id;
    prev[succ] = id;
    return id;
}

int RepresentationBuilder::Axis::insert_before(int t) {
    if (t == head) fail("insert before -infinity");
    return insert_after(prev[t]);
}

std::vector<int> RepresentationBuilder::Axis::ranks() const {
    std::vector<int> r(next.size(), -1);
    int rank = 0;
    for (int t = next[head]; t != tail; t = next[t]) r[t] = rank++;
    return r;
}

RepresentationBuilder::RepresentationBuilder(const Graph& g, const Analysis& a)
    : g_(g), a_(a), paths_(static_cast<std::size_t>(g.order())), placed_(static_cast<std::size_t>(g.order()), 0),
      boxes_(static_cast<std::size_t>(g.order())) {
    if (a.violation) fail("analysis carries a rejecting condition");
}

void RepresentationBuilder::set_point(Vertex v, int x_token, int y_token) {
    paths_[v] = {Orientation::Horizontal, y_token, x_token, x_token};
    placed_[v] = 1;
}

void RepresentationBuilder::represent_first_block() {
    const auto& d = a_.decomposition;
    const int h1 = a_.order.first_block();
    const auto& cuts = a_.order.child_cuts[h1];

    const int x0 = xs_.insert_after(xs_.head);
    const int y0 = ys_.insert_after(ys_.head);
    const int xm = xs_.insert_before(x0), x1 = xs_.insert_after(x0);
    const int ym = ys_.insert_before(y0), y1 = ys_.insert_after(y0);

    for (Vertex v : d.blocks[h1]) set_point(v, x0, y0);

    // Pinwheel around the center: the four boxes are pairwise disjoint.
    auto box = [&](Vertex c, Direction dir) {
        switch (dir) {
            case Direction::North: boxes_[c].push_back({c, dir, y1, ys_.tail, xm, x1}); break;
            case Direction::South: boxes_[c].push_back({c, dir, ym, ys_.head, xm, x1}); break;
            case Direction::East: boxes_[c].push_back({c, dir, x1, xs_.tail, ym, y1}); break;
            case Direction::West: boxes_[c].push_back({c, dir, xm, xs_.head, ym, y1}); break;
        }
    };
    auto vertical_full = [&](Vertex c) {
        paths_[c] = {Orientation::Vertical, x0, ys_.insert_before(ym), ys_.insert_after(y1)};
        box(c, Direction::North);
        box(c, Direction::South);
    };
    auto horizontal_full = [&](Vertex c) {
        paths_[c] = {Orientation::Horizontal, y0, xs_.insert_before(xm), xs_.insert_after(x1)};
        box(c, Direction::East);
        box(c, Direction::West);
    };
    auto half = [&](Vertex c, Direction dir) {
        switch (dir) {
            case Direction::North: paths_[c] = {Orientation::Vertical, x0, y0, ys_.insert_after(y1)}; break;
            case Direction::South: paths_[c] = {Orientation::Vertical, x0, ys_.insert_before(ym), y0}; break;
            case Direction::East: paths_[c] = {Orientation::Horizontal, y0, x0, xs_.insert_after(x1)}; break;
            case Direction::West: paths_[c] = {Orientation::Horizontal, y0, xs_.insert_before(xm), x0}; break;
        }
        box(c, dir);
    };

    std::vector<Vertex> bs, as;
    for (Vertex c : cuts) (a_.labels.is_b(c) ? bs : as).push_back(c);

    switch (cuts.size()) {
        case 0: break;
        case 1: horizontal_full(cuts[0]); break;
        case 2:
            vertical_full(cuts[0]);
            horizontal_full(cuts[1]);
            break;
        case 3: {
            if (bs.size() >= 2) fail("first block has label multiset with two B among three cutpoints");
            std::vector<Vertex> rest = cuts;
            Vertex axis_owner = bs.empty() ? cuts[0] : bs[0];
            rest.erase(std::find(rest.begin(), rest.end(), axis_owner));
            vertical_full(axis_owner);
            half(rest[0], Direction::East);
            half(rest[1], Direction::West);
            break;
        }
        case 4:
            if (!bs.empty()) fail("first block with four cutpoints has a B label");
            half(cuts[0], Direction::North);
            half(cuts[1], Direction::South);
            half(cuts[2], Direction::East);
            half(cuts[3], Direction::West);
            break;
        default: fail("first block has more than four cutpoints");
    }
}

std::vector<std::pair<Vertex, RepresentationBuilder::Role>> RepresentationBuilder::roles_for(int block,
                                                                                            Vertex parent) const {
    std::vector<Vertex> others;
    for (Vertex c : a_.decomposition.block_cutpoints[block])
        if (c != parent) others.push_back(c);
    int b_count = 0;
    for (Vertex c : others) b_count += a_.labels.is_b(c) ? 1 : 0;

    std::vector<std::pair<Vertex, Role>> roles;
    switch (others.size()) {
        case 0: break;
        case 1: roles.emplace_back(others[0], Role::Full); break;
        case 2:
            if (b_count == 2) fail("block " + std::to_string(block) + " has two B cutpoints below one parent");
            if (b_count == 1) {
                Vertex b = a_.labels.is_b(others[0]) ? others[0] : others[1];
                Vertex f = b == others[0] ? others[1] : others[0];
                roles.emplace_back(b, Role::Full);
                roles.emplace_back(f, Role::Forward);
            } else {
                roles.emplace_back(others[0], Role::Plus);
                roles.emplace_back(others[1], Role::Minus);
            }
            break;
        case 3:
            if (b_count > 0) fail("block " + std::to_string(block) + " with four cutpoints has a B below its parent");
            roles.emplace_back(others[0], Role::Plus);
            roles.emplace_back(others[1], Role::Minus);
            roles.emplace_back(others[2], Role::Forward);
            break;
        default: fail("block " + std::to_string(block) + " has more than four cutpoints");
    }
    return roles;
}

bool RepresentationBuilder::is_heavy(int block, Vertex parent) const {
    for (auto& [c, role] : roles_for(block, parent))
        if (role == Role::Forward) return true;
    return false;
}

void RepresentationBuilder::attach_blocks(Vertex v) {
    const auto& children = a_.order.child_blocks[v];
    if (children.empty()) return;
    if (!placed_[v]) fail("cutpoint " + std::to_string(v) + " attached before being placed");

    const std::size_t usable = a_.labels.is_b(v) ? 2 : 1;
    if (boxes_[v].size() < usable) fail("cutpoint " + std::to_string(v) + " lacks free boxes");

    std::vector<Slot> light, heavy;
    for (int b : children) (is_heavy(b, v) ? heavy : light).push_back({b, false});
    for (auto& s : heavy) s.heavy = true;
    if (heavy.size() > usable)
        fail("cutpoint " + std::to_string(v) + " has " + std::to_string(heavy.size()) + " blocks needing an endpoint");

    std::vector<std::vector<Slot>> per_box(usable);
    per_box[0] = light;
    for (std::size_t i = 0; i < heavy.size(); ++i) per_box[i].push_back(heavy[i]);

    for (std::size_t bi = 0; bi < usable; ++bi) {
        auto& slots = per_box[bi];
        FreeBox& box = boxes_[v][bi];
        box.used = true;
        if (slots.empty()) continue;
        const int s = sign(box.dir);
        Axis& al = vertical(box.dir) ? ys_ : xs_;
        Axis& ac = vertical(box.dir) ? xs_ : ys_;
        TokenPath& pv = paths_[v];
        if (pv.dir != along(box.dir)) fail("free box of " + std::to_string(v) + " is not along its path");

        const int bm = ac.insert_before(pv.line);
        const int bp = ac.insert_after(pv.line);
        int cur = s > 0 ? pv.hi : pv.lo;
        for (auto& slot : slots) {
            slot.am = al.step(cur, s);
            slot.center = al.step(slot.am, s);
            slot.a1 = al.step(slot.center, s);
            cur = slot.a1;
        }
        (s > 0 ? pv.hi : pv.lo) = slots.back().center;
        const FreeBox frame = box;
        for (const auto& slot : slots) place_block(slot, v, frame, bm, bp);
    }
}

void RepresentationBuilder::place_block(const Slot& slot, Vertex parent, const FreeBox& box, int bm, int bp) {
    const Direction dir = box.dir;
    const int s = sign(dir);
    Axis& al = vertical(dir) ? ys_ : xs_;
    Axis& ac = vertical(dir) ? xs_ : ys_;
    const int line = paths_[parent].line;
    const int lo_across = s > 0 ? slot.am : slot.a1;
    const int hi_across = s > 0 ? slot.a1 : slot.am;

    for (Vertex v : a_.decomposition.blocks[slot.block]) {
        if (v == parent) continue;
        if (vertical(dir)) set_point(v, line, slot.center);
        else set_point(v, slot.center, line);
    }

    for (auto [c, role] : roles_for(slot.block, parent)) {
        TokenPath& p = paths_[c];
        const FreeBox plus{c, plus_across(dir), bp, box.perp_hi, lo_across, hi_across};
        const FreeBox minus{c, minus_across(dir), bm, box.perp_lo, lo_across, hi_across};
        switch (role) {
            case Role::Full:
                p = {across(dir), slot.center, ac.insert_before(bm), ac.insert_after(bp)};
                boxes_[c].push_back(plus);
                boxes_[c].push_back(minus);
                break;
            case Role::Plus:
                p = {across(dir), slot.center, line, ac.insert_after(bp)};
                boxes_[c].push_back(plus);
                break;
            case Role::Minus:
                p = {across(dir), slot.center, ac.insert_before(bm), line};
                boxes_[c].push_back(minus);
                break;
            case Role::Forward: {
                if (!slot.heavy) fail("forward role outside the endpoint slot");
                const int end = al.step(slot.a1, s);
                p = {along(dir), line, s > 0 ? slot.center : end, s > 0 ? end : slot.center};
                boxes_[c].push_back({c, dir, slot.a1, box.along_out, bm, bp});
                break;
            }
            case Role::None: break;
        }
    }
}

GridRepresentation RepresentationBuilder::materialize(std::vector<char>* placed_mask) const {
    const auto xr = xs_.ranks();
    const auto yr = ys_.ranks();
    GridRepresentation rep;
    for (Vertex v = 0; v < g_.order(); ++v) {
        const TokenPath& t = paths_[v];
        GridPath p{v, t.dir, 0, 0, 0};
        if (placed_[v]) {
            const auto& across_r = t.dir == Orientation::Horizontal ? yr : xr;
            const auto& along_r = t.dir == Orientation::Horizontal ? xr : yr;
            p.line = across_r[t.line];
            p.lo = along_r[t.lo];
            p.hi = along_r[t.hi];
        }
        rep.paths.push_back(p);
    }
    if (placed_mask) *placed_mask = placed_;
    fit_extent(rep);
    return rep;
}

GridRepresentation RepresentationBuilder::finalize() const {
    for (Vertex v = 0; v < g_.order(); ++v)
        if (!placed_[v]) fail("vertex " + std::to_string(v) + " was never placed");
    return compact(materialize(nullptr));
}

std::vector<std::string> RepresentationBuilder::check_invariants() const {
    std::vector<std::string> problems;
    std::vector<char> placed;
    const GridRepresentation rep = materialize(&placed);
    const auto xr = xs_.ranks();
    const auto yr = ys_.ranks();
    // Sentinels have no rank; they stand just outside the used range.
    auto rank_of = [](const std::vector<int>& r, int t, int sentinel_value) { return r[t] < 0 ? sentinel_value : r[t]; };
    const int big = 1 << 29;

    for (Vertex c = 0; c < g_.order(); ++c) {
        for (const FreeBox& box : boxes_[c]) {
            if (box.used) continue;
            const auto& al = vertical(box.dir) ? yr : xr;
            const auto& ac = vertical(box.dir) ? xr : yr;
            const Axis& al_axis = vertical(box.dir) ? ys_ : xs_;
            int a_in = rank_of(al, box.along_in, box.along_in == al_axis.head ? -big : big);
            int a_out = rank_of(al, box.along_out, box.along_out == al_axis.head ? -big : big);
            int lo = rank_of(ac, box.perp_lo, -big), hi = rank_of(ac, box.perp_hi, big);
            int a0 = std::min(a_in, a_out) + 1, a1 = std::max(a_in, a_out) - 1;
            GridBox open = vertical(box.dir) ? GridBox{lo + 1, hi - 1, a0, a1} : GridBox{a0, a1, lo + 1, hi - 1};
            bool owner_enters = false;
            for (Vertex w = 0; w < g_.order(); ++w) {
                if (!placed[w]) continue;
                bool hits = !intersect(footprint(rep.paths[w]), open).empty();
                if (w == c) owner_enters = hits;
                else if (hits)
                    problems.push_back("free box " + std::string(to_string(box.dir)) + " of " + std::to_string(c) +
                                       " meets path of " + std::to_string(w));
            }
            if (!owner_enters)
                problems.push_back("free box " + std::string(to_string(box.dir)) + " of " + std::to_string(c) +
                                   " does not contain its owner");
        }
    }

    const auto& d = a_.decomposition;
    for (Vertex c : d.cutpoints) {
        if (!placed[c]) continue;
        const int home = a_.order.parent_block[c];
        auto check = classify_clique_rep(rep, d.blocks[home]);
        if (!check.rep) {
            problems.push_back("clique of block " + std::to_string(home) + ": " + check.problem);
            continue;
        }
        auto far = unique_farthest(rep, d.blocks[home], check.rep->center);
        bool n = far[0] == c, e = far[1] == c, s = far[2] == c, w = far[3] == c;
        if (!(n || e || s || w))
            problems.push_back("cutpoint " + std::to_string(c) + " is not a farthest line of its parent block");
        if (a_.labels.is_b(c) && !((n && s) || (e && w)))
            problems.push_back("B cutpoint " + std::to_string(c) + " is not farthest in two opposite directions");
    }
    return problems;
}

GridRepresentation build_representation(const Graph& g, const Analysis& a, bool self_check) {
    RepresentationBuilder b(g, a);
    auto verify_step = [&](const std::string& where) {
        if (!self_check) return;
        auto problems = b.check_invariants();
        if (!problems.empty()) fail(where + ": " + problems.front());
    };
    b.represent_first_block();
    verify_step("first block");
    for (Vertex c : a.order.cutpoints) {
        b.attach_blocks(c);
        verify_step("attach at " + std::to_string(c));
    }
    return b.finalize();
}

}  // namespace bvpg
