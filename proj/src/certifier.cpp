#include "bvpg/certifier.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "bvpg/family.hpp"

namespace bvpg {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("certifier: " + what); }

bool in_block(const VertexSet& block, Vertex v) { return std::binary_search(block.begin(), block.end(), v); }

Vertex outside_neighbor(const Graph& g, const VertexSet& block, Vertex c) {
    for (Vertex u : g.neighbors(c))
        if (!in_block(block, u)) return u;
    fail("cutpoint " + std::to_string(c) + " has no neighbour outside its block");
}

// c's other cutpoints in `block` (the first three) and one private
// neighbour of each: the part of a K4 hanging on c.
void add_arm(const Graph& g, const BlockDecomposition& d, int block, Vertex c, std::vector<Vertex>& out) {
    int taken = 0;
    for (Vertex w : d.block_cutpoints[block]) {
        if (w == c) continue;
        if (taken++ == 3) break;
        out.push_back(w);
        out.push_back(outside_neighbor(g, d.blocks[block], w));
    }
    if (taken < 3) fail("block " + std::to_string(block) + " has fewer than four cutpoints");
}

std::vector<int> qualifying_children(const Analysis& a, Vertex v) {
    std::vector<int> q;
    for (int b : a.order.child_blocks[v])
        if (qualifies_for(a.decomposition, a.labels, b, v)) q.push_back(b);
    std::sort(q.begin(), q.end());
    return q;
}

// Vertices reachable from `seeds` in g - v.
std::vector<char> reach_avoiding(const Graph& g, Vertex v, const VertexSet& seeds) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::deque<Vertex> queue;
    for (Vertex s : seeds)
        if (s != v && !seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (w != v && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

// Block of g containing both vertices.
int block_with(const BlockDecomposition& d, Vertex x, Vertex y) {
    for (int b : d.blocks_of[x])
        if (in_block(d.blocks[b], y)) return b;
    fail("no block contains " + std::to_string(x) + " and " + std::to_string(y));
}

VertexSet extract(const Graph& g, const Analysis& a);

VertexSet recurse(const Graph& g, int start_block) { return extract(g, analyze(g, start_block)); }

VertexSet extract(const Graph& g, const Analysis& a) {
    using C = ClaimViolation::Condition;
    if (!a.violation) fail("no violation to certify");
    const auto& d = a.decomposition;
    const auto& o = a.order;

    if (a.violation->condition == C::I) {
        const int b = a.violation->block;
        std::vector<Vertex> s;
        for (int i = 0; i < 5; ++i) {
            Vertex c = d.block_cutpoints[b][i];
            s.push_back(c);
            s.push_back(outside_neighbor(g, d.blocks[b], c));
        }
        return make_vertex_set(std::move(s));
    }

    Vertex v = -1;
    for (auto it = o.cutpoints.rbegin(); it != o.cutpoints.rend() && v < 0; ++it)
        if (a.labels.is_b(*it)) v = *it;
    if (v < 0) fail("violation without a B label");

    const auto q = qualifying_children(a, v);
    for (int b : q)
        if (d.cutpoint_count(b) != 4) fail("last B cutpoint has a qualifying block without four cutpoints");
    if (q.size() < 2) fail("last B cutpoint has fewer than two qualifying blocks");
    const int hv = o.parent_block[v];
    const int hv_cuts = d.cutpoint_count(hv);

    if (q.size() >= 3 || hv_cuts >= 4) {
        std::vector<Vertex> s{v};
        add_arm(g, d, q[0], v, s);
        add_arm(g, d, q[1], v, s);
        add_arm(g, d, q.size() >= 3 ? q[2] : hv, v, s);
        return make_vertex_set(std::move(s));
    }

    // Everything on the H^v side of v.
    VertexSet hv_rest;
    for (Vertex u : d.blocks[hv])
        if (u != v) hv_rest.push_back(u);
    const auto keep_mask = reach_avoiding(g, v, hv_rest);
    const VertexSet& h1 = d.blocks[o.first_block()];

    if (hv_cuts == 3) {
        Vertex w = -1;
        for (Vertex c : o.child_cuts[hv])
            if (c != v && a.labels.is_b(c)) w = c;
        if (w >= 0) {
            Vertex z = -1;
            for (Vertex c : d.block_cutpoints[hv])
                if (c != v && c != w) z = c;
            auto qw = qualifying_children(a, w);
            if (qw.size() < 2 || d.cutpoint_count(qw[0]) != 4 || d.cutpoint_count(qw[1]) != 4)
                fail("B sibling lacks two blocks with four cutpoints");
            std::vector<Vertex> s{v, w, z, outside_neighbor(g, d.blocks[hv], z)};
            add_arm(g, d, q[0], v, s);
            add_arm(g, d, q[1], v, s);
            add_arm(g, d, qw[0], w, s);
            add_arm(g, d, qw[1], w, s);
            return make_vertex_set(std::move(s));
        }

        // Replace v and its far side by two adjacent copies v1, v2 with one
        // pendant each.
        std::vector<Vertex> kept, new_id(static_cast<std::size_t>(g.order()), -1);
        for (Vertex u = 0; u < g.order(); ++u)
            if (keep_mask[u]) {
                new_id[u] = static_cast<Vertex>(kept.size());
                kept.push_back(u);
            }
        const int m = static_cast<int>(kept.size());
        const Vertex v1 = m, v2 = m + 1, v1p = m + 2, v2p = m + 3;
        Graph gp(m + 4);
        for (auto [x, y] : g.edges())
            if (keep_mask[x] && keep_mask[y]) gp.add_edge(new_id[x], new_id[y]);
        gp.add_edge(v1, v2);
        gp.add_edge(v1, v1p);
        gp.add_edge(v2, v2p);
        for (Vertex u : hv_rest) {
            gp.add_edge(v1, new_id[u]);
            gp.add_edge(v2, new_id[u]);
        }
        new_id[v] = v1;

        const VertexSet f = recurse(gp, block_with(decompose(gp), new_id[h1[0]], new_id[h1[1]]));
        const bool has1 = in_block(f, v1) || in_block(f, v1p);
        const bool has2 = in_block(f, v2) || in_block(f, v2p);
        std::vector<Vertex> s;
        for (Vertex u : f)
            if (u < m) s.push_back(kept[u]);
        if (has1 && has2) {
            s.push_back(v);
            add_arm(g, d, q[0], v, s);
            add_arm(g, d, q[1], v, s);
        } else if (has1 || has2) {
            const Vertex vi = has1 ? v1 : v2, vip = has1 ? v1p : v2p;
            if (in_block(f, vi)) s.push_back(v);
            if (in_block(f, vip)) s.push_back(outside_neighbor(g, d.blocks[hv], v));
        }
        return make_vertex_set(std::move(s));
    }

    if (hv_cuts == 2) {
        std::vector<Vertex> kept;
        for (Vertex u = 0; u < g.order(); ++u)
            if (keep_mask[u] || u == v) kept.push_back(u);
        auto sub = induced_subgraph(g, kept);
        std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < kept.size(); ++i) local[kept[i]] = static_cast<Vertex>(i);
        const VertexSet f = recurse(sub.graph, block_with(decompose(sub.graph), local[h1[0]], local[h1[1]]));
        std::vector<Vertex> s;
        for (Vertex u : f) s.push_back(sub.to_parent[u]);
        return make_vertex_set(std::move(s));
    }

    fail("H^v of the last B cutpoint has " + std::to_string(hv_cuts) + " cutpoints");
}

}  // namespace

Certificate extract_certificate(const Graph& g, const Analysis& a) {
    Certificate c;
    c.vertices = extract(g, a);
    auto k = family_member_k(induced_subgraph(g, c.vertices).graph);
    if (!k) fail("extracted set of " + std::to_string(c.vertices.size()) + " vertices is not a family member");
    c.family_k = *k;
    return c;
}

bool verify_certificate(const Graph& g, const Certificate& c) {
    for (Vertex v : c.vertices)
        if (v < 0 || v >= g.order()) return false;
    if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
        std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
        return false;
    auto k = family_member_k(induced_subgraph(g, c.vertices).graph);
    return k && *k == c.family_k;
}

}  // namespace bvpg
