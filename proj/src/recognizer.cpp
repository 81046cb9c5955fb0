#include "bvpg/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "bvpg/builder.hpp"
#include "bvpg/certifier.hpp"

namespace bvpg {

BlockOrder bfs_block_order(const BlockDecomposition& d, int start_block, std::optional<std::uint64_t> tie_break_seed) {
    const int nb = d.block_count();
    if (start_block < 0 || start_block >= nb)
        throw InputError("start block " + std::to_string(start_block) + " out of range [0, " + std::to_string(nb) + ")");
    const auto n = static_cast<std::size_t>(d.vertex_count());

    BlockOrder o;
    o.block_pos.assign(static_cast<std::size_t>(nb), -1);
    o.parent_cut.assign(static_cast<std::size_t>(nb), -1);
    o.child_cuts.assign(static_cast<std::size_t>(nb), {});
    o.cut_pos.assign(n, -1);
    o.parent_block.assign(n, -1);
    o.child_blocks.assign(n, {});

    std::optional<std::mt19937_64> rng;
    if (tie_break_seed) rng.emplace(*tie_break_seed);
    auto arrange = [&](auto items) {
        if (rng) std::shuffle(items.begin(), items.end(), *rng);
        return items;
    };

    int pos = 0;
    struct Node {
        bool block;
        int id;
    };
    std::deque<Node> queue{{true, start_block}};
    o.block_pos[start_block] = pos++;
    o.blocks.push_back(start_block);
    while (!queue.empty()) {
        Node node = queue.front();
        queue.pop_front();
        if (node.block) {
            for (Vertex c : arrange(d.block_cutpoints[node.id])) {
                if (o.cut_pos[c] >= 0) continue;
                o.cut_pos[c] = pos++;
                o.parent_block[c] = node.id;
                o.child_cuts[node.id].push_back(c);
                o.cutpoints.push_back(c);
                queue.push_back({false, c});
            }
        } else {
            for (int b : arrange(d.blocks_of[node.id])) {
                if (o.block_pos[b] >= 0) continue;
                o.block_pos[b] = pos++;
                o.parent_cut[b] = node.id;
                o.child_blocks[node.id].push_back(b);
                o.blocks.push_back(b);
                queue.push_back({true, b});
            }
        }
    }
    return o;
}

bool qualifies_for(const BlockDecomposition& d, const Labeling& l, int block, Vertex c) {
    const int k = d.cutpoint_count(block);
    if (k >= 4) return true;
    if (k != 3) return false;
    for (Vertex other : d.block_cutpoints[block])
        if (other != c && l.is_b(other)) return true;
    return false;
}

Labeling label_cutpoints(const BlockDecomposition& d, const BlockOrder& o) {
    Labeling l{std::vector<Label>(static_cast<std::size_t>(d.vertex_count()), Label::None)};
    for (auto it = o.cutpoints.rbegin(); it != o.cutpoints.rend(); ++it) {
        const Vertex c = *it;
        int qualifying = 0;
        for (int b : o.child_blocks[c]) {
            for (Vertex other : d.block_cutpoints[b])
                if (other != c && l.label[other] == Label::None)
                    throw std::logic_error("labeling reached cutpoint " + std::to_string(c) +
                                           " before its descendant " + std::to_string(other));
            if (qualifies_for(d, l, b, c)) ++qualifying;
        }
        l.label[c] = qualifying >= 2 ? Label::B : Label::A;
    }
    return l;
}

const char* to_string(ClaimViolation::Condition c) {
    switch (c) {
        case ClaimViolation::Condition::I: return "i";
        case ClaimViolation::Condition::II: return "ii";
        case ClaimViolation::Condition::III: return "iii";
        case ClaimViolation::Condition::IV: return "iv";
    }
    return "?";
}

std::optional<ClaimViolation> check_claim_conditions(const BlockDecomposition& d, const BlockOrder& o,
                                                     const Labeling& l) {
    using C = ClaimViolation::Condition;
    for (int b : o.blocks)
        if (d.cutpoint_count(b) >= 5) return ClaimViolation{C::I, b, -1, -1, {}};

    for (Vertex c : o.cutpoints) {
        if (!l.is_b(c)) continue;
        std::vector<int> q;
        for (int b : o.child_blocks[c])
            if (qualifies_for(d, l, b, c)) q.push_back(b);
        if (q.size() != 2) return ClaimViolation{C::II, -1, c, -1, std::move(q)};
    }

    for (Vertex c : o.cutpoints)
        if (l.is_b(c) && d.cutpoint_count(o.parent_block[c]) > 3)
            return ClaimViolation{C::III, o.parent_block[c], c, -1, {}};

    for (int b : o.blocks) {
        if (d.cutpoint_count(b) < 3) continue;
        std::vector<Vertex> bs;
        for (Vertex c : o.child_cuts[b])
            if (l.is_b(c)) bs.push_back(c);
        if (bs.size() >= 2) return ClaimViolation{C::IV, b, bs[0], bs[1], {}};
    }
    return std::nullopt;
}

Analysis analyze(const Graph& g, int start_block, std::optional<std::uint64_t> tie_break_seed) {
    Analysis a;
    a.decomposition = decompose(g);
    a.order = bfs_block_order(a.decomposition, start_block, tie_break_seed);
    a.labels = label_cutpoints(a.decomposition, a.order);
    a.violation = check_claim_conditions(a.decomposition, a.order, a.labels);
    return a;
}

Recognition recognize(const Graph& g, const RecognizeOptions& options) {
    GridRepresentation combined;
    combined.paths.resize(static_cast<std::size_t>(g.order()));
    int x_offset = 0;
    bool first = true;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto d = decompose(sub.graph);
        if (auto w = validate_block_graph(sub.graph, d)) {
            for (auto& v : w->members) v = sub.to_parent[v];
            w->nonadjacent = {sub.to_parent[w->nonadjacent.first], sub.to_parent[w->nonadjacent.second]};
            return NotBlockGraph{*w};
        }
        int start = first && options.start_block ? *options.start_block : 0;
        first = false;
        Analysis a = analyze(sub.graph, start, options.tie_break_seed);
        if (a.violation) {
            Certificate cert = extract_certificate(sub.graph, a);
            for (auto& v : cert.vertices) v = sub.to_parent[v];
            cert.vertices = make_vertex_set(std::move(cert.vertices));
            return Rejected{cert};
        }
        GridRepresentation local = build_representation(sub.graph, a);
        for (auto p : translate(local, x_offset, 0).paths) {
            p.v = sub.to_parent[p.v];
            combined.paths[p.v] = p;
        }
        x_offset += local.cols;
    }
    fit_extent(combined);
    return Accepted{combined};
}

}  // namespace bvpg
