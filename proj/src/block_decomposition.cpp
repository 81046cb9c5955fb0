#include "bvpg/block_decomposition.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace bvpg {

namespace {

// Iterative lowpoint DFS rooted at vertex 0; each block is popped off the
// edge stack when a tree edge (p, u) has low[u] >= disc[p].
std::vector<VertexSet> biconnected_blocks(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> blocks;
    if (n == 0) return blocks;
    if (n == 1) {
        blocks.push_back({0});
        return blocks;
    }

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<Vertex> stack{0};
    int timer = 0;
    disc[0] = low[0] = timer++;

    while (!stack.empty()) {
        Vertex u = stack.back();
        const auto& nu = g.neighbors(u);
        if (next[u] < nu.size()) {
            Vertex w = nu[next[u]++];
            if (disc[w] < 0) {
                parent[w] = u;
                disc[w] = low[w] = timer++;
                edge_stack.emplace_back(u, w);
                stack.push_back(w);
            } else if (w != parent[u] && disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        Vertex p = parent[u];
        if (p < 0) continue;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
            VertexSet block;
            while (true) {
                auto e = edge_stack.back();
                edge_stack.pop_back();
                block.push_back(e.first);
                block.push_back(e.second);
                if (e.first == p && e.second == u) break;
            }
            blocks.push_back(make_vertex_set(std::move(block)));
        }
    }
    return blocks;
}

}  // namespace

BlockDecomposition decompose(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1)
        throw InputError("graph is disconnected: components containing " + std::to_string(comps[0].front()) +
                         " and " + std::to_string(comps[1].front()));

    BlockDecomposition d;
    d.blocks = biconnected_blocks(g);
    std::sort(d.blocks.begin(), d.blocks.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.front() != b.front()) return a.front() < b.front();
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    d.blocks_of.assign(static_cast<std::size_t>(g.order()), {});
    for (int b = 0; b < d.block_count(); ++b)
        for (Vertex v : d.blocks[b]) d.blocks_of[v].push_back(b);
    for (Vertex v = 0; v < g.order(); ++v)
        if (d.blocks_of[v].size() >= 2) d.cutpoints.push_back(v);

    d.block_cutpoints.resize(d.blocks.size());
    for (int b = 0; b < d.block_count(); ++b)
        for (Vertex v : d.blocks[b])
            if (d.is_cutpoint(v)) d.block_cutpoints[b].push_back(v);
    return d;
}

std::optional<NotBlockGraphWitness> validate_block_graph(const Graph& g, const BlockDecomposition& d) {
    for (int b = 0; b < d.block_count(); ++b) {
        const auto& members = d.blocks[b];
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j]))
                    return NotBlockGraphWitness{b, members, {members[i], members[j]}};
    }
    return std::nullopt;
}

std::optional<NotBlockGraphWitness> validate_block_graph(const Graph& g) {
    return validate_block_graph(g, decompose(g));
}

bool is_block_graph(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) return false;
    return !validate_block_graph(g).has_value();
}

const char* to_string(BlockClass c) {
    switch (c) {
        case BlockClass::Endblock: return "endblock";
        case BlockClass::AlmostEndblock: return "almost endblock";
        case BlockClass::Internal: return "internal";
    }
    return "?";
}

BlockClass classify_block(const BlockDecomposition& d, int block) {
    const auto& cuts = d.block_cutpoints[block];
    if (cuts.size() <= 1) return BlockClass::Endblock;
    int touching = 0;
    for (Vertex c : cuts) {
        bool touches = false;
        for (int other : d.blocks_of[c])
            if (other != block && d.cutpoint_count(other) >= 2) touches = true;
        touching += touches ? 1 : 0;
    }
    return touching == 1 ? BlockClass::AlmostEndblock : BlockClass::Internal;
}

int cutpoint_multiplicity(const BlockDecomposition& d, Vertex c) {
    if (c < 0 || c >= d.vertex_count() || !d.is_cutpoint(c))
        throw InputError("vertex " + std::to_string(c) + " is not a cutpoint");
    return static_cast<int>(d.blocks_of[c].size());
}

bool is_two_cutpoint(const BlockDecomposition& d, Vertex c) {
    if (!d.is_cutpoint(c) || d.blocks_of[c].size() != 2) return false;
    for (int b : d.blocks_of[c])
        if (d.cutpoint_count(b) == 1) return true;
    return false;
}

bool is_three_cutpoint(const BlockDecomposition& d, Vertex c) { return d.blocks_of[c].size() == 3; }

}  // namespace bvpg
