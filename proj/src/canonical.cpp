#include "bvpg/canonical.hpp"

#include <algorithm>
#include <functional>

#include "bvpg/block_decomposition.hpp"

namespace bvpg {

namespace {

struct LabelledTree {
    std::vector<std::vector<int>> adj;
    std::vector<std::string> label;
};

LabelledTree bc_tree(const BlockDecomposition& d) {
    LabelledTree t;
    const int nb = d.block_count();
    std::vector<int> cut_node(static_cast<std::size_t>(d.vertex_count()), -1);
    int next = nb;
    for (Vertex c : d.cutpoints) cut_node[c] = next++;
    t.adj.resize(static_cast<std::size_t>(next));
    t.label.resize(static_cast<std::size_t>(next), "c");
    for (int b = 0; b < nb; ++b) {
        t.label[b] = "b" + std::to_string(d.blocks[b].size() - d.block_cutpoints[b].size());
        for (Vertex c : d.block_cutpoints[b]) {
            t.adj[b].push_back(cut_node[c]);
            t.adj[cut_node[c]].push_back(b);
        }
    }
    return t;
}

std::vector<int> tree_centers(const LabelledTree& t) {
    const int n = static_cast<int>(t.adj.size());
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(t.adj[i].size());
        if (deg[i] <= 1) layer.push_back(i);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int leaf : layer)
            for (int w : t.adj[leaf])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string encode(const LabelledTree& t, int node, int parent) {
    std::vector<std::string> kids;
    for (int w : t.adj[node])
        if (w != parent) kids.push_back(encode(t, w, node));
    std::sort(kids.begin(), kids.end());
    std::string out = t.label[node] + "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

}  // namespace

std::optional<std::string> block_graph_canonical_form(const Graph& g) {
    if (!is_block_graph(g)) return std::nullopt;
    auto t = bc_tree(decompose(g));
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = encode(t, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool isomorphic_block_graphs(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto ca = block_graph_canonical_form(a);
    return ca && ca == block_graph_canonical_form(b);
}

}  // namespace bvpg
