#include "bvpg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace bvpg {

VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Graph::Graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check(Vertex v) const {
    if (v < 0 || v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(order()) + ")");
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    return order() - 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 0 || v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " out of range for induced subgraph");
    VertexSet sorted = make_vertex_set(s);
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

    InducedSubgraph out{Graph(static_cast<int>(sorted.size())), sorted};
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (Vertex w : g.neighbors(sorted[i]))
            if (index[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), index[w]);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

namespace {

class InducedMatcher {
public:
    InducedMatcher(const Graph& pattern, const Graph& host)
        : p_(pattern), h_(host), np_(pattern.order()), nh_(host.order()),
          hadj_(static_cast<std::size_t>(nh_) * nh_, 0),
          map_(static_cast<std::size_t>(np_), -1),
          used_(static_cast<std::size_t>(nh_), 0) {
        for (auto [u, v] : host.edges()) {
            hadj_[u * nh_ + v] = 1;
            hadj_[v * nh_ + u] = 1;
        }
        build_order();
    }

    std::optional<std::vector<Vertex>> run() {
        if (np_ > nh_) return std::nullopt;
        if (!degrees_dominated()) return std::nullopt;
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool degrees_dominated() const {
        std::vector<int> dp, dh;
        for (Vertex v = 0; v < np_; ++v) dp.push_back(p_.degree(v));
        for (Vertex v = 0; v < nh_; ++v) dh.push_back(h_.degree(v));
        std::sort(dp.rbegin(), dp.rend());
        std::sort(dh.rbegin(), dh.rend());
        for (std::size_t i = 0; i < dp.size(); ++i)
            if (dp[i] > dh[i]) return false;
        return true;
    }

    // Connected-first order: each vertex after a component's first has a
    // previously ordered neighbour (its anchor), so candidates come from the
    // anchor's image neighbourhood.
    void build_order() {
        std::vector<int> placed_nbrs(static_cast<std::size_t>(np_), 0);
        std::vector<char> done(static_cast<std::size_t>(np_), 0);
        anchor_.assign(static_cast<std::size_t>(np_), -1);
        for (int step = 0; step < np_; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < np_; ++v) {
                if (done[v]) continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && p_.degree(v) > p_.degree(best)))
                    best = v;
            }
            done[best] = 1;
            for (Vertex w : p_.neighbors(best)) {
                if (done[w] && anchor_[best] < 0) anchor_[best] = w;
                ++placed_nbrs[w];
            }
            order_.push_back(best);
        }
    }

    bool consistent(Vertex pv, Vertex hv) const {
        if (used_[hv] || h_.degree(hv) < p_.degree(pv)) return false;
        for (Vertex q : order_) {
            if (map_[q] < 0) break;
            bool pe = p_.has_edge(pv, q);
            bool he = hadj_[hv * nh_ + map_[q]] != 0;
            if (pe != he) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        Vertex pv = order_[depth];
        auto attempt = [&](Vertex hv) {
            if (!consistent(pv, hv)) return false;
            map_[pv] = hv;
            used_[hv] = 1;
            if (extend(depth + 1)) return true;
            map_[pv] = -1;
            used_[hv] = 0;
            return false;
        };
        if (anchor_[pv] >= 0) {
            for (Vertex hv : h_.neighbors(map_[anchor_[pv]]))
                if (attempt(hv)) return true;
        } else {
            for (Vertex hv = 0; hv < nh_; ++hv)
                if (attempt(hv)) return true;
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    int np_;
    int nh_;
    std::vector<char> hadj_;
    std::vector<Vertex> order_;
    std::vector<Vertex> anchor_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_copy(const Graph& pattern, const Graph& host) {
    return InducedMatcher(pattern, host).run();
}

}  // namespace bvpg
