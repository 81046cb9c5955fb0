#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bvpg/block_decomposition.hpp"
#include "bvpg/canonical.hpp"
#include "bvpg/family.hpp"
#include "bvpg/graph.hpp"

namespace bvpg::testing {

// Every connected block graph on n vertices up to isomorphism. Each one
// arises from a smaller one by adding a vertex adjacent to one vertex or to
// a whole block (undo: delete a non-cutpoint of an endblock).
inline std::vector<Graph> connected_block_graphs(int n) {
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& g : level) {
            auto extend = [&](const VertexSet& nbrs) {
                Graph h = g;
                Vertex x = h.add_vertex();
                for (Vertex u : nbrs) h.add_edge(x, u);
                next.emplace(*block_graph_canonical_form(h), h);
            };
            for (Vertex v = 0; v < g.order(); ++v) extend({v});
            if (g.order() >= 2)
                for (const auto& b : decompose(g).blocks) extend(b);
        }
        level.clear();
        for (auto& [code, h] : next) level.push_back(std::move(h));
    }
    return n >= 1 ? level : std::vector<Graph>{};
}

// Glues cliques at random vertices until the graph has n vertices. Sizes
// are drawn from `weights` (index = clique size). With probability
// `fresh_bias` the glue vertex is one that lies in a single clique so far,
// which makes blocks with many cutpoints likely.
inline Graph random_block_graph(std::mt19937_64& rng, int n, const std::vector<double>& weights,
                                double fresh_bias = 0.0) {
    std::discrete_distribution<int> size_dist(weights.begin(), weights.end());
    std::bernoulli_distribution prefer_fresh(fresh_bias);
    Graph g(1);
    std::vector<int> cliques_at{0};
    while (g.order() < n) {
        Vertex at = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
        if (prefer_fresh(rng)) {
            std::vector<Vertex> fresh;
            for (Vertex v = 0; v < g.order(); ++v)
                if (cliques_at[v] <= 1) fresh.push_back(v);
            if (!fresh.empty()) at = fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng)];
        }
        ++cliques_at[at];
        int s = std::max(2, size_dist(rng));
        s = std::min(s, n - g.order() + 1);
        std::vector<Vertex> clique{at};
        for (int i = 1; i < s; ++i) {
            clique.push_back(g.add_vertex());
            cliques_at.push_back(1);
        }
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
    }
    return g;
}

// Random relabelling, so tests do not lean on construction order.
inline Graph shuffle_labels(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

// A family member with random trees and cliques hung on it, relabelled.
inline Graph plant_member(const Graph& member, int target_n, std::mt19937_64& rng) {
    Graph g = member;
    std::discrete_distribution<int> size_dist({0, 0, 5, 2, 1});
    while (g.order() < target_n) {
        Vertex at = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
        int s = std::min(std::max(2, size_dist(rng)), target_n - g.order() + 1);
        std::vector<Vertex> clique{at};
        for (int i = 1; i < s; ++i) clique.push_back(g.add_vertex());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
    }
    return shuffle_labels(g, rng);
}

// Block graphs that tend to have many blocks with three or four cutpoints,
// filtered to be free of the family by the independent subgraph search.
inline std::vector<Graph> random_family_free_corpus(std::uint64_t seed, int count, int max_n) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    struct Mix {
        std::vector<double> weights;
        double fresh_bias;
    };
    const std::vector<Mix> mixes{{{0, 0, 4, 2, 3, 1}, 0.0},
                                 {{0, 0, 6, 1, 2}, 0.3},
                                 {{0, 0, 2, 1, 4, 1}, 0.0},
                                 {{0, 0, 3, 0, 2}, 0.9},
                                 {{0, 0, 1, 0, 1}, 0.7}};
    const auto& members = enumerate_family(max_n);
    while (static_cast<int>(out.size()) < count) {
        if (out.size() % 3 == 2) {
            // Largest component of a member minus one vertex, lightly padded:
            // these carry B labels, which random gluing rarely produces.
            const Graph& f = members[std::uniform_int_distribution<std::size_t>(1, members.size() - 1)(rng)].graph;
            Vertex gone = std::uniform_int_distribution<Vertex>(0, f.order() - 1)(rng);
            VertexSet rest;
            for (Vertex v = 0; v < f.order(); ++v)
                if (v != gone) rest.push_back(v);
            Graph h = induced_subgraph(f, rest).graph;
            VertexSet biggest;
            for (const auto& c : connected_components(h))
                if (c.size() > biggest.size()) biggest = c;
            Graph core = induced_subgraph(h, biggest).graph;
            int pad = std::uniform_int_distribution<int>(0, std::max(0, std::min(6, max_n - core.order())))(rng);
            Graph g = plant_member(core, core.order() + pad, rng);
            if (!find_induced_family_member(g)) out.push_back(std::move(g));
            continue;
        }
        int n = std::uniform_int_distribution<int>(2, max_n)(rng);
        const auto& mix = mixes[out.size() % mixes.size()];
        Graph g = shuffle_labels(random_block_graph(rng, n, mix.weights, mix.fresh_bias), rng);
        if (!find_induced_family_member(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bvpg::testing
