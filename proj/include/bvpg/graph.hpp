#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bvpg {

using Vertex = int;

// Raised for malformed caller input (out-of-range ids, violated
// preconditions the caller could have checked).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vs);

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    // Returns false if the edge was already present. Self-loops throw.
    bool add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Each edge once, u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    Vertex add_vertex();

    bool operator==(const Graph&) const = default;

private:
    void check(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    // to_parent[i] is the vertex of the host graph that became i.
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components ordered by smallest member; members sorted.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

// First induced embedding of `pattern` into `host` in ascending-candidate
// search order. result[p] is the host vertex for pattern vertex p.
std::optional<std::vector<Vertex>> find_induced_copy(const Graph& pattern, const Graph& host);

}  // namespace bvpg
