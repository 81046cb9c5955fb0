#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bvpg/graph.hpp"

namespace bvpg {

// Blocks (maximal 2-connected vertex sets, a bridge being a 2-vertex block),
// cutpoints and the bipartite block-cutpoint tree of a connected graph.
//
// Block order: by smallest member, then size, then lexicographically.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cutpoints;
    // Block indices containing each vertex, ascending. Together with
    // block_cutpoints this is the adjacency of the block-cutpoint tree.
    std::vector<std::vector<int>> blocks_of;
    // Cutpoints inside each block, ascending.
    std::vector<VertexSet> block_cutpoints;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int vertex_count() const { return static_cast<int>(blocks_of.size()); }
    bool is_cutpoint(Vertex v) const { return blocks_of[v].size() >= 2; }
    int cutpoint_count(int block) const { return static_cast<int>(block_cutpoints[block].size()); }
};

// Throws InputError for a disconnected graph.
BlockDecomposition decompose(const Graph& g);

struct NotBlockGraphWitness {
    int block = -1;
    VertexSet members;
    std::pair<Vertex, Vertex> nonadjacent;
};

// nullopt when every block is complete.
std::optional<NotBlockGraphWitness> validate_block_graph(const Graph& g);
std::optional<NotBlockGraphWitness> validate_block_graph(const Graph& g, const BlockDecomposition& d);

bool is_block_graph(const Graph& g);

enum class BlockClass { Endblock, AlmostEndblock, Internal };

const char* to_string(BlockClass c);

// A block without cutpoints (the whole graph is one block) counts as an
// endblock.
BlockClass classify_block(const BlockDecomposition& d, int block);

// Number of blocks containing `c`; InputError if `c` is not a cutpoint.
int cutpoint_multiplicity(const BlockDecomposition& d, Vertex c);

// In exactly two blocks, one of them an endblock.
bool is_two_cutpoint(const BlockDecomposition& d, Vertex c);
bool is_three_cutpoint(const BlockDecomposition& d, Vertex c);

}  // namespace bvpg
