#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bvpg/block_decomposition.hpp"
#include "bvpg/graph.hpp"
#include "bvpg/grid.hpp"

namespace bvpg {

// BFS of the block-cutpoint tree starting from a block. Positions index the
// full BFS sequence, which interleaves blocks and cutpoints.
struct BlockOrder {
    std::vector<int> blocks;         // H_1..H_m
    std::vector<Vertex> cutpoints;   // cutpoints in sequence order
    std::vector<int> block_pos;      // per block
    std::vector<int> cut_pos;        // per vertex, -1 for non-cutpoints
    std::vector<int> parent_block;   // H^c per vertex, -1 for non-cutpoints
    std::vector<Vertex> parent_cut;  // c(i) per block, -1 for the first block
    std::vector<std::vector<int>> child_blocks;    // per vertex: blocks whose c(i) is it
    std::vector<std::vector<Vertex>> child_cuts;   // per block: cutpoints whose H^c is it

    int first_block() const { return blocks.front(); }
};

// Neighbours are explored in ascending order, or in a seeded random order
// when `tie_break_seed` is set.
BlockOrder bfs_block_order(const BlockDecomposition& d, int start_block,
                           std::optional<std::uint64_t> tie_break_seed = std::nullopt);

enum class Label : char { None = 0, A = 'A', B = 'B' };

struct Labeling {
    std::vector<Label> label;  // per vertex; None for non-cutpoints

    bool is_b(Vertex v) const { return label[v] == Label::B; }
};

// A block hanging below cutpoint `c` counts towards c's B label when it has
// at least four cutpoints, or exactly three with one of the others labelled B.
bool qualifies_for(const BlockDecomposition& d, const Labeling& l, int block, Vertex c);

Labeling label_cutpoints(const BlockDecomposition& d, const BlockOrder& o);

struct ClaimViolation {
    enum class Condition { I = 1, II = 2, III = 3, IV = 4 } condition = Condition::I;
    int block = -1;      // I: the block; III: H^c; IV: the shared H^c
    Vertex cutpoint = -1;  // II, III: the B cutpoint; IV: first of the pair
    Vertex other = -1;     // IV: second of the pair
    std::vector<int> qualifying_blocks;  // II
};

const char* to_string(ClaimViolation::Condition c);

// First violated condition, checking I..IV in turn, each in sequence order.
std::optional<ClaimViolation> check_claim_conditions(const BlockDecomposition& d, const BlockOrder& o,
                                                     const Labeling& l);

// The full pipeline state for one connected block graph.
struct Analysis {
    BlockDecomposition decomposition;
    BlockOrder order;
    Labeling labels;
    std::optional<ClaimViolation> violation;
};

Analysis analyze(const Graph& g, int start_block = 0, std::optional<std::uint64_t> tie_break_seed = std::nullopt);

struct Certificate {
    VertexSet vertices;
    int family_k = 0;
};

struct Accepted {
    GridRepresentation representation;
};

struct Rejected {
    Certificate certificate;
};

struct NotBlockGraph {
    NotBlockGraphWitness witness;  // vertex ids of the input graph
};

using Recognition = std::variant<Accepted, Rejected, NotBlockGraph>;

struct RecognizeOptions {
    // Applies to the first component; others start at their block 0.
    std::optional<int> start_block;
    std::optional<std::uint64_t> tie_break_seed;
};

// Components are recognised independently and accepted representations laid
// side by side.
Recognition recognize(const Graph& g, const RecognizeOptions& options = {});

inline bool accepted(const Recognition& r) { return std::holds_alternative<Accepted>(r); }

}  // namespace bvpg
