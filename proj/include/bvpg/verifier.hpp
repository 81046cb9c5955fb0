#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bvpg/block_decomposition.hpp"
#include "bvpg/builder.hpp"
#include "bvpg/graph.hpp"
#include "bvpg/grid.hpp"

namespace bvpg {

struct PairMismatch {
    Vertex u, v;
    bool adjacent;  // true: adjacent but disjoint paths; false: intersecting non-neighbours
};

struct LemmaFailure {
    int block;
    std::string lemma;
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<PairMismatch> mismatches;  // ordered by (u, v)
    std::vector<LemmaFailure> lemma_failures;
};

// Exact pairwise check of intersection against adjacency. The default
// version splits rows across OpenMP threads; the serial one is the
// reference it is tested against.
VerificationReport verify_representation(const Graph& g, const GridRepresentation& rep);
VerificationReport verify_representation_serial(const Graph& g, const GridRepresentation& rep);

struct CliqueCheck {
    std::optional<CliqueRep> rep;
    std::string problem;  // set when the paths have no common point
};

// Line when every path fits one row (or one column), otherwise Cross at the
// single common point.
CliqueCheck classify_clique_rep(const GridRepresentation& rep, const VertexSet& clique);

// For each of N, E, S, W: the clique member whose path reaches strictly
// farther from `center` than every other member, if any.
std::array<std::optional<Vertex>, 4> unique_farthest(const GridRepresentation& rep, const VertexSet& clique,
                                                     GridPoint center);

// Blocks with 3 or 4 cutpoints must be cross cliques whose cutpoints are
// the farthest lines in pairwise distinct cardinal directions.
std::vector<LemmaFailure> check_cardinal_lemmas(const Graph& g, const BlockDecomposition& d,
                                                const GridRepresentation& rep);

// verify_representation plus, per block graph component, the clique and
// cardinal lemma checks.
VerificationReport verify_with_lemmas(const Graph& g, const GridRepresentation& rep);

inline constexpr int kOracleMaxVertices = 7;

// Exhaustive search for a representation; InputError above 7 vertices.
//
// Only the relative order of coordinates matters for intersections: on the
// x axis the relevant values are the columns of vertical paths and the two
// endpoints of horizontal paths, at most n_V + 2 n_H <= 2n distinct values,
// and symmetrically on y. Paths are therefore placed by choosing, for each
// coordinate, either an existing value or a fresh value in one of the gaps
// between existing values. Every representation has an order type that this
// enumeration reaches, and every order type embeds into [0, 2n) per axis
// after rank compression. The first vertex is fixed horizontal, which loses
// nothing because transposing the grid swaps orientations.
std::optional<GridRepresentation> brute_force_b0vpg(const Graph& g);
std::optional<GridRepresentation> brute_force_b0vpg_serial(const Graph& g);

// Vertex set of the first induced family member found, if any.
std::optional<VertexSet> find_induced_f_member(const Graph& g);

}  // namespace bvpg
