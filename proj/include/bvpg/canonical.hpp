#pragma once

#include <optional>
#include <string>

#include "bvpg/graph.hpp"

namespace bvpg {

// Isomorphism-invariant string for a connected block graph, nullopt for any
// other graph. A block graph is determined up to isomorphism by its
// block-cutpoint tree with each block node labelled by its number of
// non-cutpoint vertices, so the form is the AHU encoding of that labelled
// tree rooted at its center (minimum over the two centers of a bicentral
// tree).
std::optional<std::string> block_graph_canonical_form(const Graph& g);

bool isomorphic_block_graphs(const Graph& a, const Graph& b);

}  // namespace bvpg
