#pragma once

#include "bvpg/graph.hpp"
#include "bvpg/recognizer.hpp"

namespace bvpg {

// Vertex set of g inducing a member of the family, following the inductive
// argument that a violated labeling condition forces one. `a` must come from
// analyze(g, ...) on a connected block graph and carry a violation. Throws
// std::logic_error if the case analysis is not matched.
Certificate extract_certificate(const Graph& g, const Analysis& a);

// True iff the induced subgraph on c.vertices is isomorphic to a family
// member of the same order and c.family_k matches it.
bool verify_certificate(const Graph& g, const Certificate& c);

}  // namespace bvpg
