#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bvpg/graph.hpp"

namespace bvpg {

// Thin spider N_n: clique 0..n-1, stable vertex i+n pendant on i.
Graph thin_spider(int n);

// One application of the family-growing procedure: inside the complete
// 4-set `h`, contract the 2-cutpoints v1 and v2 into a new vertex x, drop
// their pendant partners, and hang two thin spiders of size 3 on x through
// their clique vertices.
struct ProcedureStep {
    VertexSet h;
    Vertex v1 = -1;
    Vertex v2 = -1;
};

struct AppliedProcedure {
    Graph graph;
    Vertex contracted = -1;
    // New id of every input vertex, -1 for removed ones.
    std::vector<Vertex> new_id;
};

// Throws InputError naming the failing structural precondition.
AppliedProcedure apply_procedure(const Graph& g, const ProcedureStep& step);

// Every (v1 < v2) pair of 2-cutpoints with pendant endblocks that lies in a
// block of size >= 4, with h completed by the two smallest other block
// members.
std::vector<ProcedureStep> procedure_steps(const Graph& g);

struct FamilyMember {
    Graph graph;
    int k = 0;  // number of procedure applications
    std::string canonical;
};

inline int family_vertex_count(int k) { return 9 * (k + 1) + 1; }

// All members with at most `max_vertices` vertices, pairwise non-isomorphic,
// ordered by vertex count then canonical form. Memoised and thread-safe.
const std::vector<FamilyMember>& enumerate_family(int max_vertices);

// Members with exactly k applications.
std::vector<FamilyMember> family_members(int k);

// Canonical form of `g` matches a member of its own size; returns that
// member's k.
std::optional<int> family_member_k(const Graph& g);

struct FamilyCounts {
    int vertices = 0;
    int blocks = 0;
    int endblocks = 0;
    int almost_endblocks = 0;
    int internal_blocks = 0;
    int cutpoints = 0;
    int three_cutpoints = 0;
    int two_cutpoints = 0;

    bool operator==(const FamilyCounts&) const = default;
};

FamilyCounts family_counts(const Graph& g);
FamilyCounts expected_family_counts(int k);

struct PropositionReport {
    bool ok = true;
    // One entry per failed item, prefixed with the item number.
    std::vector<std::string> failures;
    FamilyCounts counts;
};

// Checks the six structural properties of a member built by k >= 1
// applications. InputError for k < 1.
PropositionReport check_proposition(const Graph& g, int k);

// First induced copy of any family member (smallest members first); the
// image vertex set, or nullopt when g is free of the family.
std::optional<VertexSet> find_induced_family_member(const Graph& g);

using FamilyContainmentOracle = std::function<bool(const Graph&)>;

// True iff no component of f - v contains an induced family member, for
// every vertex v. The default oracle is find_induced_family_member.
bool check_minimality(const Graph& f, const FamilyContainmentOracle& contains_member = {});

}  // namespace bvpg
