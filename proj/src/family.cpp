#include "bvpg/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "bvpg/block_decomposition.hpp"
#include "bvpg/canonical.hpp"

namespace bvpg {

Graph thin_spider(int n) {
    if (n < 2) throw InputError("thin spider needs size >= 2, got " + std::to_string(n));
    Graph g = complete_graph(n);
    for (int i = 0; i < n; ++i) {
        Vertex s = g.add_vertex();
        g.add_edge(i, s);
    }
    return g;
}

namespace {

// The block through v other than `home`, when it is a 2-vertex endblock.
std::optional<Vertex> pendant_partner(const BlockDecomposition& d, Vertex v, int home) {
    for (int b : d.blocks_of[v]) {
        if (b == home) continue;
        if (d.blocks[b].size() == 2 && d.cutpoint_count(b) == 1) return d.blocks[b][0] == v ? d.blocks[b][1] : d.blocks[b][0];
    }
    return std::nullopt;
}

int common_block(const BlockDecomposition& d, const VertexSet& s) {
    for (int b : d.blocks_of[s.front()]) {
        const auto& members = d.blocks[b];
        if (std::all_of(s.begin(), s.end(),
                        [&](Vertex v) { return std::binary_search(members.begin(), members.end(), v); }))
            return b;
    }
    return -1;
}

void add_spider_on(Graph& g, Vertex hub) {
    Vertex base = g.order();
    for (int i = 0; i < 3; ++i) g.add_vertex();
    for (int i = 0; i < 3; ++i) {
        g.add_edge(hub, base + i);
        for (int j = i + 1; j < 3; ++j) g.add_edge(base + i, base + j);
    }
    for (int i = 0; i < 3; ++i) g.add_edge(base + i, g.add_vertex());
}

}  // namespace

AppliedProcedure apply_procedure(const Graph& g, const ProcedureStep& step) {
    VertexSet h = make_vertex_set(step.h);
    if (h.size() != 4) throw InputError("procedure: H must have exactly 4 vertices");
    for (Vertex v : h)
        if (v < 0 || v >= g.order()) throw InputError("procedure: H vertex out of range");
    if (step.v1 == step.v2) throw InputError("procedure: v1 and v2 must differ");
    if (!std::binary_search(h.begin(), h.end(), step.v1) || !std::binary_search(h.begin(), h.end(), step.v2))
        throw InputError("procedure: v1 and v2 must lie in H");
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
            if (!g.has_edge(h[i], h[j])) throw InputError("procedure: H is not complete");

    auto d = decompose(g);
    int home = common_block(d, h);
    if (home < 0) throw InputError("procedure: H is not inside a single block");
    for (Vertex v : {step.v1, step.v2})
        if (!is_two_cutpoint(d, v))
            throw InputError("procedure: vertex " + std::to_string(v) + " is not a 2-cutpoint");
    auto p1 = pendant_partner(d, step.v1, home);
    auto p2 = pendant_partner(d, step.v2, home);
    if (!p1 || !p2) throw InputError("procedure: v1 and v2 need pendant (size-2) endblocks");

    std::set<Vertex> removed{step.v1, step.v2, *p1, *p2};
    AppliedProcedure out;
    out.new_id.assign(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed.count(v)) out.new_id[v] = next++;

    out.graph = Graph(next);
    for (auto [u, v] : g.edges())
        if (out.new_id[u] >= 0 && out.new_id[v] >= 0) out.graph.add_edge(out.new_id[u], out.new_id[v]);

    out.contracted = out.graph.add_vertex();
    for (Vertex v : {step.v1, step.v2})
        for (Vertex w : g.neighbors(v))
            if (out.new_id[w] >= 0) out.graph.add_edge(out.contracted, out.new_id[w]);
    add_spider_on(out.graph, out.contracted);
    add_spider_on(out.graph, out.contracted);
    return out;
}

std::vector<ProcedureStep> procedure_steps(const Graph& g) {
    std::vector<ProcedureStep> steps;
    auto d = decompose(g);
    for (int b = 0; b < d.block_count(); ++b) {
        const auto& members = d.blocks[b];
        if (members.size() < 4) continue;
        VertexSet eligible;
        for (Vertex v : d.block_cutpoints[b])
            if (is_two_cutpoint(d, v) && pendant_partner(d, v, b)) eligible.push_back(v);
        for (std::size_t i = 0; i < eligible.size(); ++i)
            for (std::size_t j = i + 1; j < eligible.size(); ++j) {
                ProcedureStep s{{eligible[i], eligible[j]}, eligible[i], eligible[j]};
                for (Vertex v : members) {
                    if (s.h.size() == 4) break;
                    if (v != s.v1 && v != s.v2) s.h.push_back(v);
                }
                s.h = make_vertex_set(std::move(s.h));
                steps.push_back(std::move(s));
            }
    }
    return steps;
}

namespace {

class FamilyCache {
public:
    std::vector<FamilyMember> level(int k) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(levels_.size()) <= k) grow();
        return levels_[k];
    }

private:
    void grow() {
        if (levels_.empty()) {
            Graph n5 = thin_spider(5);
            levels_.push_back({FamilyMember{n5, 0, *block_graph_canonical_form(n5)}});
            return;
        }
        const int k = static_cast<int>(levels_.size());
        struct Job {
            const Graph* g;
            ProcedureStep step;
        };
        std::vector<Job> jobs;
        for (const auto& m : levels_.back())
            for (auto& s : procedure_steps(m.graph)) jobs.push_back({&m.graph, std::move(s)});

        std::vector<FamilyMember> produced(jobs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            Graph g = apply_procedure(*jobs[i].g, jobs[i].step).graph;
            std::string canon = *block_graph_canonical_form(g);
            produced[i] = FamilyMember{std::move(g), k, std::move(canon)};
        }

        std::map<std::string, FamilyMember> unique;
        for (auto& m : produced) unique.try_emplace(m.canonical, std::move(m));
        std::vector<FamilyMember> next;
        for (auto& [canon, m] : unique) next.push_back(std::move(m));
        levels_.push_back(std::move(next));
    }

    std::mutex mutex_;
    std::vector<std::vector<FamilyMember>> levels_;
};

FamilyCache& cache() {
    static FamilyCache c;
    return c;
}

}  // namespace

std::vector<FamilyMember> family_members(int k) {
    if (k < 0) return {};
    return cache().level(k);
}

const std::vector<FamilyMember>& enumerate_family(int max_vertices) {
    static std::mutex mutex;
    static std::map<int, std::vector<FamilyMember>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(max_vertices);
    if (it != memo.end()) return it->second;
    std::vector<FamilyMember> out;
    for (int k = 0; family_vertex_count(k) <= max_vertices; ++k) {
        auto level = family_members(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return memo.emplace(max_vertices, std::move(out)).first->second;
}

std::optional<int> family_member_k(const Graph& g) {
    const int n = g.order();
    if (n < 10 || (n - 1) % 9 != 0) return std::nullopt;
    const int k = (n - 1) / 9 - 1;
    auto canon = block_graph_canonical_form(g);
    if (!canon) return std::nullopt;
    for (const auto& m : family_members(k))
        if (m.canonical == *canon) return k;
    return std::nullopt;
}

FamilyCounts family_counts(const Graph& g) {
    auto d = decompose(g);
    FamilyCounts c;
    c.vertices = g.order();
    c.blocks = d.block_count();
    for (int b = 0; b < d.block_count(); ++b) {
        switch (classify_block(d, b)) {
            case BlockClass::Endblock: ++c.endblocks; break;
            case BlockClass::AlmostEndblock: ++c.almost_endblocks; break;
            case BlockClass::Internal: ++c.internal_blocks; break;
        }
    }
    c.cutpoints = static_cast<int>(d.cutpoints.size());
    for (Vertex v : d.cutpoints) {
        if (is_three_cutpoint(d, v)) ++c.three_cutpoints;
        if (is_two_cutpoint(d, v)) ++c.two_cutpoints;
    }
    return c;
}

FamilyCounts expected_family_counts(int k) {
    FamilyCounts c;
    c.vertices = 9 * (k + 1) + 1;
    c.blocks = 6 * (k + 1);
    c.endblocks = 4 * (k + 1) + 1;
    c.almost_endblocks = k + 2;
    c.internal_blocks = k - 1;
    c.cutpoints = 5 * (k + 1);
    c.three_cutpoints = k;
    c.two_cutpoints = 4 * (k + 1) + 1;
    return c;
}

PropositionReport check_proposition(const Graph& g, int k) {
    if (k < 1) throw InputError("proposition applies to members with k >= 1 (N5 itself is excluded)");
    PropositionReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    auto d = decompose(g);

    for (int b = 0; b < d.block_count(); ++b)
        if (d.blocks[b].size() > 4)
            fail("i: block " + std::to_string(b) + " has " + std::to_string(d.blocks[b].size()) + " vertices");

    for (Vertex v = 0; v < g.order(); ++v) {
        bool leaf = !d.is_cutpoint(v) && g.degree(v) == 1;
        if (!leaf && !is_two_cutpoint(d, v) && !is_three_cutpoint(d, v))
            fail("ii: vertex " + std::to_string(v) + " is neither a leaf nor a 2- or 3-cutpoint");
    }

    for (int b = 0; b < d.block_count(); ++b) {
        int two = 0, three = 0;
        for (Vertex c : d.block_cutpoints[b]) {
            two += is_two_cutpoint(d, c) ? 1 : 0;
            three += is_three_cutpoint(d, c) ? 1 : 0;
        }
        const auto size = d.blocks[b].size();
        const std::string id = "block " + std::to_string(b);
        switch (classify_block(d, b)) {
            case BlockClass::Endblock:
                if (size != 2 || two != 1) fail("iii: endblock " + id + " is not a pendant edge on a 2-cutpoint");
                break;
            case BlockClass::AlmostEndblock:
                if (size != 4 || two != 3 || three != 1)
                    fail("iv: almost endblock " + id + " is not a K4 with three 2-cutpoints and one 3-cutpoint");
                break;
            case BlockClass::Internal:
                if (size != 3 || two != 1 || three != 2)
                    fail("v: internal " + id + " is not a triangle with one 2-cutpoint and two 3-cutpoints");
                break;
        }
    }

    r.counts = family_counts(g);
    auto want = expected_family_counts(k);
    if (!(r.counts == want)) {
        auto field = [&](const char* name, int got, int expected) {
            if (got != expected)
                fail(std::string("vi: ") + name + " = " + std::to_string(got) + ", expected " + std::to_string(expected));
        };
        field("vertices", r.counts.vertices, want.vertices);
        field("blocks", r.counts.blocks, want.blocks);
        field("endblocks", r.counts.endblocks, want.endblocks);
        field("almost endblocks", r.counts.almost_endblocks, want.almost_endblocks);
        field("internal blocks", r.counts.internal_blocks, want.internal_blocks);
        field("cutpoints", r.counts.cutpoints, want.cutpoints);
        field("3-cutpoints", r.counts.three_cutpoints, want.three_cutpoints);
        field("2-cutpoints", r.counts.two_cutpoints, want.two_cutpoints);
    }
    return r;
}

std::optional<VertexSet> find_induced_family_member(const Graph& g) {
    for (const auto& m : enumerate_family(g.order())) {
        if (auto phi = find_induced_copy(m.graph, g)) return make_vertex_set(*phi);
    }
    return std::nullopt;
}

bool check_minimality(const Graph& f, const FamilyContainmentOracle& contains_member) {
    auto oracle = contains_member
                      ? contains_member
                      : FamilyContainmentOracle([](const Graph& h) { return find_induced_family_member(h).has_value(); });
    for (Vertex v = 0; v < f.order(); ++v) {
        VertexSet rest;
        for (Vertex u = 0; u < f.order(); ++u)
            if (u != v) rest.push_back(u);
        auto minus_v = induced_subgraph(f, rest);
        for (const auto& comp : connected_components(minus_v.graph))
            if (oracle(induced_subgraph(minus_v.graph, comp).graph)) return false;
    }
    return true;
}

}  // namespace bvpg
