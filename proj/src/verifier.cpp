#include "bvpg/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>

#include "bvpg/family.hpp"

namespace bvpg {

namespace {

void check_sizes(const Graph& g, const GridRepresentation& rep) {
    if (static_cast<int>(rep.paths.size()) != g.order())
        throw InputError("representation has " + std::to_string(rep.paths.size()) + " paths for " +
                         std::to_string(g.order()) + " vertices");
}

void scan_row(const Graph& g, const GridRepresentation& rep, Vertex u, std::vector<PairMismatch>& out) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
        bool adj = g.has_edge(u, v);
        if (adj != paths_intersect(rep.paths[u], rep.paths[v])) out.push_back({u, v, adj});
    }
}

}  // namespace

VerificationReport verify_representation_serial(const Graph& g, const GridRepresentation& rep) {
    check_sizes(g, rep);
    VerificationReport r;
    for (Vertex u = 0; u < g.order(); ++u) scan_row(g, rep, u, r.mismatches);
    r.ok = r.mismatches.empty();
    return r;
}

VerificationReport verify_representation(const Graph& g, const GridRepresentation& rep) {
    check_sizes(g, rep);
    const int n = g.order();
    std::vector<std::vector<PairMismatch>> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
    for (int u = 0; u < n; ++u) scan_row(g, rep, u, rows[u]);
    VerificationReport r;
    for (auto& row : rows) r.mismatches.insert(r.mismatches.end(), row.begin(), row.end());
    r.ok = r.mismatches.empty();
    return r;
}

CliqueCheck classify_clique_rep(const GridRepresentation& rep, const VertexSet& clique) {
    CliqueCheck out;
    if (clique.empty()) {
        out.problem = "empty clique";
        return out;
    }
    GridBox common{INT_MIN, INT_MAX, INT_MIN, INT_MAX};
    bool one_row = true, one_col = true;
    const GridBox first = footprint(rep.paths[clique.front()]);
    for (Vertex v : clique) {
        GridBox b = footprint(rep.paths[v]);
        common = intersect(common, b);
        one_row = one_row && b.y0 == b.y1 && b.y0 == first.y0;
        one_col = one_col && b.x0 == b.x1 && b.x0 == first.x0;
    }
    if (common.empty()) {
        out.problem = "paths share no common point";
        return out;
    }
    CliqueRep c;
    c.center = {common.x0, common.y0};
    if (one_row) {
        c.kind = CliqueRep::Kind::Line;
        c.axis = Orientation::Horizontal;
        c.line = first.y0;
    } else if (one_col) {
        c.kind = CliqueRep::Kind::Line;
        c.axis = Orientation::Vertical;
        c.line = first.x0;
    } else {
        if (common.x0 != common.x1 || common.y0 != common.y1) {
            out.problem = "cross clique with more than one common point";
            return out;
        }
        c.kind = CliqueRep::Kind::Cross;
    }
    out.rep = c;
    return out;
}

std::array<std::optional<Vertex>, 4> unique_farthest(const GridRepresentation& rep, const VertexSet& clique,
                                                     GridPoint center) {
    std::array<std::optional<Vertex>, 4> out;
    for (int dir = 0; dir < 4; ++dir) {
        int best = INT_MIN, count = 0;
        Vertex arg = -1;
        for (Vertex v : clique) {
            GridBox b = footprint(rep.paths[v]);
            int reach = dir == 0 ? b.y1 - center.y : dir == 1 ? b.x1 - center.x : dir == 2 ? center.y - b.y0 : center.x - b.x0;
            if (reach > best) {
                best = reach;
                count = 1;
                arg = v;
            } else if (reach == best) {
                ++count;
            }
        }
        if (count == 1) out[dir] = arg;
    }
    return out;
}

std::vector<LemmaFailure> check_cardinal_lemmas(const Graph& g, const BlockDecomposition& d,
                                                const GridRepresentation& rep) {
    check_sizes(g, rep);
    static const char* names = "NESW";
    std::vector<LemmaFailure> failures;
    for (int b = 0; b < d.block_count(); ++b) {
        const int k = d.cutpoint_count(b);
        if (k != 3 && k != 4) continue;
        const std::string lemma = k == 3 ? "three-cutpoint" : "four-cutpoint";
        auto check = classify_clique_rep(rep, d.blocks[b]);
        if (!check.rep) {
            failures.push_back({b, lemma, check.problem});
            continue;
        }
        if (check.rep->kind != CliqueRep::Kind::Cross) {
            failures.push_back({b, lemma, "represented as a line clique"});
            continue;
        }
        auto far = unique_farthest(rep, d.blocks[b], check.rep->center);
        const auto& cuts = d.block_cutpoints[b];
        // Injective assignment of cutpoints to directions.
        std::function<bool(std::size_t, int)> assign = [&](std::size_t i, int used) {
            if (i == cuts.size()) return true;
            for (int dir = 0; dir < 4; ++dir)
                if (!(used >> dir & 1) && far[dir] == cuts[i] && assign(i + 1, used | 1 << dir)) return true;
            return false;
        };
        if (!assign(0, 0)) {
            std::string detail = "cutpoints are not farthest in distinct directions; farthest:";
            for (int dir = 0; dir < 4; ++dir)
                detail += std::string(" ") + names[dir] + "=" + (far[dir] ? std::to_string(*far[dir]) : "-");
            failures.push_back({b, lemma, detail});
        }
    }
    return failures;
}

VerificationReport verify_with_lemmas(const Graph& g, const GridRepresentation& rep) {
    VerificationReport r = verify_representation(g, rep);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto d = decompose(sub.graph);
        if (validate_block_graph(sub.graph, d)) continue;
        GridRepresentation local;
        for (Vertex v : comp) {
            GridPath p = rep.paths[v];
            p.v = static_cast<Vertex>(local.paths.size());
            local.paths.push_back(p);
        }
        auto global = [&](const VertexSet& s) {
            std::string out;
            for (Vertex v : s) out += (out.empty() ? "" : ",") + std::to_string(sub.to_parent[v]);
            return "{" + out + "} ";
        };
        for (int b = 0; b < d.block_count(); ++b) {
            auto check = classify_clique_rep(local, d.blocks[b]);
            if (!check.rep) r.lemma_failures.push_back({b, "clique", global(d.blocks[b]) + check.problem});
        }
        for (auto f : check_cardinal_lemmas(sub.graph, d, local)) {
            f.detail = global(d.blocks[f.block]) + f.detail;
            r.lemma_failures.push_back(f);
        }
    }
    r.ok = r.mismatches.empty() && r.lemma_failures.empty();
    return r;
}

namespace {

// Paths stored with rank coordinates; every rank on an axis is in use.
struct SearchState {
    std::vector<GridPath> paths;  // by position in the search order
    int nx = 0, ny = 0;
};

class OrderTypeSearch {
public:
    // Highest degree first, then always a vertex with the most placed
    // neighbours (ties by degree, then id), so every new path is pinned by
    // paths it must meet.
    explicit OrderTypeSearch(const Graph& g) : g_(g) {
        const int n = g.order();
        std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (done[v]) continue;
                if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
                    best = v;
            }
            done[best] = 1;
            for (Vertex w : g.neighbors(best)) ++placed_nbrs[w];
            order_.push_back(best);
        }
    }

    int size() const { return g_.order(); }

    // Every consistent placement of the first `depth` vertices.
    std::vector<SearchState> prefixes(int depth) const {
        std::vector<SearchState> out;
        std::function<void(const SearchState&)> go = [&](const SearchState& s) {
            if (static_cast<int>(s.paths.size()) == depth) {
                out.push_back(s);
                return;
            }
            for_each_extension(s, [&](const SearchState& t) {
                go(t);
                return false;
            });
        };
        go({});
        return out;
    }

    // Depth-first completion; stop_early is polled between vertices.
    std::optional<SearchState> complete(const SearchState& s, const std::function<bool()>& stop_early) const {
        if (static_cast<int>(s.paths.size()) == size()) return s;
        if (stop_early && stop_early()) return std::nullopt;
        std::optional<SearchState> found;
        for_each_extension(s, [&](const SearchState& t) {
            found = complete(t, stop_early);
            return found.has_value();
        });
        return found;
    }

    GridRepresentation to_representation(const SearchState& s) const {
        GridRepresentation rep;
        rep.paths.resize(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < s.paths.size(); ++i) {
            GridPath p = s.paths[i];
            p.v = order_[i];
            rep.paths[p.v] = p;
        }
        return compact(rep);
    }

private:
    // Inserting a fresh value at rank r shifts every coordinate >= r on
    // that axis.
    static void insert_rank(SearchState& s, bool x_axis, int r) {
        for (auto& p : s.paths) {
            bool along_is_x = p.dir == Orientation::Horizontal;
            if (along_is_x == x_axis) {
                if (p.lo >= r) ++p.lo;
                if (p.hi >= r) ++p.hi;
            } else if (p.line >= r) {
                ++p.line;
            }
        }
        ++(x_axis ? s.nx : s.ny);
    }

    // Code 2i+1 reuses rank i, code 2i inserts a fresh rank i; returns the
    // coordinate and applies the insertion to `s`.
    static int take(SearchState& s, bool x_axis, int code) {
        if (code % 2 == 1) return code / 2;
        insert_rank(s, x_axis, code / 2);
        return code / 2;
    }

    bool consistent(const SearchState& s) const {
        const std::size_t i = s.paths.size() - 1;
        const Vertex v = order_[i];
        for (std::size_t j = 0; j < i; ++j)
            if (g_.has_edge(v, order_[j]) != paths_intersect(s.paths[i], s.paths[j])) return false;
        return true;
    }

    // Extents of a placed path across and along the pending path's axis.
    static std::pair<int, int> across_extent(const GridPath& q, bool along_x) {
        GridBox b = footprint(q);
        return along_x ? std::pair{b.y0, b.y1} : std::pair{b.x0, b.x1};
    }
    static std::pair<int, int> along_extent(const GridPath& q, bool along_x) {
        GridBox b = footprint(q);
        return along_x ? std::pair{b.x0, b.x1} : std::pair{b.y0, b.y1};
    }

    // Every placed neighbour must cross the pending path's line.
    bool line_feasible(const SearchState& s, bool along_x, int line) const {
        const Vertex v = order_[s.paths.size()];
        for (std::size_t j = 0; j < s.paths.size(); ++j) {
            if (!g_.has_edge(v, order_[j])) continue;
            auto [lo, hi] = across_extent(s.paths[j], along_x);
            if (line < lo || line > hi) return false;
        }
        return true;
    }

    // With the start fixed: neighbours must reach it, and no non-neighbour
    // may cover the start point.
    bool start_feasible(const SearchState& s, bool along_x, int line, int start) const {
        const Vertex v = order_[s.paths.size()];
        for (std::size_t j = 0; j < s.paths.size(); ++j) {
            auto [clo, chi] = across_extent(s.paths[j], along_x);
            auto [alo, ahi] = along_extent(s.paths[j], along_x);
            if (g_.has_edge(v, order_[j])) {
                if (ahi < start) return false;
            } else if (clo <= line && line <= chi && alo <= start && start <= ahi) {
                return false;
            }
        }
        return true;
    }

    // Calls visit on each consistent one-vertex extension until it returns
    // true.
    template <typename Visit>
    void for_each_extension(const SearchState& s, Visit&& visit) const {
        const bool first = s.paths.empty();
        for (Orientation dir : {Orientation::Horizontal, Orientation::Vertical}) {
            // The transpose of a representation swaps orientations.
            if (first && dir == Orientation::Vertical) break;
            const bool along_x = dir == Orientation::Horizontal;
            const int across_n = along_x ? s.ny : s.nx;
            for (int lc = 0; lc <= 2 * across_n; ++lc) {
                SearchState a = s;
                const int line = take(a, !along_x, lc);
                if (!line_feasible(a, along_x, line)) continue;
                const int along_n = along_x ? a.nx : a.ny;
                for (int loc = 0; loc <= 2 * along_n; ++loc) {
                    SearchState b = a;
                    GridPath p{order_[s.paths.size()], dir, line, 0, 0};
                    // Pending path is not in b.paths yet, so shifts skip it.
                    p.lo = take(b, along_x, loc);
                    if (!start_feasible(b, along_x, line, p.lo)) continue;
                    const int after_n = along_x ? b.nx : b.ny;
                    for (int hic = 2 * p.lo + 1; hic <= 2 * after_n; ++hic) {
                        // A point is the same whichever orientation it has.
                        if (!along_x && hic == 2 * p.lo + 1) continue;
                        SearchState c = b;
                        // Fresh ranks for hi lie above lo, so lo is unchanged.
                        const int hi = take(c, along_x, hic);
                        c.paths.push_back({p.v, dir, line, p.lo, hi});
                        if (consistent(c) && visit(c)) return;
                    }
                }
            }
        }
    }

    const Graph& g_;
    std::vector<Vertex> order_;
};

constexpr int kSplitDepth = 2;

void check_oracle_size(const Graph& g) {
    if (g.order() > kOracleMaxVertices)
        throw InputError("brute-force oracle is limited to " + std::to_string(kOracleMaxVertices) +
                         " vertices, got " + std::to_string(g.order()));
}

}  // namespace

std::optional<GridRepresentation> brute_force_b0vpg_serial(const Graph& g) {
    check_oracle_size(g);
    OrderTypeSearch search(g);
    for (const auto& prefix : search.prefixes(std::min(kSplitDepth, g.order())))
        if (auto s = search.complete(prefix, {})) return search.to_representation(*s);
    return std::nullopt;
}

std::optional<GridRepresentation> brute_force_b0vpg(const Graph& g) {
    check_oracle_size(g);
    OrderTypeSearch search(g);
    const auto prefixes = search.prefixes(std::min(kSplitDepth, g.order()));
    const int m = static_cast<int>(prefixes.size());
    std::vector<std::optional<SearchState>> results(static_cast<std::size_t>(m));
    std::atomic<int> best{m};
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < m; ++i) {
        if (i > best.load()) continue;
        auto stop = [&] { return best.load() < i; };
        results[i] = search.complete(prefixes[i], stop);
        if (results[i]) {
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    }
    const int b = best.load();
    if (b == m) return std::nullopt;
    return search.to_representation(*results[b]);
}

std::optional<VertexSet> find_induced_f_member(const Graph& g) { return find_induced_family_member(g); }

}  // namespace bvpg
