#include "bvpg/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bvpg {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string text;
    int line_no = 0;
    long n = -1, m = -1, seen = 0;
    Graph g;
    while (std::getline(in, text)) {
        ++line_no;
        std::istringstream ls(text);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        if (tag == "p") {
            if (n >= 0) parse_error(line_no, "second header");
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_error(line_no, "expected `p <n> <m>`");
            g = Graph(static_cast<int>(n));
        } else if (tag == "e") {
            if (n < 0) parse_error(line_no, "edge before header");
            long u, v;
            if (!(ls >> u >> v)) parse_error(line_no, "expected `e <u> <v>`");
            if (u < 1 || u > n || v < 1 || v > n) parse_error(line_no, "vertex out of range 1.." + std::to_string(n));
            if (u == v) parse_error(line_no, "self-loop on " + std::to_string(u));
            if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
                parse_error(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            ++seen;
        } else {
            parse_error(line_no, "unknown line type `" + tag + "`");
        }
        std::string rest;
        if (ls >> rest) parse_error(line_no, "trailing text `" + rest + "`");
    }
    if (n < 0) throw InputError("missing `p <n> <m>` header");
    if (seen != m) throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

nlohmann::json representation_to_json(const GridRepresentation& rep) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : rep.paths)
        paths.push_back({{"v", p.v + 1},
                         {"dir", p.dir == Orientation::Horizontal ? "H" : "V"},
                         {"line", p.line},
                         {"lo", p.lo},
                         {"hi", p.hi}});
    return {{"grid", {{"rows", rep.rows}, {"cols", rep.cols}}}, {"paths", paths}};
}

GridRepresentation representation_from_json(const nlohmann::json& j, int n) {
    auto integer = [](const nlohmann::json& obj, const char* key, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer())
            throw InputError(where + ": missing integer `" + key + "`");
        long long x = obj[key].get<long long>();
        if (x < 0 || x > (1LL << 30)) throw InputError(where + ": `" + key + "` out of range");
        return static_cast<int>(x);
    };
    if (!j.is_object() || !j.contains("grid") || !j.contains("paths") || !j["paths"].is_array())
        throw InputError("representation needs `grid` and `paths`");
    GridRepresentation rep;
    rep.rows = integer(j["grid"], "rows", "grid");
    rep.cols = integer(j["grid"], "cols", "grid");
    rep.paths.resize(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& e : j["paths"]) {
        int v = integer(e, "v", "path");
        std::string where = "path of vertex " + std::to_string(v);
        if (v < 1 || v > n) throw InputError(where + ": vertex out of range 1.." + std::to_string(n));
        if (seen[v - 1]++) throw InputError(where + ": listed twice");
        if (!e.contains("dir") || !e["dir"].is_string() || (e["dir"] != "H" && e["dir"] != "V"))
            throw InputError(where + ": `dir` must be \"H\" or \"V\"");
        GridPath p{v - 1, e["dir"] == "H" ? Orientation::Horizontal : Orientation::Vertical, integer(e, "line", where),
                   integer(e, "lo", where), integer(e, "hi", where)};
        if (p.lo > p.hi) throw InputError(where + ": lo > hi");
        const bool h = p.dir == Orientation::Horizontal;
        if (p.line >= (h ? rep.rows : rep.cols) || p.hi >= (h ? rep.cols : rep.rows))
            throw InputError(where + ": outside the " + std::to_string(rep.rows) + "x" + std::to_string(rep.cols) +
                             " grid");
        rep.paths[v - 1] = p;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw InputError("no path for vertex " + std::to_string(v + 1));
    return rep;
}

GridRepresentation read_representation_file(const std::string& path, int n) {
    auto in = open_input(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return representation_from_json(j, n);
}

nlohmann::json certificate_to_json(const Recognition& r) {
    auto one_based = [](const VertexSet& s) {
        std::vector<int> out;
        for (Vertex v : s) out.push_back(v + 1);
        return out;
    };
    if (std::holds_alternative<Accepted>(r)) return {{"verdict", "accept"}};
    if (auto* rej = std::get_if<Rejected>(&r))
        return {{"verdict", "reject"},
                {"family_k", rej->certificate.family_k},
                {"vertices", one_based(rej->certificate.vertices)}};
    const auto& w = std::get<NotBlockGraph>(r).witness;
    return {{"verdict", "not_block_graph"},
            {"block", one_based(w.members)},
            {"nonadjacent", {w.nonadjacent.first + 1, w.nonadjacent.second + 1}}};
}

std::string render_ascii(const GridRepresentation& rep) {
    std::vector<std::string> grid(static_cast<std::size_t>(rep.rows), std::string(static_cast<std::size_t>(rep.cols), '.'));
    for (const auto& p : rep.paths) {
        GridBox b = footprint(p);
        char mark = p.is_point() ? 'o' : p.dir == Orientation::Horizontal ? '-' : '|';
        for (int y = b.y0; y <= b.y1; ++y)
            for (int x = b.x0; x <= b.x1; ++x) {
                char& cell = grid[y][x];
                cell = cell == '.' ? mark : '+';
            }
    }
    std::ostringstream out;
    for (const auto& row : grid) out << row << '\n';
    for (const auto& p : rep.paths) {
        out << p.v + 1 << ": ";
        if (p.dir == Orientation::Horizontal)
            out << "H row " << p.line << " cols " << p.lo << ".." << p.hi << '\n';
        else
            out << "V col " << p.line << " rows " << p.lo << ".." << p.hi << '\n';
    }
    return out.str();
}

}  // namespace bvpg
