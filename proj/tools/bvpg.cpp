// bvpg: recognise, verify and enumerate B0-VPG block graphs.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "bvpg/certifier.hpp"
#include "bvpg/family.hpp"
#include "bvpg/io.hpp"
#include "bvpg/recognizer.hpp"
#include "bvpg/verifier.hpp"

namespace {

using namespace bvpg;

constexpr int kMalformed = 2;

void emit(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string join(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

struct RecognizeArgs {
    std::string input, out, cert;
    bool ascii = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> start_block;
};

int cmd_recognize(const RecognizeArgs& args) {
    Graph g = read_graph_file(args.input);
    RecognizeOptions opts;
    opts.tie_break_seed = args.seed;
    if (args.start_block) {
        if (g.order() == 0) throw InputError("--start-block on an empty graph");
        auto first = induced_subgraph(g, connected_components(g).front());
        int blocks = decompose(first.graph).block_count();
        if (*args.start_block < 1 || *args.start_block > blocks)
            throw InputError("--start-block must lie in 1.." + std::to_string(blocks));
        opts.start_block = *args.start_block - 1;
    }
    Recognition r = recognize(g, opts);
    if (!args.cert.empty()) emit(certificate_to_json(r), args.cert);

    if (auto* acc = std::get_if<Accepted>(&r)) {
        std::cerr << "accept: " << g.order() << " vertices on a " << acc->representation.rows << "x"
                  << acc->representation.cols << " grid\n";
        if (!args.out.empty() || !args.ascii) emit(representation_to_json(acc->representation), args.out);
        if (args.ascii) std::cout << render_ascii(acc->representation);
        return 0;
    }
    if (auto* rej = std::get_if<Rejected>(&r)) {
        std::cerr << "reject: induced family member with k=" << rej->certificate.family_k << " on vertices "
                  << join(rej->certificate.vertices) << '\n';
    } else {
        const auto& w = std::get<NotBlockGraph>(r).witness;
        std::cerr << "not a block graph: block {" << join(w.members) << "} misses edge " << w.nonadjacent.first + 1
                  << " " << w.nonadjacent.second + 1 << '\n';
    }
    if (args.cert.empty()) emit(certificate_to_json(r), args.out);
    return 1;
}

int cmd_verify(const std::string& graph_path, const std::string& rep_path) {
    Graph g = read_graph_file(graph_path);
    GridRepresentation rep = read_representation_file(rep_path, g.order());
    VerificationReport report = verify_with_lemmas(g, rep);
    for (const auto& m : report.mismatches)
        std::cerr << "mismatch " << m.u + 1 << " " << m.v + 1
                  << (m.adjacent ? ": adjacent but paths are disjoint" : ": not adjacent but paths meet") << '\n';
    for (const auto& f : report.lemma_failures) std::cerr << "lemma " << f.lemma << ": " << f.detail << '\n';
    std::cerr << (report.ok ? "ok" : "failed") << '\n';
    return report.ok ? 0 : 1;
}

int cmd_oracle(const std::string& input, const std::string& out) {
    Graph g = read_graph_file(input);
    if (g.order() > kOracleMaxVertices) {
        std::cerr << "oracle handles at most " << kOracleMaxVertices << " vertices (got " << g.order()
                  << "); use `bvpg recognize` for block graphs\n";
        return kMalformed;
    }
    auto rep = brute_force_b0vpg(g);
    if (!rep) {
        std::cerr << "no representation exists\n";
        return 1;
    }
    emit(representation_to_json(*rep), out);
    return 0;
}

int cmd_family(std::optional<int> k, std::optional<int> max_vertices, const std::string& dir, bool check) {
    if (k.has_value() == max_vertices.has_value()) throw InputError("give exactly one of --k and --max-vertices");
    if (k && *k < 0) throw InputError("--k must be non-negative");
    std::vector<FamilyMember> members = k ? family_members(*k) : enumerate_family(*max_vertices);
    std::filesystem::create_directories(dir);

    std::map<int, int> index_by_size;
    for (const auto& m : members) {
        const int n = m.graph.order();
        const int idx = index_by_size[n]++;
        auto path = std::filesystem::path(dir) / ("family_n" + std::to_string(n) + "_" + std::to_string(idx) + ".graph");
        std::ofstream out(path);
        if (!out) throw InputError("cannot write " + path.string());
        write_graph(out, m.graph, "family member k=" + std::to_string(m.k) + " " + m.canonical);
        std::cerr << path.string() << '\n';
    }
    if (!check) return 0;

    bool all_ok = true;
    std::cout << " k  n   blocks end almost internal cutpoints 3-cut 2-cut  prop  minimal\n";
    for (const auto& m : members) {
        auto c = family_counts(m.graph);
        std::string prop = "n/a";
        if (m.k >= 1) {
            auto report = check_proposition(m.graph, m.k);
            prop = report.ok ? "ok" : "FAIL";
            all_ok = all_ok && report.ok;
            for (const auto& f : report.failures) std::cerr << "k=" << m.k << " n=" << c.vertices << ": " << f << '\n';
        }
        bool minimal = check_minimality(m.graph);
        all_ok = all_ok && minimal;
        std::cout << std::setw(2) << m.k << std::setw(4) << c.vertices << std::setw(7) << c.blocks << std::setw(6)
                  << c.endblocks << std::setw(7) << c.almost_endblocks << std::setw(9) << c.internal_blocks
                  << std::setw(10) << c.cutpoints << std::setw(6) << c.three_cutpoints << std::setw(6)
                  << c.two_cutpoints << std::setw(6) << prop << std::setw(9) << (minimal ? "yes" : "NO") << '\n';
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying recognition of B0-VPG block graphs"};
    app.require_subcommand(1);

    RecognizeArgs rec;
    auto* recognize_cmd = app.add_subcommand("recognize", "Decide membership; write a representation or certificate");
    recognize_cmd->add_option("input", rec.input, "graph file")->required();
    recognize_cmd->add_option("--out", rec.out, "representation (accept) or certificate (reject) file; stdout if absent");
    recognize_cmd->add_option("--cert", rec.cert, "write the certificate file for any verdict");
    recognize_cmd->add_flag("--ascii", rec.ascii, "print an ASCII rendering on accept");
    recognize_cmd->add_option("--seed", rec.seed, "seed for BFS tie-breaking");
    recognize_cmd->add_option("--start-block", rec.start_block, "1-indexed BFS start block of the first component");

    std::string graph_path, rep_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a representation against a graph");
    verify_cmd->add_option("graph", graph_path, "graph file")->required();
    verify_cmd->add_option("representation", rep_path, "representation file")->required();

    std::optional<int> k, max_vertices;
    std::string family_dir = ".";
    bool check = false;
    auto* family_cmd = app.add_subcommand("family", "Write forbidden family members as graph files");
    family_cmd->add_option("--k", k, "number of procedure applications");
    family_cmd->add_option("--max-vertices", max_vertices, "all members up to this order");
    family_cmd->add_option("--out", family_dir, "output directory");
    family_cmd->add_flag("--check", check, "print structural counts and check each member");

    std::string oracle_input, oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for a representation (at most 7 vertices)");
    oracle_cmd->add_option("input", oracle_input, "graph file")->required();
    oracle_cmd->add_option("--out", oracle_out, "representation file; stdout if absent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kMalformed;
    }

    try {
        if (*recognize_cmd) return cmd_recognize(rec);
        if (*verify_cmd) return cmd_verify(graph_path, rep_path);
        if (*family_cmd) return cmd_family(k, max_vertices, family_dir, check);
        if (*oracle_cmd) return cmd_oracle(oracle_input, oracle_out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return kMalformed;
}
