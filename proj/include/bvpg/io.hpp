#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bvpg/graph.hpp"
#include "bvpg/grid.hpp"
#include "bvpg/recognizer.hpp"

namespace bvpg {

// Text graph format: `p <n> <m>`, then m lines `e <u> <v>` (1-indexed);
// lines starting with `c` and blank lines are skipped. InputError with the
// line number on anything else.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = {});

// {grid: {rows, cols}, paths: [{v, dir, line, lo, hi}]} with 1-indexed v.
nlohmann::json representation_to_json(const GridRepresentation& rep);
// Checks one entry per vertex of an n-vertex graph, lo <= hi, non-negative
// coordinates inside the grid; InputError otherwise.
GridRepresentation representation_from_json(const nlohmann::json& j, int n);
GridRepresentation read_representation_file(const std::string& path, int n);

nlohmann::json certificate_to_json(const Recognition& r);

// Row 0 first; '-' and '|' for cells of one path, 'o' for a one-point path,
// '+' where paths overlap, '.' elsewhere, followed by a legend.
std::string render_ascii(const GridRepresentation& rep);

}  // namespace bvpg
