#pragma once

#include <string>

#include "ktdom/graph.hpp"
#include "ktdom/hypergraph.hpp"

namespace ktdom {

// Text formats (UTF-8, LF, 1-based vertex indices):
//   graph:      header "p <n> <m>" then exactly m lines "e <u> <v>" with
//               1 <= u < v <= n; serialize sorts the edge lines.
//   hypergraph: header "h <n> <m>" then m lines "s <v1> <v2> ..." with each
//               edge listed in ascending order; edge order is preserved.
// Comment lines start with "c"; blank lines are ignored.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

// Reads a file and dispatches on the header kind.
struct ParsedInput {
    bool is_graph = false;
    Graph graph;
    Hypergraph hypergraph;
};
ParsedInput parse_input_text(const std::string& text);

std::string read_file(const std::string& path);   // Error on failure
void write_file(const std::string& path, const std::string& contents);

}  // namespace ktdom
