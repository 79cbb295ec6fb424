#pragma once

#include <stdexcept>
#include <string>

#include "ricci/graph.hpp"

namespace ricci {

enum class GraphFormat { Edgelist, Graph6, Dot };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edgelist: "n m" header, then m lines "u v" with 0 <= u < v < n.
// Graph6: standard ASCII encoding, one graph per line (first line used).
// DOT is export-only.
Graph parse_graph(const std::string& bytes, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Infers format from a file name: ".g6" -> graph6, otherwise edgelist.
GraphFormat format_from_path(const std::string& path);

Graph parse_edgelist(const std::string& bytes);
Graph parse_graph6(const std::string& bytes);
std::string to_edgelist(const Graph& g);
std::string to_graph6(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace ricci
