#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rainsat/graph.hpp"

namespace rainsat {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 text for the labeled graph (no trailing newline). Uses the
/// one-byte size header for n <= 62 and the extended headers above that.
std::string encode_graph6(const Graph& g);
/// Inverse of encode_graph6. Edges come out in column-major order
/// (sorted by larger endpoint, then smaller). Throws ParseError.
Graph decode_graph6(std::string_view text);

/// "n=<count>" followed by one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Graphviz text. Optional per-edge labels and per-vertex names.
std::string to_dot(const Graph& g, const std::vector<std::string>& edge_labels = {},
                   const std::vector<std::string>& vertex_names = {});

/// Accepts either format: edge list when the first token starts with "n=",
/// graph6 otherwise.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace rainsat
