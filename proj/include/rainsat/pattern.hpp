#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rainsat/graph.hpp"

namespace rainsat {

/// The forbidden graph H.
class Pattern {
 public:
  enum class Kind { Clique, Path, Cycle, General };

  /// K_r, r >= 3.
  static Pattern clique(int r);
  /// P_k: the path on k >= 3 vertices.
  static Pattern path(int k);
  /// C_k, k >= 3.
  static Pattern cycle(int k);
  /// Arbitrary pattern with at most 10 vertices. A disconnected pattern must
  /// be flagged explicitly.
  static Pattern general(Graph g, bool allow_disconnected = false);
  /// "K4", "P5", "C7".
  static Pattern parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// r for cliques, k for paths and cycles, vertex count otherwise.
  int parameter() const { return parameter_; }
  int order() const { return graph_.vertex_count(); }
  int size() const { return graph_.edge_count(); }
  const Graph& graph() const { return graph_; }
  bool connected() const { return connected_; }
  std::string name() const;

  bool operator==(const Pattern& other) const;

 private:
  Pattern(Kind kind, int parameter, Graph g, bool connected);

  Kind kind_ = Kind::Clique;
  int parameter_ = 0;
  Graph graph_;
  bool connected_ = true;
};

/// One embedding of a pattern. Two copies are the same subgraph iff their
/// edge-index sets agree; vertex maps differing by a pattern automorphism
/// collapse to one Copy.
struct Copy {
  std::vector<Vertex> vertices;  // image of pattern vertex i
  std::vector<EdgeId> edges;     // sorted

  bool operator==(const Copy& other) const { return edges == other.edges; }
};

/// Every copy of `pattern` in `host`, once each, in a deterministic order.
/// A pattern larger than the host yields no copies.
std::vector<Copy> enumerate_copies(const Graph& host, const Pattern& pattern);

}  // namespace rainsat
