#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainsat {

using Vertex = int;
using EdgeId = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// An undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Dynamically sized bit set over vertex indices 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const { return universe_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const;
  /// Smallest member, or -1.
  Vertex first() const;
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;
  std::vector<Vertex> to_vector() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  bool operator==(const VertexSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected labeled graph with a dense, stable edge index.
///
/// Edges keep the order in which they were first supplied; duplicate pairs
/// (in either orientation) are dropped. Adjacency rows are bit sets so the
/// same type serves the 128-vertex folded hypercubes and the small search
/// instances.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws std::invalid_argument on an out-of-range endpoint or a loop.
  static Graph build(int n, std::span<const VertexPair> pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }

  /// G + uv; the new edge receives index edge_count().
  Graph plus_edge(Vertex u, Vertex v) const;
  /// Unordered non-adjacent pairs (u < v) in lexicographic order.
  std::vector<VertexPair> non_edges() const;
  std::vector<VertexPair> edge_pairs() const;

  /// Edge-for-edge equality, including edge order.
  bool operator==(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;
  void add_edge(Vertex u, Vertex v);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<EdgeId> index_;  // n*n, -1 where absent
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int leaves);
Graph complete_multipartite(std::span<const int> part_sizes);

/// Disjoint union plus every cross pair; G's vertices keep their labels and
/// H's are shifted by |V(G)|. Edge order: E(G), E(H), then cross pairs.
Graph join_graphs(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Relabel so that old vertex v becomes perm[v]. Edge order is preserved.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
/// Length of a longest shortest path; -1 for a disconnected graph.
int diameter(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace rainsat
