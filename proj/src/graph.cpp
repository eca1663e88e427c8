#include "rainsat/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace rainsat {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

int VertexSet::count() const {
  int total = 0;
  for (auto w : words_) total += __builtin_popcountll(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + __builtin_ctzll(words_[w]));
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  const int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + __builtin_ctzll(bits));
    if (++w == words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Graph::Graph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n), VertexSet(n)),
      incident_(static_cast<std::size_t>(n)),
      index_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::build(int n, std::span<const VertexPair> pairs) {
  Graph g(n);
  for (const auto& [a, b] : pairs) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (!g.adjacent(a, b)) g.add_edge(a, b);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("endpoint " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  adj_[u].set(v);
  adj_[v].set(u);
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  index_[static_cast<std::size_t>(u) * n_ + v] = id;
  index_[static_cast<std::size_t>(v) * n_ + u] = id;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const EdgeId id = index_[static_cast<std::size_t>(u) * n_ + v];
  if (id < 0) return std::nullopt;
  return id;
}

Graph Graph::plus_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw std::invalid_argument("edge already present");
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

std::vector<VertexPair> Graph::non_edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexPair> Graph::edge_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_;
}

Graph complete_graph(int n) {
  std::vector<VertexPair> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int k) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
  return Graph::build(k, pairs);
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  return Graph::build(k, pairs);
}

Graph star_graph(int leaves) {
  std::vector<VertexPair> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::build(leaves + 1, pairs);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) throw std::invalid_argument("negative part size");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<VertexPair> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

Graph join_graphs(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  std::vector<VertexPair> pairs = g.edge_pairs();
  for (const auto& e : h.edges()) pairs.emplace_back(e.u + ng, e.v + ng);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.vertex_count(); ++v) pairs.emplace_back(u, v + ng);
  return Graph::build(ng + h.vertex_count(), pairs);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  std::vector<VertexPair> pairs = g.edge_pairs();
  for (const auto& e : h.edges()) pairs.emplace_back(e.u + ng, e.v + ng);
  return Graph::build(ng + h.vertex_count(), pairs);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<VertexPair> pairs;
  pairs.reserve(g.edges().size());
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::build(g.vertex_count(), pairs);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace rainsat
