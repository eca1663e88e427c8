#pragma once

#include <unordered_set>
#include <vector>

#include "rainsat/canonical.hpp"
#include "rainsat/graph.hpp"

namespace testing_support {

using namespace rainsat;

// One graph per isomorphism class with exactly m edges and no isolated
// vertices, for m = 0..max_edges. Grown edge by edge: an edge between two
// existing vertices, to one new vertex, or between two new ones.
inline std::vector<std::vector<Graph>> graphs_without_isolated(int max_edges) {
  std::vector<std::vector<Graph>> by_m(static_cast<std::size_t>(max_edges + 1));
  by_m[0].push_back(Graph(0));
  for (int m = 1; m <= max_edges; ++m) {
    std::unordered_set<std::string> seen;
    for (const Graph& g : by_m[m - 1]) {
      const int n = g.vertex_count();
      std::vector<VertexPair> base = g.edge_pairs();
      auto offer = [&](int vertices, VertexPair e) {
        std::vector<VertexPair> pairs = base;
        pairs.push_back(e);
        Graph h = Graph::build(vertices, pairs);
        if (seen.insert(canonical_key(h)).second) by_m[m].push_back(std::move(h));
      };
      for (const auto& e : g.non_edges()) offer(n, e);
      for (Vertex u = 0; u < n; ++u) offer(n + 1, {u, n});
      offer(n + 2, {n, n + 1});
    }
  }
  return by_m;
}

}  // namespace testing_support
