// Slow, independent reference implementations used as test oracles. None of
// these call into the library beyond the Graph container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rainsat/graph.hpp"

namespace oracle {

using rainsat::Graph;
using rainsat::Vertex;
using rainsat::VertexPair;

// graph6 straight from the format description: header 63+n, then the upper
// triangle column by column, six bits per character.
inline std::string graph6(int n, const std::vector<VertexPair>& pairs) {
  std::set<VertexPair> es;
  for (auto [u, v] : pairs) es.insert({std::min(u, v), std::max(u, v)});
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(es.count({i, j}) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  std::string s(1, static_cast<char>(63 + n));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = x * 2 + bits[i + b];
    s.push_back(static_cast<char>(63 + x));
  }
  return s;
}

// Adjacency matrix as bits, minimised over all relabelings.
inline std::vector<char> brute_canonical(int n, const std::vector<VertexPair>& pairs) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : pairs) adj[u][v] = adj[v][u] = 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> cur;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cur.push_back(adj[p[i]][p[j]]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Edge sets of all copies, found by trying every vertex sequence.
inline std::set<std::vector<int>> copies_by_sequences(const Graph& g, const Graph& h) {
  const int k = h.vertex_count();
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<char> used(g.vertex_count(), 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == k) {
      std::vector<int> es;
      for (const auto& e : h.edges()) {
        const auto id = g.edge_id(seq[e.u], seq[e.v]);
        if (!id) return;
        es.push_back(*id);
      }
      std::sort(es.begin(), es.end());
      out.insert(es);
      return;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

// Plain DFS over colors {0..palette-1} in edge index order with a
// properness check and a rainbow check on every copy as soon as its last
// edge is colored. Calls visit(colors) on each complete coloring; visit
// returns false to stop.
inline void naive_colorings(const Graph& g, const std::set<std::vector<int>>& copies, int palette,
                            bool restricted_growth,
                            const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = g.edge_count();
  std::vector<std::vector<const std::vector<int>*>> closing(m);
  for (const auto& c : copies) closing[c.back()].push_back(&c);
  std::vector<int> col(m, -1);
  bool stop = false;
  std::function<void(int, int)> rec = [&](int e, int next) {
    if (stop) return;
    if (e == m) {
      if (!visit(col)) stop = true;
      return;
    }
    const int top = restricted_growth ? std::min(next, palette - 1) : palette - 1;
    for (int c = 0; c <= top && !stop; ++c) {
      bool ok = true;
      for (Vertex x : {g.edge(e).u, g.edge(e).v})
        for (int f : g.incident_edges(x))
          if (f < e && col[f] == c) ok = false;
      if (!ok) continue;
      col[e] = c;
      for (const auto* cp : closing[e]) {
        std::set<int> cs;
        for (int f : *cp) cs.insert(col[f]);
        if (cs.size() == cp->size()) {
          ok = false;
          break;
        }
      }
      if (ok) rec(e + 1, c == next ? next + 1 : next);
      col[e] = -1;
    }
  };
  rec(0, 0);
}

// Classical saturation: triangle-free, and every non-edge closes a triangle.
inline bool triangle_saturated(int n, const std::vector<std::vector<char>>& adj) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (adj[a][b] && adj[a][c] && adj[b][c]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (adj[a][b]) continue;
      bool closes = false;
      for (int c = 0; c < n && !closes; ++c) closes = adj[a][c] && adj[b][c];
      if (!closes) return false;
    }
  return true;
}

// sat(n, K3) by trying every labeled graph.
inline int classical_triangle_sat(int n) {
  std::vector<VertexPair> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    const int m = __builtin_popcount(mask);
    if (best >= 0 && m >= best) continue;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) adj[all[i].first][all[i].second] = adj[all[i].second][all[i].first] = 1;
    if (triangle_saturated(n, adj)) best = m;
  }
  return best;
}

}  // namespace oracle
