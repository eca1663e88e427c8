#include "rainsat/canonical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rainsat/graph_io.hpp"

namespace rainsat {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

constexpr int kNoJump = std::numeric_limits<int>::max();

// Equitable refinement. Cells are split by neighbour counts into each
// splitter cell, sub-cells ordered by count, so the ordered result depends
// only on the structure and the incoming ordered partition.
void refine(const Graph& g, Partition& p) {
  const int n = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      VertexSet splitter(n);
      for (Vertex v : p[s]) splitter.set(v);
      Partition next;
      next.reserve(p.size() + 4);
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) keyed.emplace_back((g.neighbors(v) & splitter).count(), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<Vertex> part;
            for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (keyed.front().first != keyed.back().first) changed = true;
      }
      if (changed) p = std::move(next);
    }
  }
}

std::string code_of(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<VertexPair> pairs;
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[order[i]] = i;
  for (const auto& e : g.edges()) pairs.emplace_back(label[e.u], label[e.v]);
  return encode_graph6(Graph::build(n, pairs));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    Partition root;
    if (g_.vertex_count() > 0) {
      root.emplace_back(static_cast<std::size_t>(g_.vertex_count()));
      std::iota(root[0].begin(), root[0].end(), 0);
    }
    std::vector<Vertex> path;
    search(std::move(root), path);
    return best_order_;
  }

  const std::string& best_code() const { return best_code_; }

 private:
  int search(Partition p, std::vector<Vertex>& path) {
    refine(g_, p);
    const auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) return leaf(p, path);

    const std::size_t cell_index = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> candidates = *target;
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> explored;
    for (Vertex w : candidates) {
      if (in_explored_orbit(w, explored, path)) continue;
      explored.push_back(w);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != cell_index) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({w});
        std::vector<Vertex> rest;
        for (Vertex v : p[i])
          if (v != w) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      path.push_back(w);
      const int jump = search(std::move(child), path);
      path.pop_back();
      if (jump < static_cast<int>(path.size())) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, const std::vector<Vertex>& path) {
    std::vector<Vertex> order;
    order.reserve(p.size());
    for (const auto& cell : p) order.push_back(cell.front());
    std::string code = code_of(g_, order);
    if (!have_first_) {
      have_first_ = true;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path;
      first_code_ = best_code_ = std::move(code);
      return kNoJump;
    }
    if (code == first_code_) {
      record_automorphism(first_order_, order);
      return common_prefix(path, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(best_order_, order);
      return common_prefix(path, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = order;
      best_path_ = path;
    }
    return kNoJump;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // True when w lies in the orbit of an explored sibling under the stored
  // automorphisms that fix the current prefix pointwise.
  bool in_explored_orbit(Vertex w, const std::vector<Vertex>& explored,
                         const std::vector<Vertex>& path) {
    if (explored.empty() || automorphisms_.empty()) return false;
    UnionFind uf(g_.vertex_count());
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex v) { return gamma[v] == v; }))
        continue;
      any = true;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) uf.unite(v, gamma[v]);
    }
    if (!any) return false;
    const int root = uf.find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex u) { return uf.find(u) == root; });
  }

  const Graph& g_;
  bool have_first_ = false;
  std::vector<Vertex> first_order_, best_order_, first_path_, best_path_;
  std::string first_code_, best_code_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

void require_exact(const Graph& g) {
  if (g.vertex_count() > kCanonicalExactLimit) {
    throw std::invalid_argument("canonical_key is exact only for n <= " +
                                std::to_string(kCanonicalExactLimit) +
                                "; use invariant_hash (hash-only mode) for n=" +
                                std::to_string(g.vertex_count()));
  }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  require_exact(g);
  Canonizer c(g);
  const auto order = c.run();
  std::vector<Vertex> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<Vertex>(i);
  return perm;
}

std::string canonical_key(const Graph& g) {
  require_exact(g);
  Canonizer c(g);
  c.run();
  return c.best_code();
}

std::uint64_t invariant_hash(const Graph& g) {
  Partition p;
  if (g.vertex_count() > 0) {
    p.emplace_back(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p[0].begin(), p[0].end(), 0);
  }
  refine(g, p);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  mix(static_cast<std::uint64_t>(g.edge_count()));
  std::vector<int> cell_of(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t c = 0; c < p.size(); ++c)
    for (Vertex v : p[c]) cell_of[v] = static_cast<int>(c);
  for (const auto& cell : p) {
    mix(cell.size());
    // Quotient matrix row of the cell's representative.
    std::vector<int> row(p.size(), 0);
    g.neighbors(cell.front()).for_each([&](Vertex v) { ++row[cell_of[v]]; });
    for (int x : row) mix(static_cast<std::uint64_t>(x));
  }
  return h;
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex t = 0; t < n; ++t) {
      if (taken[t] || g.degree(t) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], t);
      if (!ok) continue;
      image[v] = t;
      taken[t] = 1;
      self(self, v + 1);
      taken[t] = 0;
    }
    image[v] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace rainsat
