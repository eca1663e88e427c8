#include "rainsat/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace rainsat {

Pattern::Pattern(Kind kind, int parameter, Graph g, bool connected)
    : kind_(kind), parameter_(parameter), graph_(std::move(g)), connected_(connected) {}

Pattern Pattern::clique(int r) {
  if (r < 3) throw std::invalid_argument("clique pattern needs r >= 3");
  return Pattern(Kind::Clique, r, complete_graph(r), true);
}

Pattern Pattern::path(int k) {
  if (k < 3) throw std::invalid_argument("path pattern needs k >= 3 vertices");
  return Pattern(Kind::Path, k, path_graph(k), true);
}

Pattern Pattern::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle pattern needs k >= 3");
  return Pattern(Kind::Cycle, k, cycle_graph(k), true);
}

Pattern Pattern::general(Graph g, bool allow_disconnected) {
  if (g.vertex_count() > 10) throw std::invalid_argument("general pattern limited to 10 vertices");
  if (g.edge_count() == 0) throw std::invalid_argument("general pattern needs at least one edge");
  const bool connected = is_connected(g);
  if (!connected && !allow_disconnected)
    throw std::invalid_argument("disconnected pattern must be flagged explicitly");
  const int order = g.vertex_count();
  return Pattern(Kind::General, order, std::move(g), connected);
}

Pattern Pattern::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
  int value = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
  switch (text[0]) {
    case 'K':
    case 'k':
      return clique(value);
    case 'P':
    case 'p':
      return path(value);
    case 'C':
    case 'c':
      return cycle(value);
    default:
      throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
  }
}

std::string Pattern::name() const {
  switch (kind_) {
    case Kind::Clique:
      return "K" + std::to_string(parameter_);
    case Kind::Path:
      return "P" + std::to_string(parameter_);
    case Kind::Cycle:
      return "C" + std::to_string(parameter_);
    case Kind::General:
      break;
  }
  return "G" + std::to_string(graph_.vertex_count()) + "_" + std::to_string(graph_.edge_count());
}

bool Pattern::operator==(const Pattern& other) const {
  return kind_ == other.kind_ && parameter_ == other.parameter_ && graph_ == other.graph_;
}

namespace {

Copy make_copy(const Graph& host, const Graph& pattern, std::vector<Vertex> image) {
  Copy c;
  c.edges.reserve(pattern.edges().size());
  for (const auto& e : pattern.edges()) c.edges.push_back(*host.edge_id(image[e.u], image[e.v]));
  std::sort(c.edges.begin(), c.edges.end());
  c.vertices = std::move(image);
  return c;
}

void extend_cliques(const Graph& host, const Pattern& pattern, std::vector<Vertex>& chosen,
                    const VertexSet& candidates, std::vector<Copy>& out) {
  if (static_cast<int>(chosen.size()) == pattern.parameter()) {
    out.push_back(make_copy(host, pattern.graph(), chosen));
    return;
  }
  candidates.for_each([&](Vertex v) {
    // Only extend with larger labels so each clique is produced once.
    VertexSet next = candidates & host.neighbors(v);
    for (Vertex w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.reset(w);
    chosen.push_back(v);
    extend_cliques(host, pattern, chosen, next, out);
    chosen.pop_back();
  });
}

// Simple paths on k vertices; kept when first endpoint < last endpoint.
void extend_paths(const Graph& host, const Pattern& pattern, std::vector<Vertex>& path,
                  VertexSet& used, std::vector<Copy>& out) {
  const int k = pattern.parameter();
  if (static_cast<int>(path.size()) == k) {
    if (path.front() < path.back()) out.push_back(make_copy(host, pattern.graph(), path));
    return;
  }
  host.neighbors(path.back()).for_each([&](Vertex v) {
    if (used.test(v)) return;
    used.set(v);
    path.push_back(v);
    extend_paths(host, pattern, path, used, out);
    path.pop_back();
    used.reset(v);
  });
}

// Cycles rooted at their smallest vertex, oriented so path[1] < path.back().
void extend_cycles(const Graph& host, const Pattern& pattern, std::vector<Vertex>& path,
                   VertexSet& used, std::vector<Copy>& out) {
  const int k = pattern.parameter();
  const Vertex root = path.front();
  if (static_cast<int>(path.size()) == k) {
    if (host.adjacent(path.back(), root) && path[1] < path.back())
      out.push_back(make_copy(host, pattern.graph(), path));
    return;
  }
  host.neighbors(path.back()).for_each([&](Vertex v) {
    if (v <= root || used.test(v)) return;
    used.set(v);
    path.push_back(v);
    extend_cycles(host, pattern, path, used, out);
    path.pop_back();
    used.reset(v);
  });
}

struct GeneralMatcher {
  const Graph& host;
  const Graph& pat;
  std::vector<Vertex> order;  // pattern vertices in BFS order
  std::vector<Vertex> image;
  std::vector<char> used;
  std::set<std::vector<EdgeId>> seen;
  std::vector<Copy> out;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      Copy c = make_copy(host, pat, image);
      if (seen.insert(c.edges).second) out.push_back(std::move(c));
      return;
    }
    const Vertex p = order[depth];
    for (Vertex h = 0; h < host.vertex_count(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order[i];
        if (pat.adjacent(p, q) && !host.adjacent(h, image[q])) ok = false;
      }
      if (!ok) continue;
      used[h] = 1;
      image[p] = h;
      run(depth + 1);
      used[h] = 0;
    }
  }
};

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const Vertex u = order[head++];
      g.neighbors(u).for_each([&](Vertex v) {
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
      });
    }
  }
  return order;
}

}  // namespace

std::vector<Copy> enumerate_copies(const Graph& host, const Pattern& pattern) {
  std::vector<Copy> out;
  if (pattern.order() > host.vertex_count()) return out;
  switch (pattern.kind()) {
    case Pattern::Kind::Clique: {
      std::vector<Vertex> chosen;
      VertexSet all(host.vertex_count());
      for (Vertex v = 0; v < host.vertex_count(); ++v) all.set(v);
      extend_cliques(host, pattern, chosen, all, out);
      break;
    }
    case Pattern::Kind::Path: {
      VertexSet used(host.vertex_count());
      std::vector<Vertex> path;
      for (Vertex s = 0; s < host.vertex_count(); ++s) {
        used.set(s);
        path.assign(1, s);
        extend_paths(host, pattern, path, used, out);
        used.reset(s);
      }
      break;
    }
    case Pattern::Kind::Cycle: {
      VertexSet used(host.vertex_count());
      std::vector<Vertex> path;
      for (Vertex s = 0; s < host.vertex_count(); ++s) {
        used.set(s);
        path.assign(1, s);
        extend_cycles(host, pattern, path, used, out);
        used.reset(s);
      }
      break;
    }
    case Pattern::Kind::General: {
      GeneralMatcher m{host, pattern.graph(), bfs_order(pattern.graph()),
                       std::vector<Vertex>(static_cast<std::size_t>(pattern.order()), -1),
                       std::vector<char>(static_cast<std::size_t>(host.vertex_count()), 0),
                       {},
                       {}};
      m.run(0);
      out = std::move(m.out);
      break;
    }
  }
  return out;
}

}  // namespace rainsat
