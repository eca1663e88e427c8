#include "rainsat/coloring.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rainsat/graph_io.hpp"

namespace rainsat {

EdgeColoring::EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

int EdgeColoring::distinct_colors() const {
  std::vector<Color> sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

EdgeColoring EdgeColoring::canonical() const {
  std::unordered_map<Color, Color> relabel;
  std::vector<Color> out;
  out.reserve(colors_.size());
  for (Color c : colors_) {
    auto [it, inserted] = relabel.try_emplace(c, static_cast<Color>(relabel.size()));
    out.push_back(it->second);
  }
  return EdgeColoring(std::move(out));
}

bool EdgeColoring::is_canonical() const {
  Color next = 0;
  for (Color c : colors_) {
    if (c > next || c < 0) return false;
    if (c == next) ++next;
  }
  return true;
}

bool equal_up_to_relabeling(const EdgeColoring& a, const EdgeColoring& b) {
  return a.size() == b.size() && a.canonical() == b.canonical();
}

namespace {

void require_cover(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                " entries for a graph with " + std::to_string(g.edge_count()) +
                                " edges");
  }
}

bool contains(const std::vector<Color>& v, Color c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

struct RainbowFinder {
  const Graph& g;
  const EdgeColoring& c;
  int k;
  std::vector<Vertex> path;
  std::vector<Color> used;
  std::vector<char> on_path;

  bool extend_path() {
    if (static_cast<int>(path.size()) == k) return true;
    const Vertex tail = path.back();
    for (EdgeId e : g.incident_edges(tail)) {
      const Vertex v = g.edge(e).u == tail ? g.edge(e).v : g.edge(e).u;
      if (on_path[v] || contains(used, c[e])) continue;
      on_path[v] = 1;
      path.push_back(v);
      used.push_back(c[e]);
      if (extend_path()) return true;
      used.pop_back();
      path.pop_back();
      on_path[v] = 0;
    }
    return false;
  }

  bool extend_cycle() {
    const Vertex root = path.front();
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == k) {
      const auto closing = g.edge_id(tail, root);
      return closing && !contains(used, c[*closing]);
    }
    for (EdgeId e : g.incident_edges(tail)) {
      const Vertex v = g.edge(e).u == tail ? g.edge(e).v : g.edge(e).u;
      if (v <= root || on_path[v] || contains(used, c[e])) continue;
      on_path[v] = 1;
      path.push_back(v);
      used.push_back(c[e]);
      if (extend_cycle()) return true;
      used.pop_back();
      path.pop_back();
      on_path[v] = 0;
    }
    return false;
  }

  bool extend_clique(const VertexSet& candidates) {
    if (static_cast<int>(path.size()) == k) return true;
    for (Vertex v = candidates.first(); v >= 0; v = candidates.next(v)) {
      const std::size_t before = used.size();
      bool ok = true;
      for (Vertex u : path) {
        const Color col = c[*g.edge_id(u, v)];
        if (contains(used, col)) {
          ok = false;
          break;
        }
        used.push_back(col);
      }
      if (ok) {
        VertexSet next = candidates & g.neighbors(v);
        for (Vertex w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.reset(w);
        path.push_back(v);
        if (extend_clique(next)) return true;
        path.pop_back();
      }
      used.resize(before);
    }
    return false;
  }

  Copy to_copy(const Pattern& pattern) const {
    Copy copy;
    copy.vertices = path;
    for (const auto& e : pattern.graph().edges())
      copy.edges.push_back(*g.edge_id(path[e.u], path[e.v]));
    std::sort(copy.edges.begin(), copy.edges.end());
    return copy;
  }
};

}  // namespace

bool is_proper(const Graph& g, const EdgeColoring& c) {
  require_cover(g, c);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Color> seen;
    for (EdgeId e : g.incident_edges(v)) {
      if (contains(seen, c[e])) return false;
      seen.push_back(c[e]);
    }
  }
  return true;
}

bool is_rainbow(const Copy& copy, const EdgeColoring& c) {
  std::vector<Color> seen;
  for (EdgeId e : copy.edges) {
    if (contains(seen, c[e])) return false;
    seen.push_back(c[e]);
  }
  return true;
}

std::optional<Copy> find_rainbow_copy(const Graph& g, const EdgeColoring& c,
                                      const Pattern& pattern) {
  if (!is_proper(g, c)) throw std::invalid_argument("find_rainbow_copy: coloring is not proper");
  if (pattern.order() > g.vertex_count()) return std::nullopt;
  RainbowFinder f{g, c, pattern.parameter(), {}, {},
                  std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)};
  switch (pattern.kind()) {
    case Pattern::Kind::Path:
    case Pattern::Kind::Cycle:
      for (Vertex s = 0; s < g.vertex_count(); ++s) {
        f.path.assign(1, s);
        f.used.clear();
        f.on_path[s] = 1;
        const bool found =
            pattern.kind() == Pattern::Kind::Path ? f.extend_path() : f.extend_cycle();
        f.on_path[s] = 0;
        if (found) return f.to_copy(pattern);
      }
      return std::nullopt;
    case Pattern::Kind::Clique: {
      VertexSet all(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) all.set(v);
      if (f.extend_clique(all)) return f.to_copy(pattern);
      return std::nullopt;
    }
    case Pattern::Kind::General:
      for (auto& copy : enumerate_copies(g, pattern)) {
        if (is_rainbow(copy, c)) return copy;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

EdgeColoring greedy_proper_coloring(const Graph& g) {
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<Color> taken;
    for (Vertex x : {g.edge(e).u, g.edge(e).v})
      for (EdgeId f : g.incident_edges(x))
        if (colors[f] >= 0) taken.push_back(colors[f]);
    Color col = 0;
    while (contains(taken, col)) ++col;
    colors[e] = col;
  }
  return EdgeColoring(std::move(colors));
}

EdgeColoring random_proper_coloring(const Graph& g, std::mt19937_64& rng, int palette) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), -1);
  Color fresh = palette;
  for (EdgeId e : order) {
    std::vector<Color> taken;
    for (Vertex x : {g.edge(e).u, g.edge(e).v})
      for (EdgeId f : g.incident_edges(x))
        if (colors[f] >= 0) taken.push_back(colors[f]);
    std::vector<Color> options;
    for (Color col = 0; col < palette; ++col)
      if (!contains(taken, col)) options.push_back(col);
    if (options.empty()) {
      colors[e] = fresh++;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      colors[e] = options[pick(rng)];
    }
  }
  return EdgeColoring(std::move(colors));
}

std::string to_coloring_text(const Graph& g, const EdgeColoring& c) {
  require_cover(g, c);
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    os << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c[e] << '\n';
  return os.str();
}

std::pair<Graph, EdgeColoring> parse_coloring_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int n = -1;
  int m = -1;
  std::vector<VertexPair> pairs;
  std::vector<Color> colors;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      if (std::sscanf(line.c_str(), "n=%d m=%d", &n, &m) != 2 || n < 0 || m < 0)
        throw ParseError("coloring: missing 'n=<count> m=<count>' header");
      continue;
    }
    std::istringstream ls(line);
    long long u = 0, v = 0, col = 0;
    if (!(ls >> u >> v >> col)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("coloring: bad line '" + line + "'");
    }
    if (col < 0) throw ParseError("coloring: negative color");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    colors.push_back(static_cast<Color>(col));
  }
  if (n < 0) throw ParseError("coloring: missing 'n=<count> m=<count>' header");
  if (static_cast<int>(pairs.size()) != m)
    throw ParseError("coloring: header says m=" + std::to_string(m) + " but found " +
                     std::to_string(pairs.size()) + " edges");
  Graph g;
  try {
    g = Graph::build(n, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("coloring: ") + e.what());
  }
  if (g.edge_count() != m) throw ParseError("coloring: duplicate edges");
  return {std::move(g), EdgeColoring(std::move(colors))};
}

}  // namespace rainsat
