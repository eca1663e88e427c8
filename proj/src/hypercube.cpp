#include "rainsat/hypercube.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rainsat/canonical.hpp"
#include "rainsat/graph_io.hpp"

namespace rainsat {

int FoldedHypercube::vertex_bit(Vertex v, int bit) const {
  return bit == 1 ? 0 : (v >> (w - bit)) & 1;
}

Vertex FoldedHypercube::flip(Vertex v, int bit) const {
  // Flipping the leading bit and taking the complement's representative
  // flips every other bit instead.
  return bit == 1 ? v ^ ((1 << (w - 1)) - 1) : v ^ (1 << (w - bit));
}

std::string FoldedHypercube::label(Vertex v) const {
  std::string s;
  for (int bit = 1; bit <= w; ++bit) s.push_back(static_cast<char>('0' + vertex_bit(v, bit)));
  return s;
}

FoldedHypercube build_folded_hypercube(int w) {
  if (w < 3 || w > 20) throw std::invalid_argument("folded hypercube needs 3 <= w <= 20");
  FoldedHypercube f;
  f.w = w;
  const int n = 1 << (w - 1);
  std::vector<VertexPair> pairs;
  std::vector<int> bits;
  for (Vertex r = 0; r < n; ++r) {
    for (int bit = 1; bit <= w; ++bit) {
      const Vertex s = f.flip(r, bit);
      if (r < s) {
        pairs.emplace_back(r, s);
        bits.push_back(bit);
      }
    }
  }
  f.graph = Graph::build(n, pairs);
  f.bitflip = std::move(bits);
  return f;
}

EdgeColoring bitflip_coloring(const FoldedHypercube& f) { return EdgeColoring(f.bitflip); }

std::optional<Tbfc> find_tbfrc(const FoldedHypercube& f, const EdgeColoring& c) {
  if (!is_proper(f.graph, c)) throw std::invalid_argument("find_tbfrc: coloring is not proper");
  const int w = f.w;
  Tbfc t;
  std::vector<char> bit_used(static_cast<std::size_t>(w + 1), 0);
  // Any w distinct flips from a vertex return to it, and proper sub-walks
  // cannot revisit a vertex, so only bits and colors need tracking.
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(t.edges.size()) == w) return true;
    const Vertex tail = t.cycle.back();
    for (int bit = 1; bit <= w; ++bit) {
      if (bit_used[bit]) continue;
      const Vertex next = f.flip(tail, bit);
      const EdgeId e = *f.graph.edge_id(tail, next);
      if (std::find(t.colors.begin(), t.colors.end(), c[e]) != t.colors.end()) continue;
      bit_used[bit] = 1;
      t.bits.push_back(bit);
      t.edges.push_back(e);
      t.colors.push_back(c[e]);
      t.cycle.push_back(next);
      if (self(self)) return true;
      t.cycle.pop_back();
      t.colors.pop_back();
      t.edges.pop_back();
      t.bits.pop_back();
      bit_used[bit] = 0;
    }
    return false;
  };
  for (Vertex s = 0; s < f.graph.vertex_count(); ++s) {
    t = Tbfc{};
    t.cycle.push_back(s);
    if (rec(rec)) {
      t.cycle.pop_back();  // back at s
      return t;
    }
  }
  return std::nullopt;
}

EdgeColoring extend_tbfrc(const FoldedHypercube& f, const Tbfc& t) {
  if (f.w < 5) throw std::invalid_argument("extend_tbfrc needs w >= 5");
  const int w = f.w;
  if (static_cast<int>(t.bits.size()) != w || static_cast<int>(t.colors.size()) != w)
    throw std::invalid_argument("extend_tbfrc: cycle must have w edges with colors");
  std::vector<Color> color_of_bit(static_cast<std::size_t>(w + 1), -1);
  for (int i = 0; i < w; ++i) {
    const int bit = t.bits[i];
    if (bit < 1 || bit > w || color_of_bit[bit] >= 0)
      throw std::invalid_argument("extend_tbfrc: cycle does not use every bit-flip once");
    color_of_bit[bit] = t.colors[i];
  }
  std::set<Color> distinct(t.colors.begin(), t.colors.end());
  if (static_cast<int>(distinct.size()) != w)
    throw std::invalid_argument("extend_tbfrc: cycle is not rainbow");
  std::vector<Color> colors;
  colors.reserve(f.bitflip.size());
  for (int bit : f.bitflip) colors.push_back(color_of_bit[bit]);
  EdgeColoring out(std::move(colors));
  if (!is_proper(f.graph, out) || find_rainbow_copy(f.graph, out, Pattern::path(w + 1)))
    throw std::logic_error("extend_tbfrc: extension is not rainbow-path-free");
  return out;
}

UniquenessReport verify_unique_coloring(int w, const SearchOptions& options, bool allow_large) {
  if (w > 5 && !allow_large)
    throw std::invalid_argument("verify_unique_coloring is exhaustive only for w <= 5");
  const FoldedHypercube f = build_folded_hypercube(w);
  constexpr std::size_t kKeep = 4096;
  const EnumerationOutcome e =
      enumerate_rainbow_free_colorings(f.graph, Pattern::path(w + 1), options, kKeep);
  UniquenessReport r;
  r.w = w;
  r.up_to_relabeling = e.count;
  r.exhaustive = e.exhaustive && e.colorings.size() == e.count;
  r.nodes = e.nodes;
  r.elapsed_ms = e.elapsed_ms;

  // Orbits under the automorphism group: the smallest canonical image
  // serves as the orbit key.
  const auto autos = automorphisms(f.graph);
  const int m = f.graph.edge_count();
  std::vector<std::vector<EdgeId>> edge_image;
  for (const auto& gamma : autos) {
    std::vector<EdgeId> img(static_cast<std::size_t>(m));
    for (EdgeId x = 0; x < m; ++x)
      img[x] = *f.graph.edge_id(gamma[f.graph.edge(x).u], gamma[f.graph.edge(x).v]);
    edge_image.push_back(std::move(img));
  }
  std::set<std::vector<Color>> orbits;
  for (const auto& col : e.colorings) {
    std::vector<Color> best;
    for (const auto& img : edge_image) {
      std::vector<Color> moved(static_cast<std::size_t>(m));
      for (EdgeId x = 0; x < m; ++x) moved[img[x]] = col[x];
      auto key = EdgeColoring(std::move(moved)).canonical().colors();
      if (best.empty() || key < best) best = std::move(key);
    }
    orbits.insert(std::move(best));
  }
  r.up_to_isomorphism = orbits.size();
  return r;
}

std::vector<Vertex> nice_path(const FoldedHypercube& f, Vertex start,
                              std::variant<AvoidBit, AvoidVertex> avoid) {
  const int w = f.w;
  if (start < 0 || start >= f.graph.vertex_count())
    throw std::invalid_argument("nice_path: start out of range");
  if (const auto* ab = std::get_if<AvoidBit>(&avoid)) {
    if (ab->bit < 1 || ab->bit > w) throw std::invalid_argument("nice_path: bit out of range");
    std::vector<Vertex> path{start};
    for (int bit = 1; bit <= w; ++bit)
      if (bit != ab->bit) path.push_back(f.flip(path.back(), bit));
    return path;
  }
  const Vertex banned = std::get<AvoidVertex>(avoid).vertex;
  if (banned == start) throw std::invalid_argument("nice_path: avoided vertex is the start");
  std::vector<Vertex> path{start};
  std::vector<char> used(static_cast<std::size_t>(w + 1), 0);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == w) return true;
    for (int bit = 1; bit <= w; ++bit) {
      if (used[bit]) continue;
      const Vertex next = f.flip(path.back(), bit);
      if (next == banned) continue;
      used[bit] = 1;
      path.push_back(next);
      if (self(self)) return true;
      path.pop_back();
      used[bit] = 0;
    }
    return false;
  };
  if (!rec(rec)) throw std::logic_error("nice_path: no path found");
  return path;
}

std::string to_bit_edge_list(const FoldedHypercube& f) {
  std::ostringstream os;
  os << "n=" << f.graph.vertex_count() << " m=" << f.graph.edge_count() << '\n';
  for (EdgeId e = 0; e < f.graph.edge_count(); ++e)
    os << f.graph.edge(e).u << ' ' << f.graph.edge(e).v << ' ' << f.bitflip[e] << '\n';
  return os.str();
}

std::string to_bit_dot(const FoldedHypercube& f) {
  std::vector<std::string> labels;
  for (int bit : f.bitflip) labels.push_back(std::to_string(bit));
  std::vector<std::string> names;
  for (Vertex v = 0; v < f.graph.vertex_count(); ++v) names.push_back(f.label(v));
  return to_dot(f.graph, labels, names);
}

}  // namespace rainsat
