#include "rainsat/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "rainsat/hypercube.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

int parse_int_field(std::string_view v, std::string_view what) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw std::invalid_argument("bad value for " + std::string(what) + ": '" + std::string(v) +
                                "'");
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::K4:
      return "k4";
    case Family::Kr:
      return "kr";
    case Family::Path:
      return "path";
    case Family::P5:
      return "p5";
    case Family::Cycle:
      return "cycle";
  }
  return "?";
}

std::int64_t kr_parts_total(int r) {
  std::int64_t total = 0;
  for (int i = 3; i <= r; ++i) total += kr_part_size(i);
  return total;
}

}  // namespace

std::int64_t kr_part_size(int i) { return static_cast<std::int64_t>(i) * choose2(i - 1) + 1; }

ConstructionSpec ConstructionSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("construction needs '<family>:<params>'");
  const std::string_view name = text.substr(0, colon);
  ConstructionSpec s;
  if (name == "k4")
    s.family = Family::K4;
  else if (name == "kr")
    s.family = Family::Kr;
  else if (name == "path")
    s.family = Family::Path;
  else if (name == "p5")
    s.family = Family::P5;
  else if (name == "cycle")
    s.family = Family::Cycle;
  else
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");

  std::set<std::string> seen;
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty() || rest.back() == ',')
    throw std::invalid_argument("bad parameter list in '" + std::string(text) + "'");
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("bad parameter '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const int value = parse_int_field(item.substr(eq + 1), key);
    if (!seen.insert(key).second) throw std::invalid_argument("repeated parameter " + key);
    if (key == "n")
      s.n = value;
    else if (key == "r" && s.family == Family::Kr)
      s.r = value;
    else if (key == "k" && (s.family == Family::Path || s.family == Family::Cycle))
      s.k = value;
    else
      throw std::invalid_argument("parameter " + key + " does not apply to " + std::string(name));
  }
  const bool needs_r = s.family == Family::Kr;
  const bool needs_k = s.family == Family::Path || s.family == Family::Cycle;
  if (!seen.count("n") || (needs_r && !seen.count("r")) || (needs_k && !seen.count("k")))
    throw std::invalid_argument("missing parameter in '" + std::string(text) + "'");
  s.validate();
  return s;
}

std::string ConstructionSpec::to_string() const {
  std::string out = family_name(family) + ":";
  if (family == Family::Kr) out += "r=" + std::to_string(r) + ",";
  if (family == Family::Path || family == Family::Cycle) out += "k=" + std::to_string(k) + ",";
  return out + "n=" + std::to_string(n);
}

void ConstructionSpec::validate() const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(to_string() + ": " + why);
  };
  switch (family) {
    case Family::K4:
      if (n < 6) fail("needs n >= 6");
      break;
    case Family::Kr: {
      if (r < 3) fail("needs r >= 3");
      if (r > 12) fail("r too large");
      const std::int64_t low = r * choose2(r - 1) + 2 + kr_parts_total(r);
      if (n < low) fail("needs n >= " + std::to_string(low));
      break;
    }
    case Family::Path:
      if (k < 6) fail("needs k >= 6");
      if (k > 14) fail("k too large");
      if (n < (k - 1) * (1 << (k - 4))) fail("needs n >= " + std::to_string((k - 1) * (1 << (k - 4))));
      break;
    case Family::P5:
      if (n < 8) fail("needs n >= 8");
      break;
    case Family::Cycle:
      if (k < 7 || k % 2 == 0) fail("needs odd k >= 7");
      if (n < 3 * k - 2) fail("needs n >= " + std::to_string(3 * k - 2));
      break;
  }
  if (n > 5000) fail("n too large");
}

Pattern ConstructionSpec::pattern() const {
  switch (family) {
    case Family::K4:
      return Pattern::clique(4);
    case Family::Kr:
      return Pattern::clique(r + 1);
    case Family::Path:
      return Pattern::path(k);
    case Family::P5:
      return Pattern::path(5);
    case Family::Cycle:
      return Pattern::cycle(k);
  }
  throw std::logic_error("unknown family");
}

std::int64_t ConstructionSpec::edge_count() const {
  validate();
  switch (family) {
    case Family::K4: {
      const std::int64_t q = (n - 2) / 4;
      const std::int64_t m = (n - 2) % 4;
      return 1 + 2 * (n - 2) + 6 * q + choose2(m);
    }
    case Family::Kr: {
      std::int64_t sum_sq = 1;
      for (int i = 3; i <= r; ++i) sum_sq += kr_part_size(i) * kr_part_size(i);
      const std::int64_t leftover = n - 1 - kr_parts_total(r);
      sum_sq += leftover * leftover;
      return (static_cast<std::int64_t>(n) * n - sum_sq) / 2;
    }
    case Family::Path:
      return n + static_cast<std::int64_t>(k - 5) * (std::int64_t{1} << (k - 5));
    case Family::P5:
      return n + 2;
    case Family::Cycle: {
      const std::int64_t h = (k - 1) / 2;
      return h * n - choose2(h + 1);
    }
  }
  throw std::logic_error("unknown family");
}

ColoredConstruction construct_k4_family(int n) {
  ConstructionSpec spec{Family::K4, 0, 0, n};
  spec.validate();
  const int full = (n - 2) / 4;
  const int rem = (n - 2) % 4;
  constexpr Vertex x = 0;
  constexpr Vertex y = 1;

  std::vector<VertexPair> pairs{{x, y}};
  std::vector<Color> colors{0};
  std::vector<std::string> roles{"x", "y"};
  // K6 = {x, y, a1..a4} as Z_5 plus a point at infinity: x is infinity, y is
  // 0 and a_j is j. Matching F_j pairs infinity with j and j-d with j+d.
  for (int i = 0; i < full; ++i) {
    const Vertex base = 2 + 4 * i;
    auto vertex_of = [&](int z) -> Vertex { return z == 0 ? y : base + z - 1; };
    for (int j = 0; j < 4; ++j) roles.push_back("C" + std::to_string(i + 1));
    for (int j = 0; j < 5; ++j) {
      const Color col = j == 0 ? 0 : 4 * i + j;
      if (j != 0) {
        pairs.emplace_back(x, vertex_of(j));
        colors.push_back(col);
      }
      for (int d = 1; d <= 2; ++d) {
        const Vertex a = vertex_of(((j - d) % 5 + 5) % 5);
        const Vertex b = vertex_of((j + d) % 5);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
        colors.push_back(col);
      }
    }
  }
  const Vertex rem_base = 2 + 4 * full;
  for (int j = 0; j < rem; ++j) {
    roles.push_back("C" + std::to_string(full + 1));
    pairs.emplace_back(x, rem_base + j);
    pairs.emplace_back(y, rem_base + j);
    for (int i = 0; i < j; ++i) pairs.emplace_back(rem_base + i, rem_base + j);
  }
  ColoredConstruction out;
  out.spec = spec;
  out.graph = Graph::build(n, pairs);
  out.roles = std::move(roles);

  std::vector<Color> fixed = colors;
  fixed.resize(static_cast<std::size_t>(out.graph.edge_count()), -1);
  if (rem == 0) {
    out.coloring = EdgeColoring(std::move(fixed));
  } else {
    SearchOptions options;
    options.fixed = fixed;
    const SearchOutcome r = find_rainbow_free_coloring(out.graph, Pattern::clique(4), options);
    if (r.verdict != Verdict::Found)
      throw std::logic_error("k4 family: remainder block has no valid coloring");
    out.coloring = *r.witness;
    std::set<Color> fresh;
    for (EdgeId e = static_cast<EdgeId>(colors.size()); e < out.graph.edge_count(); ++e)
      if ((*out.coloring)[e] > 4 * full) fresh.insert((*out.coloring)[e]);
    out.remainder_new_colors = static_cast<int>(fresh.size());
  }
  return out;
}

ColoredConstruction construct_kr_family(int r, int n) {
  ConstructionSpec spec{Family::Kr, r, 0, n};
  spec.validate();
  std::vector<int> sizes{1};
  for (int i = 3; i <= r; ++i) sizes.push_back(static_cast<int>(kr_part_size(i)));
  sizes.push_back(static_cast<int>(n - 1 - kr_parts_total(r)));
  ColoredConstruction out;
  out.spec = spec;
  out.graph = complete_multipartite(sizes);
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int j = 0; j < sizes[p]; ++j)
      out.roles.push_back(p + 1 == sizes.size() ? "leftover" : "part" + std::to_string(p));
  out.coloring = greedy_proper_coloring(out.graph);
  return out;
}

namespace {

// Pendant edges come last; each takes the lowest color free at its core
// vertex.
void attach_pendants(std::vector<VertexPair>& pairs, std::vector<Color>& colors,
                     std::vector<std::set<Color>>& at, Vertex core, Vertex pendant) {
  Color c = 0;
  while (at[core].count(c)) ++c;
  at[core].insert(c);
  pairs.emplace_back(core, pendant);
  colors.push_back(c);
}

ColoredConstruction finish_pendant_graph(ConstructionSpec spec, int n, std::vector<VertexPair> pairs,
                                         std::vector<Color> colors, int core_size) {
  ColoredConstruction out;
  out.spec = spec;
  out.graph = Graph::build(n, pairs);
  out.coloring = EdgeColoring(std::move(colors));
  for (Vertex v = 0; v < n; ++v) out.roles.push_back(v < core_size ? "core" : "pendant");
  return out;
}

}  // namespace

ColoredConstruction construct_path_family(int k, int n) {
  ConstructionSpec spec{Family::Path, 0, k, n};
  spec.validate();
  const FoldedHypercube core = build_folded_hypercube(k - 3);
  const int core_size = core.graph.vertex_count();
  std::vector<VertexPair> pairs = core.graph.edge_pairs();
  std::vector<Color> colors = core.bitflip;
  std::vector<std::set<Color>> at(static_cast<std::size_t>(core_size));
  for (EdgeId e = 0; e < core.graph.edge_count(); ++e) {
    at[core.graph.edge(e).u].insert(colors[e]);
    at[core.graph.edge(e).v].insert(colors[e]);
  }
  Vertex next = core_size;
  const int extra = n - (k - 1) * (1 << (k - 4));
  for (Vertex v = 0; v < core_size; ++v) {
    const int count = k - 2 + (v == 0 ? extra : 0);
    for (int j = 0; j < count; ++j) attach_pendants(pairs, colors, at, v, next++);
  }
  return finish_pendant_graph(spec, n, std::move(pairs), std::move(colors), core_size);
}

ColoredConstruction construct_p5_family(int n) {
  ConstructionSpec spec{Family::P5, 0, 0, n};
  spec.validate();
  std::vector<VertexPair> pairs{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
  std::vector<Color> colors{1, 1, 2, 2, 3, 3};
  std::vector<std::set<Color>> at(4);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    at[pairs[e].first].insert(colors[e]);
    at[pairs[e].second].insert(colors[e]);
  }
  for (Vertex p = 4; p < n; ++p) attach_pendants(pairs, colors, at, 0, p);
  return finish_pendant_graph(spec, n, std::move(pairs), std::move(colors), 4);
}

ColoredConstruction construct_cycle_family(int k, int n) {
  ConstructionSpec spec{Family::Cycle, 0, k, n};
  spec.validate();
  const int h = (k - 1) / 2;
  ColoredConstruction out;
  out.spec = spec;
  out.graph = join_graphs(complete_graph(h), empty_graph(n - h));
  for (Vertex v = 0; v < n; ++v) out.roles.push_back(v < h ? "X" : "Y");
  out.coloring = greedy_proper_coloring(out.graph);
  return out;
}

ColoredConstruction construct(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::K4:
      return construct_k4_family(spec.n);
    case Family::Kr:
      return construct_kr_family(spec.r, spec.n);
    case Family::Path:
      return construct_path_family(spec.k, spec.n);
    case Family::P5:
      return construct_p5_family(spec.n);
    case Family::Cycle:
      return construct_cycle_family(spec.k, spec.n);
  }
  throw std::logic_error("unknown family");
}

std::optional<std::vector<Vertex>> greedy_rainbow_cycle(const Graph& g, const EdgeColoring& c,
                                                        int k, const std::vector<Vertex>& x_side,
                                                        const std::vector<Vertex>& y_side) {
  if (k < 7 || k % 2 == 0) throw std::invalid_argument("greedy_rainbow_cycle: needs odd k >= 7");
  const int h = (k - 1) / 2;
  if (static_cast<int>(x_side.size()) != h)
    throw std::invalid_argument("greedy_rainbow_cycle: clique side must have (k-1)/2 vertices");
  if (!is_proper(g, c)) throw std::invalid_argument("greedy_rainbow_cycle: coloring is not proper");
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : x_side) side.at(v) = 0;
  for (Vertex v : y_side) {
    if (side.at(v) != -1) throw std::invalid_argument("greedy_rainbow_cycle: sides overlap");
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0)
    throw std::invalid_argument("greedy_rainbow_cycle: sides must cover the graph");
  std::optional<Edge> extra;
  for (const Edge& e : g.edges()) {
    if (side[e.u] == 1 && side[e.v] == 1) {
      if (extra) throw std::invalid_argument("greedy_rainbow_cycle: more than one Y-Y edge");
      extra = e;
    }
  }
  const std::int64_t expected = choose2(h) + static_cast<std::int64_t>(h) * y_side.size() + 1;
  if (!extra || g.edge_count() != expected)
    throw std::invalid_argument("greedy_rainbow_cycle: graph is not X v Y plus one Y-Y edge");

  auto col = [&](Vertex a, Vertex b) { return c[*g.edge_id(a, b)]; };
  std::vector<Vertex> xs = x_side;
  std::sort(xs.begin(), xs.end());

  // Rainbow x1 y1 y2 x2 through the extra edge.
  std::vector<Vertex> cycle;
  for (const auto& [y1, y2] : {std::pair{extra->u, extra->v}, std::pair{extra->v, extra->u}}) {
    for (Vertex x1 : xs) {
      for (Vertex x2 : xs) {
        if (x1 == x2) continue;
        // the middle color differs from both ends by properness
        if (col(x1, y1) != col(y2, x2)) {
          cycle = {x1, y1, y2, x2};
          break;
        }
      }
      if (!cycle.empty()) break;
    }
    if (!cycle.empty()) break;
  }
  if (cycle.empty()) return std::nullopt;

  std::vector<Vertex> order{cycle[0], cycle[3]};
  for (Vertex x : xs)
    if (x != cycle[0] && x != cycle[3]) order.push_back(x);

  std::set<Color> used{col(cycle[0], cycle[1]), col(cycle[1], cycle[2]), col(cycle[2], cycle[3])};
  std::vector<char> taken(static_cast<std::size_t>(g.vertex_count()), 0);
  taken[cycle[1]] = taken[cycle[2]] = 1;
  std::vector<Vertex> ys = y_side;
  std::sort(ys.begin(), ys.end());

  auto pick = [&](Vertex a, Vertex b) -> std::optional<Vertex> {
    for (Vertex y : ys) {
      if (taken[y]) continue;
      if (used.count(col(a, y)) || used.count(col(y, b))) continue;
      return y;
    }
    return std::nullopt;
  };
  for (int i = 1; i + 1 < h; ++i) {
    const auto y = pick(order[i], order[i + 1]);
    if (!y) return std::nullopt;
    taken[*y] = 1;
    used.insert(col(order[i], *y));
    used.insert(col(*y, order[i + 1]));
    cycle.push_back(*y);
    cycle.push_back(order[i + 1]);
  }
  const auto last = pick(order[h - 1], order[0]);
  if (!last) return std::nullopt;
  cycle.push_back(*last);
  return cycle;
}

namespace {

bool is_rainbow_cycle(const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& cyc,
                      int k) {
  if (static_cast<int>(cyc.size()) != k) return false;
  std::set<Vertex> vs(cyc.begin(), cyc.end());
  std::set<Color> cs;
  for (int i = 0; i < k; ++i) {
    const auto e = g.edge_id(cyc[i], cyc[(i + 1) % k]);
    if (!e) return false;
    cs.insert(c[*e]);
  }
  return static_cast<int>(vs.size()) == k && static_cast<int>(cs.size()) == k;
}

}  // namespace

GreedyCycleTrials greedy_cycle_trials(int k, int n, int trials, std::uint64_t seed) {
  const ColoredConstruction base = construct_cycle_family(k, n);
  const int h = (k - 1) / 2;
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < n; ++v) (v < h ? xs : ys).push_back(v);
  std::mt19937_64 rng(seed);
  GreedyCycleTrials out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(ys.size()) - 1);
    const Vertex a = ys[pick(rng)];
    Vertex b = a;
    while (b == a) b = ys[pick(rng)];
    const Graph g = base.graph.plus_edge(a, b);
    const EdgeColoring c = random_proper_coloring(g, rng, n - 1 + t % 4);
    const auto cyc = greedy_rainbow_cycle(g, c, k, xs, ys);
    if (cyc && is_rainbow_cycle(g, c, *cyc, k)) {
      ++out.successes;
    } else {
      ++out.failures;
      if (!out.first_failure) out.first_failure = t;
    }
  }
  return out;
}

namespace {

bool has_rainbow_extension(const Graph& g, const EdgeColoring& c, int r) {
  std::set<Color> clique_colors;
  for (Vertex a = 0; a < r; ++a)
    for (Vertex b = a + 1; b < r; ++b) clique_colors.insert(c[*g.edge_id(a, b)]);
  for (Vertex v = r; v < g.vertex_count(); ++v) {
    bool good = true;
    for (Vertex a = 0; a < r && good; ++a) good = !clique_colors.count(c[*g.edge_id(a, v)]);
    if (good) return true;
  }
  return false;
}

}  // namespace

CliqueExtensionAudit audit_clique_extension(int r, int trials, std::uint64_t seed,
                                            bool exhaustive) {
  if (r < 3) throw std::invalid_argument("audit_clique_extension needs r >= 3");
  if (exhaustive && r != 3) throw std::invalid_argument("exhaustive mode is for r = 3 only");
  const int t = static_cast<int>(r * choose2(r - 1) + 1);
  const Graph g = join_graphs(complete_graph(r), empty_graph(t));
  const int clique_edges = static_cast<int>(choose2(r));
  CliqueExtensionAudit audit;
  audit.trials = trials;

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int palette = clique_edges + trial % (r + 1);
    std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e = 0; e < clique_edges; ++e) colors[e] = e;
    std::vector<EdgeId> order;
    for (EdgeId e = clique_edges; e < g.edge_count(); ++e) order.push_back(e);
    std::shuffle(order.begin(), order.end(), rng);
    Color fresh = palette;
    for (EdgeId e : order) {
      std::vector<Color> options;
      for (Color col = 0; col < palette; ++col) {
        bool free = true;
        for (Vertex end : {g.edge(e).u, g.edge(e).v})
          for (EdgeId f : g.incident_edges(end))
            if (colors[f] == col) free = false;
        if (free) options.push_back(col);
      }
      if (options.empty()) {
        colors[e] = fresh++;
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        colors[e] = options[pick(rng)];
      }
    }
    const EdgeColoring c(std::move(colors));
    if (!is_proper(g, c) || !has_rainbow_extension(g, c, r)) ++audit.failures;
  }

  if (exhaustive) {
    // Every proper coloring of the join edges, with colors outside the
    // triangle's counted once up to relabeling.
    std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e = 0; e < clique_edges; ++e) colors[e] = e;
    EdgeColoring c(colors);
    auto rec = [&](auto&& self, EdgeId e, Color next_fresh) -> void {
      if (e == g.edge_count()) {
        ++audit.exhaustive_checked;
        if (!has_rainbow_extension(g, c, r)) ++audit.failures;
        return;
      }
      for (Color col = 0; col <= next_fresh; ++col) {
        bool free = true;
        for (Vertex end : {g.edge(e).u, g.edge(e).v})
          for (EdgeId f : g.incident_edges(end))
            if (f < e && c[f] == col) free = false;
        if (!free) continue;
        c[e] = col;
        self(self, e + 1, col == next_fresh ? next_fresh + 1 : next_fresh);
      }
      c[e] = -1;
    };
    rec(rec, clique_edges, clique_edges);
  }
  audit.passed = audit.failures == 0;
  return audit;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto whole = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad number '" + std::string(text) + "'");
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(whole(text.substr(0, slash)), whole(text.substr(slash + 1)));
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = !text.empty() && text[0] == '-';
    const std::string_view ipart = text.substr(0, dot);
    const std::int64_t i = ipart.empty() || ipart == "-" ? 0 : whole(ipart);
    const std::int64_t f = frac.empty() ? 0 : whole(frac);
    return Rational(i * den + (negative ? -f : f), den);
  }
  return Rational(whole(text));
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den, a.den * b.num);
}
bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

Rational k4_lower(std::int64_t n, Rational alpha) {
  if (!(Rational(0) < alpha) || !(alpha < Rational(1, 2)))
    throw std::invalid_argument("k4_lower needs 0 < alpha < 1/2");
  if (alpha * alpha * Rational(n) < Rational(7) || !(Rational(220) < alpha * Rational(n)))
    throw std::invalid_argument("k4_lower needs alpha^2 n >= 7 and alpha n > 220");
  return Rational(7, 2) * Rational(n) - Rational(8) * alpha * Rational(n);
}

Rational k4_upper_slope() { return Rational(7, 2); }

Rational kr_lower_slope(int r) {
  if (r < 5) throw std::invalid_argument("kr_lower_slope needs r >= 5");
  return Rational(r - 1);
}

Rational kr_upper_poly_slope(int r) {
  if (r < 3) throw std::invalid_argument("kr_upper_poly_slope needs r >= 3");
  const std::int64_t x = r;
  return Rational(x * x * x * x - 2 * x * x * x - x * x + 10 * x - 8, 8);
}

Rational path_lower(std::int64_t n) { return Rational(n - 1); }

Rational path_upper(int k, std::int64_t n) {
  if (k == 5) return Rational(n + 2);
  if (k < 6 || k > 40) throw std::invalid_argument("path_upper needs 5 <= k <= 40");
  return Rational(n + static_cast<std::int64_t>(k - 5) * (std::int64_t{1} << (k - 5)));
}

Rational cycle_upper(int k, std::int64_t n) {
  if (k < 7 || k % 2 == 0) throw std::invalid_argument("cycle_upper needs odd k >= 7");
  const std::int64_t h = (k - 1) / 2;
  return Rational(h * n - choose2(h + 1));
}

Rational closed_form(std::string_view query) {
  const auto open = query.find('(');
  if (open == std::string_view::npos || query.back() != ')')
    throw std::invalid_argument("closed form query must look like name(args)");
  const std::string name(query.substr(0, open));
  const std::string_view inside = query.substr(open + 1, query.size() - open - 2);
  if (name == "construction_edge_count")
    return Rational(ConstructionSpec::parse(inside).edge_count());

  std::vector<std::string_view> args;
  std::string_view rest = inside;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    args.push_back(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument(name + " takes " + std::to_string(count) + " argument(s)");
  };
  auto integer = [&](std::size_t i) {
    const Rational v = Rational::parse(args[i]);
    if (!v.is_integer()) throw std::invalid_argument(name + ": argument must be an integer");
    return v.num;
  };
  if (name == "k4_lower") {
    need(2);
    return k4_lower(integer(0), Rational::parse(args[1]));
  }
  if (name == "k4_upper_slope") {
    need(0);
    return k4_upper_slope();
  }
  if (name == "kr_lower_slope") {
    need(1);
    return kr_lower_slope(static_cast<int>(integer(0)));
  }
  if (name == "kr_upper_poly_slope") {
    need(1);
    return kr_upper_poly_slope(static_cast<int>(integer(0)));
  }
  if (name == "path_lower") {
    need(1);
    return path_lower(integer(0));
  }
  if (name == "path_upper") {
    need(2);
    return path_upper(static_cast<int>(integer(0)), integer(1));
  }
  if (name == "cycle_upper") {
    need(2);
    return cycle_upper(static_cast<int>(integer(0)), integer(1));
  }
  throw std::invalid_argument("unknown closed form '" + name + "'");
}

}  // namespace rainsat
