#include "rainsat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "rainsat/canonical.hpp"

namespace rainsat {

std::string to_string(SaturationVerdict v) {
  switch (v) {
    case SaturationVerdict::Saturated:
      return "Saturated";
    case SaturationVerdict::NotRainbowFreeColorable:
      return "NotRainbowFreeColorable";
    case SaturationVerdict::MissedEdge:
      return "MissedEdge";
    case SaturationVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string to_string(NonEdgeMethod m) {
  switch (m) {
    case NonEdgeMethod::NoNewCopy:
      return "no_new_copy";
    case NonEdgeMethod::Extension:
      return "extension";
    case NonEdgeMethod::Inherited:
      return "inherited";
    case NonEdgeMethod::Search:
      return "search";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. fn returns true
// to stop handing out indices above i.
template <class F>
void parallel_indices(std::size_t count, int workers, F&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_above{std::numeric_limits<std::size_t>::max()};
  auto loop = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > stop_above.load()) return;
      if (fn(i)) {
        std::size_t cur = stop_above.load();
        while (i < cur && !stop_above.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (threads == 1) {
    loop();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(loop);
  for (auto& th : pool) th.join();
}

NonEdgeResult check_nonedge(const Graph& g, const Pattern& pattern, VertexPair pair,
                            const SearchOutcome& condition1, const Budget& budget) {
  NonEdgeResult r;
  r.pair = pair;
  const auto t0 = Clock::now();
  if (condition1.verdict == Verdict::NoneExists) {
    r.method = NonEdgeMethod::Inherited;
    r.outcome.verdict = Verdict::NoneExists;
    return r;
  }
  const Graph h = g.plus_edge(pair.first, pair.second);
  const EdgeId added = g.edge_count();
  const std::vector<Copy> copies = enumerate_copies(h, pattern);
  std::vector<const Copy*> through;
  for (const Copy& c : copies)
    if (std::binary_search(c.edges.begin(), c.edges.end(), added)) through.push_back(&c);

  if (condition1.witness) {
    std::vector<Color> colors = condition1.witness->colors();
    Color fresh = 0;
    for (Color c : colors) fresh = std::max(fresh, c + 1);
    if (through.empty()) {
      colors.push_back(fresh);
      r.method = NonEdgeMethod::NoNewCopy;
      r.outcome.verdict = Verdict::Found;
      r.outcome.witness = EdgeColoring(std::move(colors));
      r.outcome.elapsed_ms = ms_since(t0);
      return r;
    }
    // Cheap attempt: keep G's coloring and try every color that fits on e.
    std::set<Color> blocked;
    for (Vertex end : {pair.first, pair.second})
      for (EdgeId f : g.incident_edges(end)) blocked.insert(colors[f]);
    colors.push_back(-1);
    for (Color c = 0; c <= fresh; ++c) {
      if (blocked.count(c)) continue;
      colors.back() = c;
      const EdgeColoring attempt(colors);
      const bool clean = std::none_of(through.begin(), through.end(),
                                      [&](const Copy* cp) { return is_rainbow(*cp, attempt); });
      if (clean) {
        r.method = NonEdgeMethod::Extension;
        r.outcome.verdict = Verdict::Found;
        r.outcome.witness = attempt;
        r.outcome.elapsed_ms = ms_since(t0);
        return r;
      }
    }
  }
  SearchOptions so;
  so.budget = budget;
  r.method = NonEdgeMethod::Search;
  r.outcome = find_rainbow_free_coloring(h, copies, so);
  return r;
}

}  // namespace

SaturationReport check_saturation(const Graph& g, const Pattern& pattern,
                                  const SaturationOptions& options) {
  const auto t0 = Clock::now();
  SaturationReport rep;
  SearchOptions so;
  so.budget = options.budget;
  so.workers = options.workers;
  rep.condition1 = find_rainbow_free_coloring(g, pattern, so);

  const std::vector<VertexPair> pairs = g.non_edges();
  std::vector<NonEdgeResult> results(pairs.size());
  std::vector<char> done(pairs.size(), 0);
  parallel_indices(pairs.size(), options.workers, [&](std::size_t i) {
    results[i] = check_nonedge(g, pattern, pairs[i], rep.condition1, options.budget);
    done[i] = 1;
    return options.stop_at_first_miss && results[i].outcome.verdict == Verdict::Found;
  });

  std::size_t keep = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (done[i] && results[i].outcome.verdict == Verdict::Found) {
      rep.missed_edge = pairs[i];
      keep = options.stop_at_first_miss ? i + 1 : pairs.size();
      break;
    }
  }
  results.resize(keep);
  rep.per_nonedge = std::move(results);

  rep.total_nodes = rep.condition1.nodes;
  for (const auto& r : rep.per_nonedge) {
    rep.total_nodes += r.outcome.nodes;
    if (r.outcome.verdict == Verdict::BudgetExceeded) rep.inconclusive_edges.push_back(r.pair);
  }
  if (rep.condition1.verdict == Verdict::NoneExists)
    rep.verdict = SaturationVerdict::NotRainbowFreeColorable;
  else if (rep.missed_edge)
    rep.verdict = SaturationVerdict::MissedEdge;  // G+e colorable, so G is too
  else if (rep.condition1.verdict == Verdict::BudgetExceeded || !rep.inconclusive_edges.empty())
    rep.verdict = SaturationVerdict::Inconclusive;
  else
    rep.verdict = SaturationVerdict::Saturated;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

RsatResult rsat_exact(int n, const Pattern& pattern, const SaturationOptions& options,
                      bool allow_large) {
  if (n < 1) throw std::invalid_argument("rsat_exact needs n >= 1");
  if (n > kRsatExhaustiveLimit && !allow_large)
    throw std::invalid_argument("rsat_exact enumerates all graphs only up to n = " +
                                std::to_string(kRsatExhaustiveLimit));
  if (n > kCanonicalExactLimit) throw std::invalid_argument("rsat_exact: n too large");
  const auto t0 = Clock::now();
  RsatResult out;
  out.n = n;
  out.pattern = pattern.name();
  out.exhaustive = true;

  std::vector<VertexPair> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const int total = static_cast<int>(all.size());

  SaturationOptions per = options;
  per.workers = 1;
  per.stop_at_first_miss = true;

  for (int m = 0; m <= total; ++m) {
    // Every m-subset of the pairs, deduplicated up to isomorphism.
    std::unordered_set<std::string> seen;
    std::vector<Graph> reps;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
      std::vector<VertexPair> chosen;
      for (int i : idx) chosen.push_back(all[i]);
      Graph g = Graph::build(n, chosen);
      if (seen.insert(canonical_key(g)).second) reps.push_back(std::move(g));
      int i = m - 1;
      while (i >= 0 && idx[i] == total - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::vector<SaturationReport> reports(reps.size());
    parallel_indices(reps.size(), options.workers, [&](std::size_t i) {
      reports[i] = check_saturation(reps[i], pattern, per);
      return reports[i].verdict == SaturationVerdict::Saturated;
    });
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ++out.graphs_examined;
      if (reports[i].verdict == SaturationVerdict::Saturated) {
        out.value = m;
        out.witness = reps[i];
        out.witness_coloring = reports[i].condition1.witness;
        out.elapsed_ms = ms_since(t0);
        return out;
      }
      if (reports[i].verdict == SaturationVerdict::Inconclusive) out.exhaustive = false;
    }
  }
  out.elapsed_ms = ms_since(t0);
  return out;
}

namespace {

int common_count(const Graph& g, Vertex u, Vertex v) {
  return (g.neighbors(u) & g.neighbors(v)).count();
}

std::string pair_text(Vertex u, Vertex v) {
  return std::to_string(u) + "," + std::to_string(v);
}

}  // namespace

std::vector<Violation> audit_structure(const Graph& g, const Pattern& pattern) {
  std::vector<Violation> out;
  const int n = g.vertex_count();
  if (pattern.kind() == Pattern::Kind::Path) {
    if (pattern.parameter() < 5) throw std::invalid_argument("audit_structure: paths need k >= 5");
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int acyclic = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[s] = s;
      int vertices = 0;
      int degree_sum = 0;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++vertices;
        degree_sum += g.degree(v);
        g.neighbors(v).for_each([&](Vertex w) {
          if (comp[w] < 0) {
            comp[w] = s;
            stack.push_back(w);
          }
        });
      }
      if (degree_sum / 2 == vertices - 1) ++acyclic;
    }
    if (acyclic > 1)
      out.push_back({"f", std::to_string(acyclic) + " acyclic components"});
    return out;
  }
  if (pattern.kind() != Pattern::Kind::Clique || pattern.parameter() < 4)
    throw std::invalid_argument("audit_structure needs K_r with r >= 4 or P_k with k >= 5");
  const int r = pattern.parameter();

  if (r == 4) {
    for (const auto& [u, v] : g.non_edges()) {
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      bool has_edge = false;
      common.for_each([&](Vertex a) {
        if (!has_edge && !(g.neighbors(a) & common).empty()) has_edge = true;
      });
      if (!has_edge)
        out.push_back({"a", "no edge inside N(" + std::to_string(u) + ") & N(" +
                                std::to_string(v) + ")"});
    }
    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) <= 3) low.push_back(v);
    for (std::size_t i = 0; i < low.size(); ++i)
      for (std::size_t j = i + 1; j < low.size(); ++j)
        if (!g.adjacent(low[i], low[j]))
          out.push_back({"b", "low-degree vertices " + pair_text(low[i], low[j]) +
                                  " are not adjacent"});
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.adjacent(a, b)) continue;
        for (Vertex c = b + 1; c < n; ++c) {
          if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
          const int common =
              (g.neighbors(a) & g.neighbors(b) & g.neighbors(c)).count();
          if (common >= 4)
            out.push_back({"c", "triangle " + pair_text(a, b) + "," + std::to_string(c) +
                                    " has " + std::to_string(common) + " common neighbors"});
        }
      }
  }

  const int pair_bound = r * (r - 1) / 2 - 1;
  for (const auto& [u, v] : g.non_edges()) {
    const int common = common_count(g, u, v);
    if (common < r - 1 && g.degree(u) + g.degree(v) < pair_bound)
      out.push_back({"d", "pair " + pair_text(u, v) + ": " + std::to_string(common) +
                              " common neighbors, degree sum " +
                              std::to_string(g.degree(u) + g.degree(v))});
  }
  std::vector<Vertex> small;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == r - 2) small.push_back(v);
  if (small.size() > 1)
    out.push_back({"e", std::to_string(small.size()) + " vertices of degree " +
                            std::to_string(r - 2)});
  return out;
}

}  // namespace rainsat
