// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Limits are wall-clock seconds.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rainsat/constructions.hpp"
#include "rainsat/graph_io.hpp"
#include "rainsat/hypercube.hpp"
#include "rainsat/saturation.hpp"
#include "small_graphs.hpp"

using namespace rainsat;

namespace {

struct Check {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) v.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s));
  if (!v.pass) ++failures;
  std::printf("criterion %2d %s: %s (%.2f s) %s\n", id, v.pass ? "PASS" : "FAIL", title, s,
              v.detail.c_str());
  std::fflush(stdout);
}

std::string pair_text(VertexPair p) {
  return std::to_string(p.first) + "-" + std::to_string(p.second);
}

// Saturated instances from criteria 1 and 2, audited again in criterion 10.
std::vector<std::pair<Graph, Pattern>> saturated_instances;

void require_saturated(Check& v, const ColoredConstruction& c, const SaturationOptions& o,
                       bool allow_inconclusive) {
  const SaturationReport r = check_saturation(c.graph, c.spec.pattern(), o);
  const std::string name = c.spec.to_string();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %s (%zu non-edges, %.0f ms)", name.c_str(),
                to_string(r.verdict).c_str(), r.per_nonedge.size(), r.elapsed_ms);
  v.note(buf);
  if (r.verdict == SaturationVerdict::Saturated) {
    saturated_instances.emplace_back(c.graph, c.spec.pattern());
    return;
  }
  if (r.verdict == SaturationVerdict::Inconclusive && allow_inconclusive) {
    std::string list;
    for (const auto& p : r.inconclusive_edges) list += " " + pair_text(p);
    v.note("inconclusive non-edges:" + list);
    return;
  }
  v.fail(name + " not saturated");
}

// Every automorphism of g, by trying all vertex permutations.
std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!g.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Coloring as its partition of edges into classes, for comparison up to
// color names.
std::set<std::set<VertexPair>> classes(const Graph& g, const std::vector<int>& col,
                                       const std::vector<int>& perm) {
  std::map<int, std::set<VertexPair>> by;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int a = perm[g.edge(e).u], b = perm[g.edge(e).v];
    by[col[e]].insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::set<VertexPair>> out;
  for (auto& [c, s] : by) out.insert(s);
  return out;
}

std::set<std::vector<int>> copies_or_none(const Graph& g, const Pattern& p) {
  return p.order() > g.vertex_count() ? std::set<std::vector<int>>{}
                                      : oracle::copies_by_sequences(g, p.graph());
}

}  // namespace

int main() {
  criterion(1, "K4 family saturated", 300 * 3 + 600 * 2, [](Check& v) {
    for (int n = 6; n <= 8; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      require_saturated(v, construct_k4_family(n), {}, false);
      if (std::chrono::steady_clock::now() - t0 > std::chrono::minutes(5))
        v.fail("n=" + std::to_string(n) + " over 5 min");
    }
    SaturationOptions o;
    o.budget = Budget::millis(600000);
    for (int n = 9; n <= 10; ++n) require_saturated(v, construct_k4_family(n), o, true);
  });

  criterion(2, "P5 family saturated", 360, [](Check& v) {
    for (int n = 8; n <= 10; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      require_saturated(v, construct_p5_family(n), {}, false);
      if (std::chrono::steady_clock::now() - t0 > std::chrono::minutes(2))
        v.fail("n=" + std::to_string(n) + " over 2 min");
    }
  });

  criterion(3, "path family k=6 n=20", 60.0 * 200, [](Check& v) {
    const auto c = construct_path_family(6, 20);
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_proper(c.graph, *c.coloring)) v.fail("coloring not proper");
    if (find_rainbow_copy(c.graph, *c.coloring, Pattern::path(6))) v.fail("rainbow P6 present");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > 10) v.fail("coloring check over 10 s");
    if (c.graph.edge_count() != 20 + (6 - 5) * 2) v.fail("edge count");
    v.note("edges=" + std::to_string(c.graph.edge_count()));
    SaturationOptions o;
    o.budget = Budget::millis(60000);
    const SaturationReport r = check_saturation(c.graph, Pattern::path(6), o);
    int none = 0;
    for (const auto& ne : r.per_nonedge) none += ne.outcome.verdict == Verdict::NoneExists;
    v.note(std::to_string(none) + "/" + std::to_string(c.graph.non_edges().size()) +
           " non-edges NoneExists");
    if (r.verdict != SaturationVerdict::Saturated) v.fail(to_string(r.verdict));
  });

  criterion(4, "folded hypercube uniqueness", 1800 + 600, [](Check& v) {
    const auto t0 = std::chrono::steady_clock::now();
    const UniquenessReport r3 = verify_unique_coloring(3);
    if (std::chrono::steady_clock::now() - t0 > std::chrono::seconds(1)) v.fail("w=3 over 1 s");
    if (!r3.exhaustive || r3.up_to_isomorphism != 1) v.fail("w=3 count");

    const UniquenessReport r4 = verify_unique_coloring(4);
    if (!r4.exhaustive || r4.up_to_isomorphism != 1) v.fail("w=4 count");
    v.note("w=4: " + std::to_string(r4.up_to_isomorphism) + " up to isomorphism, " +
           std::to_string(r4.up_to_relabeling) + " up to relabeling");

    // Oracle: naive enumeration of K_{4,4}, then orbits under brute-force
    // automorphisms.
    const FoldedHypercube f4 = build_folded_hypercube(4);
    std::vector<std::vector<int>> found;
    oracle::naive_colorings(f4.graph, copies_or_none(f4.graph, Pattern::path(5)), 16, true,
                            [&](const std::vector<int>& c) {
                              found.push_back(c);
                              return true;
                            });
    const auto autos = brute_automorphisms(f4.graph);
    std::set<std::set<std::set<VertexPair>>> orbit_reps;
    for (const auto& c : found) {
      std::set<std::set<VertexPair>> best;
      bool first = true;
      for (const auto& a : autos) {
        auto cl = classes(f4.graph, c, a);
        if (first || cl < best) best = cl;
        first = false;
      }
      orbit_reps.insert(best);
    }
    if (found.size() != r4.up_to_relabeling) v.fail("relabeling count differs from naive");
    if (orbit_reps.size() != r4.up_to_isomorphism) v.fail("orbit count differs from naive");

    SearchOptions stretch;
    stretch.budget = Budget::millis(600000);
    const UniquenessReport r5 = verify_unique_coloring(5, stretch);
    char buf[160];
    std::snprintf(buf, sizeof buf, "w=5 (stretch, 600 s budget): %s, %llu up to isomorphism",
                  r5.exhaustive ? "exhaustive" : "budget exceeded",
                  static_cast<unsigned long long>(r5.up_to_isomorphism));
    v.note(buf);
  });

  criterion(5, "bit-flip colorings w=3..8", 60, [](Check& v) {
    for (int w = 3; w <= 8; ++w) {
      const FoldedHypercube f = build_folded_hypercube(w);
      const EdgeColoring c = bitflip_coloring(f);
      if (!is_proper(f.graph, c)) v.fail("w=" + std::to_string(w) + " improper");
      if (find_rainbow_copy(f.graph, c, Pattern::path(w + 1)))
        v.fail("w=" + std::to_string(w) + " rainbow path");
      // Oracle: every walk with w distinct colors returns to its start, so
      // none of them is a path.
      bool closed = true;
      for (Vertex s = 0; s < f.graph.vertex_count() && closed; ++s) {
        std::vector<char> used(w + 1, 0);
        std::function<void(Vertex, int)> walk = [&](Vertex x, int len) {
          if (len == w) {
            closed &= x == s;
            return;
          }
          for (EdgeId e : f.graph.incident_edges(x)) {
            if (used[c[e]]) continue;
            used[c[e]] = 1;
            walk(f.graph.edge(e).u == x ? f.graph.edge(e).v : f.graph.edge(e).u, len + 1);
            used[c[e]] = 0;
          }
        };
        walk(s, 0);
      }
      if (!closed) v.fail("w=" + std::to_string(w) + " open rainbow walk");
    }
  });

  criterion(6, "TBFRC round trip w=5,6", 60, [](Check& v) {
    for (int w = 5; w <= 6; ++w) {
      const FoldedHypercube f = build_folded_hypercube(w);
      const EdgeColoring c = bitflip_coloring(f);
      const auto t = find_tbfrc(f, c);
      if (!t) {
        v.fail("no TBFRC at w=" + std::to_string(w));
        continue;
      }
      if (!equal_up_to_relabeling(extend_tbfrc(f, *t), c))
        v.fail("w=" + std::to_string(w) + " differs");
    }
  });

  criterion(7, "exact tabulation K3", 600, [](Check& v) {
    for (int n = 3; n <= 6; ++n) {
      const RsatResult r = rsat_exact(n, Pattern::clique(3));
      const int classical = oracle::classical_triangle_sat(n);
      const std::string tag = "n=" + std::to_string(n);
      if (!r.value || !r.exhaustive) v.fail(tag + " not exhaustive");
      else if (*r.value != n - 1 || *r.value != classical)
        v.fail(tag + " value " + std::to_string(*r.value));
      v.note(tag + ":" + (r.value ? std::to_string(*r.value) : "none"));
    }
  });

  criterion(8, "greedy rainbow cycle", 300, [](Check& v) {
    const auto a = greedy_cycle_trials(7, 19, 1000, 7);
    const auto b = greedy_cycle_trials(9, 25, 200, 9);
    v.note("k=7: " + std::to_string(a.successes) + "/1000, k=9: " + std::to_string(b.successes) +
           "/200");
    if (a.failures || a.successes != 1000) v.fail("k=7 failures");
    if (b.failures || b.successes != 200) v.fail("k=9 failures");
  });

  criterion(9, "closed-form regression", 60, [](Check& v) {
    auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
    auto expect = [&](const ConstructionSpec& s, std::int64_t want) {
      const auto c = construct(s);
      if (c.graph.edge_count() != want || s.edge_count() != want)
        v.fail(s.to_string() + " has " + std::to_string(c.graph.edge_count()) + ", want " +
               std::to_string(want));
    };
    for (int n = 6; n <= 14; ++n) {
      const int q = (n - 2) / 4, m = (n - 2) % 4;
      expect({Family::K4, 0, 0, n}, 1 + 2 * (n - 2) + 6 * q + c2(m));
    }
    for (auto [r, n] : {std::pair{3, 12}, {4, 31}}) {
      std::vector<std::int64_t> parts{1};
      std::int64_t used = 1;
      for (int i = 3; i <= r; ++i) {
        parts.push_back(i * c2(i - 1) + 1);
        used += parts.back();
      }
      parts.push_back(n - used);
      std::int64_t sq = 0;
      for (auto p : parts) sq += p * p;
      expect({Family::Kr, r, 0, n}, (std::int64_t{n} * n - sq) / 2);
    }
    for (auto [k, n] : {std::pair{6, 20}, {7, 48}, {8, 112}})
      expect({Family::Path, 0, k, n}, n + (k - 5) * (std::int64_t{1} << (k - 5)));
    for (int n = 8; n <= 12; ++n) expect({Family::P5, 0, 0, n}, n + 2);
    for (auto [k, n] : {std::pair{7, 19}, {9, 25}}) {
      const int h = (k - 1) / 2;
      expect({Family::Cycle, 0, k, n}, std::int64_t{h} * n - c2(h + 1));
    }
    for (int r = 3; r <= 5; ++r) {
      const std::int64_t poly = (r * r * r * r - 2 * r * r * r - r * r + 10 * r - 8);
      if (poly % 8) v.fail("polynomial not integral at r=" + std::to_string(r));
      const ConstructionSpec a{Family::Kr, r, 0, 500}, b{Family::Kr, r, 0, 501};
      const std::int64_t slope = b.edge_count() - a.edge_count();
      if (slope != poly / 8 || kr_upper_poly_slope(r) != Rational(poly / 8))
        v.fail("slope at r=" + std::to_string(r));
    }
  });

  criterion(10, "structural audits", 60, [](Check& v) {
    if (saturated_instances.empty()) v.fail("no saturated instances recorded");
    for (const auto& [g, p] : saturated_instances) {
      const auto violations = audit_structure(g, p);
      if (!violations.empty())
        v.fail(p.name() + " " + encode_graph6(g) + ": " + violations[0].check + " " +
               violations[0].detail);
    }
    v.note(std::to_string(saturated_instances.size()) + " instances clean");
    const auto planted = audit_structure(cycle_graph(5), Pattern::clique(4));
    bool a = false;
    for (const auto& x : planted) a |= x.check == "a";
    if (!a) v.fail("C5/K4 fixture not flagged");
    v.note("C5/K4: " + std::to_string(planted.size()) + " violations");
  });

  criterion(11, "join-extension audit", 120, [](Check& v) {
    for (int r = 3; r <= 4; ++r)
      if (!audit_clique_extension(r, 100, 100 + r).passed) v.fail("r=" + std::to_string(r));
    const auto ex = audit_clique_extension(3, 0, 1, true);
    if (!ex.passed) v.fail("exhaustive r=3");
    v.note("exhaustive r=3 checked " + std::to_string(ex.exhaustive_checked));
  });

  criterion(12, "solver vs naive enumeration", 600, [](Check& v) {
    const auto by_m = testing_support::graphs_without_isolated(8);
    std::size_t graphs = 0;
    for (const auto& level : by_m) {
      for (const Graph& g : level) {
        ++graphs;
        for (const Pattern& p : {Pattern::clique(3), Pattern::path(4)}) {
          bool naive = false;
          oracle::naive_colorings(g, copies_or_none(g, p), std::max(g.edge_count(), 1), true,
                                  [&](const std::vector<int>&) {
                                    naive = true;
                                    return false;
                                  });
          const bool solver = find_rainbow_free_coloring(g, p).verdict == Verdict::Found;
          if (naive != solver) v.fail(p.name() + " " + encode_graph6(g));
        }
      }
    }
    v.note(std::to_string(graphs) + " graphs");
    if (graphs != 788) v.fail("expected 788 graphs");
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
