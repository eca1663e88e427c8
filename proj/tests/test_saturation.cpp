#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rainsat/constructions.hpp"
#include "rainsat/graph_io.hpp"
#include "rainsat/saturation.hpp"
#include "small_graphs.hpp"

using namespace rainsat;

namespace {

bool naive_colorable(const Graph& g, const Pattern& p) {
  const auto copies = p.order() > g.vertex_count() ? std::set<std::vector<int>>{}
                                                   : oracle::copies_by_sequences(g, p.graph());
  bool found = false;
  oracle::naive_colorings(g, copies, std::max(g.edge_count(), 1), true,
                          [&](const std::vector<int>&) {
                            found = true;
                            return false;
                          });
  return found;
}

// Saturated, or the first missed pair in lexicographic order, or
// "uncolorable".
std::string naive_saturation(const Graph& g, const Pattern& p) {
  if (!naive_colorable(g, p)) return "uncolorable";
  for (const auto& [u, v] : g.non_edges())
    if (naive_colorable(g.plus_edge(u, v), p))
      return std::to_string(u) + "-" + std::to_string(v);
  return "saturated";
}

std::string summarize(const SaturationReport& r) {
  switch (r.verdict) {
    case SaturationVerdict::Saturated:
      return "saturated";
    case SaturationVerdict::NotRainbowFreeColorable:
      return "uncolorable";
    case SaturationVerdict::MissedEdge:
      return std::to_string(r.missed_edge->first) + "-" + std::to_string(r.missed_edge->second);
    case SaturationVerdict::Inconclusive:
      return "inconclusive";
  }
  return "";
}

}  // namespace

TEST_CASE("construction instances are saturated") {
  for (int n = 6; n <= 8; ++n) {
    const auto c = construct_k4_family(n);
    const SaturationReport r = check_saturation(c.graph, Pattern::clique(4));
    CHECK(r.verdict == SaturationVerdict::Saturated);
    CHECK(r.inconclusive_edges.empty());
    CHECK(r.per_nonedge.size() == c.graph.non_edges().size());
    for (const auto& ne : r.per_nonedge) CHECK(ne.outcome.verdict == Verdict::NoneExists);
  }
  const auto p5 = construct_p5_family(8);
  CHECK(check_saturation(p5.graph, Pattern::path(5)).verdict == SaturationVerdict::Saturated);
}

TEST_CASE("verdicts agree with naive enumeration on small graphs") {
  const auto by_m = testing_support::graphs_without_isolated(6);
  int compared = 0;
  for (const auto& level : by_m) {
    for (const Graph& g : level) {
      if (g.vertex_count() > 7) continue;
      for (const Pattern& p : {Pattern::clique(3), Pattern::path(4), Pattern::path(5)}) {
        SaturationOptions o;
        o.stop_at_first_miss = true;
        CHECK_MESSAGE(summarize(check_saturation(g, p, o)) == naive_saturation(g, p),
                      p.name() << " " << encode_graph6(g));
        ++compared;
      }
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("missed edges and stop at first miss") {
  const Graph star = star_graph(5);
  const SaturationReport full = check_saturation(star, Pattern::path(5));
  REQUIRE(full.verdict == SaturationVerdict::MissedEdge);
  CHECK(*full.missed_edge == VertexPair{1, 2});
  CHECK(full.per_nonedge.size() == star.non_edges().size());

  SaturationOptions o;
  o.stop_at_first_miss = true;
  o.workers = 3;
  const SaturationReport early = check_saturation(star, Pattern::path(5), o);
  CHECK(early.verdict == SaturationVerdict::MissedEdge);
  CHECK(*early.missed_edge == VertexPair{1, 2});
  REQUIRE_FALSE(early.per_nonedge.empty());
  CHECK(early.per_nonedge.back().pair == VertexPair{1, 2});
  CHECK(early.per_nonedge.back().outcome.verdict == Verdict::Found);
}

TEST_CASE("uncolorable hosts") {
  const SaturationReport r = check_saturation(complete_graph(3), Pattern::clique(3));
  CHECK(r.verdict == SaturationVerdict::NotRainbowFreeColorable);
  CHECK(r.per_nonedge.empty());
  const Graph k7 = complete_graph(7);
  CHECK(check_saturation(k7, Pattern::clique(4)).verdict ==
        SaturationVerdict::NotRainbowFreeColorable);
}

TEST_CASE("small budgets are inconclusive, never saturated") {
  const auto c = construct_k4_family(8);
  SaturationOptions o;
  o.budget = Budget::nodes(3);
  const SaturationReport r = check_saturation(c.graph, Pattern::clique(4), o);
  CHECK(r.verdict == SaturationVerdict::Inconclusive);
  SaturationOptions roomy;
  roomy.budget = Budget::nodes(1000000);
  CHECK(check_saturation(c.graph, Pattern::clique(4), roomy).verdict ==
        SaturationVerdict::Saturated);
}

TEST_CASE("worker count does not change the report") {
  const auto c = construct_k4_family(9);
  const SaturationReport a = check_saturation(c.graph, Pattern::clique(4));
  SaturationOptions o;
  o.workers = 4;
  const SaturationReport b = check_saturation(c.graph, Pattern::clique(4), o);
  CHECK(a.verdict == b.verdict);
  CHECK(a.total_nodes == b.total_nodes);
  REQUIRE(a.per_nonedge.size() == b.per_nonedge.size());
  for (std::size_t i = 0; i < a.per_nonedge.size(); ++i) {
    CHECK(a.per_nonedge[i].pair == b.per_nonedge[i].pair);
    CHECK(a.per_nonedge[i].method == b.per_nonedge[i].method);
    CHECK(a.per_nonedge[i].outcome.nodes == b.per_nonedge[i].outcome.nodes);
  }
}

TEST_CASE("exact tabulation on small orders") {
  for (int n = 3; n <= 5; ++n) {
    const RsatResult r = rsat_exact(n, Pattern::clique(3));
    REQUIRE(r.value);
    CHECK(r.exhaustive);
    CHECK(*r.value == n - 1);
    CHECK(*r.value == oracle::classical_triangle_sat(n));
    CHECK(r.witness.edge_count() == *r.value);
    REQUIRE(r.witness_coloring);
    CHECK(check_saturation(r.witness, Pattern::clique(3)).verdict == SaturationVerdict::Saturated);
  }
  const RsatResult p4 = rsat_exact(4, Pattern::clique(4));
  REQUIRE(p4.value);
  CHECK(*p4.value == 6);
  CHECK_THROWS_AS(rsat_exact(8, Pattern::clique(3)), std::invalid_argument);
  CHECK_THROWS_AS(rsat_exact(17, Pattern::clique(3), {}, true), std::invalid_argument);

  SaturationOptions tight;
  tight.budget = Budget::nodes(1);
  const RsatResult partial = rsat_exact(5, Pattern::clique(3), tight);
  CHECK_FALSE(partial.exhaustive);
}

TEST_CASE("structural audits") {
  const auto c5 = audit_structure(cycle_graph(5), Pattern::clique(4));
  int a = 0;
  for (const auto& v : c5) a += v.check == "a";
  CHECK(a == 5);
  for (int n = 6; n <= 10; ++n)
    CHECK(audit_structure(construct_k4_family(n).graph, Pattern::clique(4)).empty());
  CHECK(audit_structure(construct_kr_family(4, 31).graph, Pattern::clique(5)).empty());
  for (int n = 8; n <= 10; ++n)
    CHECK(audit_structure(construct_p5_family(n).graph, Pattern::path(5)).empty());

  const Graph two_trees = disjoint_union(path_graph(3), star_graph(4));
  const auto f = audit_structure(two_trees, Pattern::path(5));
  REQUIRE(f.size() == 1);
  CHECK(f[0].check == "f");
  CHECK(audit_structure(disjoint_union(complete_graph(3), path_graph(3)), Pattern::path(5))
            .empty());

  const Graph k3e4 = join_graphs(complete_graph(3), empty_graph(4));
  bool has_c = false;
  for (const auto& v : audit_structure(k3e4, Pattern::clique(4))) has_c |= v.check == "c";
  CHECK(has_c);

  CHECK_THROWS_AS(audit_structure(cycle_graph(5), Pattern::cycle(4)), std::invalid_argument);
  CHECK_THROWS_AS(audit_structure(cycle_graph(5), Pattern::path(4)), std::invalid_argument);
}
