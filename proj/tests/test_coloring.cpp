#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainsat/coloring.hpp"
#include "rainsat/graph_io.hpp"
#include "rainsat/hypercube.hpp"

using namespace rainsat;

namespace {

// K4 with each perfect matching in one color.
EdgeColoring matching_coloring(const Graph& k4) {
  std::vector<Color> c(6);
  for (EdgeId e = 0; e < 6; ++e) {
    const auto [u, v] = k4.edge(e);
    const Vertex partner_of_0 = u == 0 ? v : (v == 0 ? u : 6 - u - v);
    c[e] = partner_of_0 - 1;
  }
  return EdgeColoring(c);
}

}  // namespace

TEST_CASE("properness") {
  const Graph k3 = complete_graph(3);
  CHECK(is_proper(k3, EdgeColoring({1, 2, 3})));
  CHECK_FALSE(is_proper(k3, EdgeColoring({1, 1, 2})));
  CHECK_THROWS_AS(is_proper(k3, EdgeColoring({1, 2})), std::invalid_argument);
  const FoldedHypercube f = build_folded_hypercube(5);
  CHECK(is_proper(f.graph, bitflip_coloring(f)));
}

TEST_CASE("canonical relabeling") {
  const EdgeColoring c({7, 3, 7, 9});
  CHECK(c.canonical() == EdgeColoring({0, 1, 0, 2}));
  CHECK(c.canonical().is_canonical());
  CHECK_FALSE(c.is_canonical());
  CHECK(c.distinct_colors() == 3);
  CHECK(equal_up_to_relabeling(c, EdgeColoring({1, 0, 1, 5})));
  CHECK_FALSE(equal_up_to_relabeling(c, EdgeColoring({1, 0, 2, 5})));
}

TEST_CASE("rainbow copies on small fixtures") {
  const Graph k3 = complete_graph(3);
  CHECK(find_rainbow_copy(k3, EdgeColoring({0, 1, 2}), Pattern::clique(3)));

  const Graph k4 = complete_graph(4);
  const EdgeColoring m = matching_coloring(k4);
  REQUIRE(is_proper(k4, m));
  CHECK_FALSE(find_rainbow_copy(k4, m, Pattern::path(4)));
  CHECK(find_rainbow_copy(k4, m, Pattern::clique(3)));

  const FoldedHypercube f4 = build_folded_hypercube(4);
  CHECK_FALSE(find_rainbow_copy(f4.graph, bitflip_coloring(f4), Pattern::path(5)));
  CHECK_THROWS_AS(find_rainbow_copy(k3, EdgeColoring({0, 0, 1}), Pattern::clique(3)),
                  std::invalid_argument);
}

TEST_CASE("rainbow copy detection matches brute force") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 150; ++i) {
    const int n = 5 + i % 4;
    std::bernoulli_distribution coin(0.6);
    std::vector<VertexPair> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) pairs.emplace_back(u, v);
    const Graph g = Graph::build(n, pairs);
    const EdgeColoring c = random_proper_coloring(g, rng, 3 + i % 4);
    REQUIRE(is_proper(g, c));
    for (const Pattern& pat : {Pattern::clique(3), Pattern::clique(4), Pattern::path(4),
                               Pattern::path(5), Pattern::cycle(4), Pattern::cycle(5)}) {
      bool want = false;
      for (const auto& es : oracle::copies_by_sequences(g, pat.graph())) {
        std::set<Color> cs;
        for (int e : es) cs.insert(c[e]);
        if (cs.size() == es.size()) want = true;
      }
      const auto got = find_rainbow_copy(g, c, pat);
      CHECK_MESSAGE(got.has_value() == want, pat.name() << " " << encode_graph6(g));
      if (got) {
        CHECK(is_rainbow(*got, c));
        CHECK(got->edges.size() == static_cast<std::size_t>(pat.size()));
      }
    }
  }
}

TEST_CASE("greedy and random colorings are proper") {
  std::mt19937_64 rng(31);
  const Graph g = complete_multipartite(std::vector<int>{3, 4, 5});
  CHECK(is_proper(g, greedy_proper_coloring(g)));
  for (int p = 1; p < 15; ++p) CHECK(is_proper(g, random_proper_coloring(g, rng, p)));
  std::mt19937_64 a(5), b(5);
  CHECK(random_proper_coloring(g, a, 9) == random_proper_coloring(g, b, 9));
}

TEST_CASE("coloring text round trip") {
  const Graph g = cycle_graph(5);
  const EdgeColoring c({0, 1, 0, 1, 2});
  const auto [g2, c2] = parse_coloring_text(to_coloring_text(g, c));
  CHECK(g2 == g);
  CHECK(c2 == c);
  CHECK_THROWS_AS(parse_coloring_text("n=3 m=2\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring_text("n=3 m=1\n0 1 -4\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring_text("0 1 2\n"), ParseError);
}
