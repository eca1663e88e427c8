#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "rainsat/canonical.hpp"
#include "rainsat/hypercube.hpp"

using namespace rainsat;

TEST_CASE("folded hypercube shape") {
  CHECK(canonical_key(build_folded_hypercube(3).graph) == canonical_key(complete_graph(4)));
  CHECK(canonical_key(build_folded_hypercube(4).graph) ==
        canonical_key(complete_multipartite(std::vector<int>{4, 4})));
  for (int w = 3; w <= 8; ++w) {
    const FoldedHypercube f = build_folded_hypercube(w);
    CHECK(f.graph.vertex_count() == (1 << (w - 1)));
    CHECK(f.graph.edge_count() == w * (1 << (w - 2)));
    for (Vertex v = 0; v < f.graph.vertex_count(); ++v) CHECK(f.graph.degree(v) == w);
    CHECK(diameter(f.graph) == w / 2);
    CHECK(f.label(0) == std::string(static_cast<std::size_t>(w), '0'));
  }
  CHECK_THROWS_AS(build_folded_hypercube(2), std::invalid_argument);
}

TEST_CASE("adjacent representatives differ in one bit up to complement") {
  const FoldedHypercube f = build_folded_hypercube(5);
  for (EdgeId e = 0; e < f.graph.edge_count(); ++e) {
    const std::string a = f.label(f.graph.edge(e).u);
    const std::string b = f.label(f.graph.edge(e).v);
    std::string nb = b;
    for (char& ch : nb) ch = ch == '0' ? '1' : '0';
    int d1 = 0, d2 = 0;
    for (int i = 0; i < 5; ++i) {
      d1 += a[i] != b[i];
      d2 += a[i] != nb[i];
    }
    CHECK(std::min(d1, d2) == 1);
    const int bit = f.bitflip[e];
    CHECK(((d1 == 1 && a[bit - 1] != b[bit - 1]) || (d2 == 1 && a[bit - 1] != nb[bit - 1])));
  }
}

TEST_CASE("bit-flip colorings are proper and rainbow-path-free") {
  for (int w = 3; w <= 8; ++w) {
    const FoldedHypercube f = build_folded_hypercube(w);
    const EdgeColoring c = bitflip_coloring(f);
    CHECK(is_proper(f.graph, c));
    CHECK_FALSE(find_rainbow_copy(f.graph, c, Pattern::path(w + 1)));
    CHECK(c.distinct_colors() == w);
  }
  const FoldedHypercube f3 = build_folded_hypercube(3);
  const EnumerationOutcome only = enumerate_rainbow_free_colorings(f3.graph, Pattern::path(4));
  REQUIRE(only.count == 1);
  CHECK(equal_up_to_relabeling(only.colorings[0], bitflip_coloring(f3)));
}

TEST_CASE("rainbow walks of length w close up") {
  for (int w = 3; w <= 5; ++w) {
    const FoldedHypercube f = build_folded_hypercube(w);
    const EdgeColoring c = bitflip_coloring(f);
    int walks = 0;
    bool all_closed = true;
    for (Vertex s = 0; s < f.graph.vertex_count(); ++s) {
      std::set<Color> used;
      std::function<void(Vertex, int)> walk = [&](Vertex v, int len) {
        if (len == w) {
          ++walks;
          all_closed &= v == s;
          return;
        }
        for (EdgeId e : f.graph.incident_edges(v)) {
          if (used.count(c[e])) continue;
          used.insert(c[e]);
          const Edge& ed = f.graph.edge(e);
          walk(ed.u == v ? ed.v : ed.u, len + 1);
          used.erase(c[e]);
        }
      };
      walk(s, 0);
    }
    CHECK(all_closed);
    int factorial = 1;
    for (int i = 2; i <= w; ++i) factorial *= i;
    CHECK(walks == f.graph.vertex_count() * factorial);
  }
}

TEST_CASE("total bit-flip rainbow cycles") {
  const FoldedHypercube f3 = build_folded_hypercube(3);
  const auto t3 = find_tbfrc(f3, bitflip_coloring(f3));
  REQUIRE(t3);
  CHECK(t3->cycle.size() == 3);
  CHECK(t3->bits == std::vector<int>{1, 2, 3});

  const FoldedHypercube f5 = build_folded_hypercube(5);
  const auto t5 = find_tbfrc(f5, bitflip_coloring(f5));
  REQUIRE(t5);
  CHECK(std::set<Color>(t5->colors.begin(), t5->colors.end()) == std::set<Color>{1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(f5.graph.adjacent(t5->cycle[i], t5->cycle[(i + 1) % 5]));

  const FoldedHypercube f4 = build_folded_hypercube(4);
  const EnumerationOutcome all = enumerate_rainbow_free_colorings(f4.graph, Pattern::path(5), {}, 100);
  for (const auto& c : all.colorings) CHECK(find_tbfrc(f4, c));

  CHECK_THROWS_AS(find_tbfrc(f3, EdgeColoring({0, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("extension round trip") {
  for (int w = 5; w <= 6; ++w) {
    const FoldedHypercube f = build_folded_hypercube(w);
    const auto t = find_tbfrc(f, bitflip_coloring(f));
    REQUIRE(t);
    const EdgeColoring back = extend_tbfrc(f, *t);
    CHECK(equal_up_to_relabeling(back, bitflip_coloring(f)));
    CHECK_FALSE(find_rainbow_copy(f.graph, back, Pattern::path(w + 1)));
  }
  const FoldedHypercube f5 = build_folded_hypercube(5);
  Tbfc bad = *find_tbfrc(f5, bitflip_coloring(f5));
  bad.colors[1] = bad.colors[0];
  CHECK_THROWS_AS(extend_tbfrc(f5, bad), std::invalid_argument);
  const FoldedHypercube f4 = build_folded_hypercube(4);
  CHECK_THROWS_AS(extend_tbfrc(f4, *find_tbfrc(f4, bitflip_coloring(f4))),
                  std::invalid_argument);
}

TEST_CASE("uniqueness counts") {
  const UniquenessReport r3 = verify_unique_coloring(3);
  CHECK(r3.exhaustive);
  CHECK(r3.up_to_relabeling == 1);
  CHECK(r3.up_to_isomorphism == 1);
  const UniquenessReport r4 = verify_unique_coloring(4);
  CHECK(r4.exhaustive);
  CHECK(r4.up_to_relabeling == 6);
  CHECK(r4.up_to_isomorphism == 1);
  CHECK_THROWS_AS(verify_unique_coloring(6), std::invalid_argument);
  SearchOptions tight;
  tight.budget = Budget::nodes(5);
  CHECK_FALSE(verify_unique_coloring(5, tight).exhaustive);
}

TEST_CASE("nice paths") {
  const FoldedHypercube f4 = build_folded_hypercube(4);
  const auto p = nice_path(f4, 0, AvoidBit{2});
  REQUIRE(p.size() == 4);
  std::set<int> bits;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    bits.insert(f4.bitflip[*f4.graph.edge_id(p[i], p[i + 1])]);
  CHECK(bits == std::set<int>{1, 3, 4});

  for (Vertex banned = 1; banned < 8; ++banned) {
    const auto q = nice_path(f4, 0, AvoidVertex{banned});
    REQUIRE(q.size() == 4);
    CHECK(std::find(q.begin(), q.end(), banned) == q.end());
    std::set<int> qb;
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
      qb.insert(f4.bitflip[*f4.graph.edge_id(q[i], q[i + 1])]);
    CHECK(qb.size() == 3);
    CHECK(std::set<Vertex>(q.begin(), q.end()).size() == 4);
  }
  CHECK_THROWS_AS(nice_path(f4, 3, AvoidVertex{3}), std::invalid_argument);

  const FoldedHypercube f3 = build_folded_hypercube(3);
  const auto r = nice_path(f3, 0, AvoidBit{3});
  REQUIRE(r.size() == 3);
  CHECK(f3.bitflip[*f3.graph.edge_id(r[0], r[1])] == 1);
  CHECK(f3.bitflip[*f3.graph.edge_id(r[1], r[2])] == 2);
}

TEST_CASE("bit-annotated exports") {
  const FoldedHypercube f = build_folded_hypercube(3);
  const std::string text = to_bit_edge_list(f);
  CHECK(text.rfind("n=4 m=6\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(to_bit_dot(f).find("000") != std::string::npos);
}
