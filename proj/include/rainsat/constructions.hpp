#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainsat/coloring.hpp"
#include "rainsat/graph.hpp"
#include "rainsat/pattern.hpp"

namespace rainsat {

enum class Family { K4, Kr, Path, P5, Cycle };

/// One member of a saturated family, e.g. "k4:n=10", "kr:r=4,n=31",
/// "path:k=6,n=20", "p5:n=8", "cycle:k=7,n=19".
struct ConstructionSpec {
  Family family = Family::K4;
  int r = 0;
  int k = 0;
  int n = 0;

  /// Throws std::invalid_argument on bad syntax or out-of-range parameters.
  static ConstructionSpec parse(std::string_view text);
  std::string to_string() const;
  /// Throws std::invalid_argument when the parameters are out of range.
  void validate() const;
  /// The forbidden graph the family is saturated for.
  Pattern pattern() const;
  /// Closed-form edge count.
  std::int64_t edge_count() const;

  bool operator==(const ConstructionSpec&) const = default;
};

struct ColoredConstruction {
  ConstructionSpec spec;
  Graph graph;
  std::optional<EdgeColoring> coloring;
  /// Per vertex: "x", "y", "C3" (component), "part2", "core", "pendant",
  /// "X", "Y".
  std::vector<std::string> roles;
  /// K4 family only: colors the remainder block introduced.
  int remainder_new_colors = 0;
};

/// x = 0, y = 1, then the K4 components in order, then the remainder block.
ColoredConstruction construct_k4_family(int n);
/// Parts of sizes 1, s_3, ..., s_r and the leftover part, s_i = i*C(i-1,2)+1.
ColoredConstruction construct_kr_family(int r, int n);
/// Core H_{k-3}/2 on vertices 0..2^{k-4}-1 followed by the pendants.
ColoredConstruction construct_path_family(int k, int n);
/// K4 on 0..3 with all pendants on vertex 0.
ColoredConstruction construct_p5_family(int n);
/// K_h on 0..h-1 joined to an independent set, h = (k-1)/2.
ColoredConstruction construct_cycle_family(int k, int n);
ColoredConstruction construct(const ConstructionSpec& spec);

/// s_i = i*C(i-1,2)+1.
std::int64_t kr_part_size(int i);

/// The cycle family plus one edge inside the independent side: builds a
/// rainbow C_k by first finding a rainbow path x1 y1 y2 x2 through the extra
/// edge, then greedily choosing, for each consecutive pair of clique
/// vertices, the lowest unused independent vertex joined to both by edges
/// whose colors are not yet on the cycle, and finally closing back to x1.
/// Returns the k cycle vertices in order, or nothing when a candidate set
/// runs empty. Throws std::invalid_argument if the graph does not have that
/// shape or c is improper.
std::optional<std::vector<Vertex>> greedy_rainbow_cycle(const Graph& g, const EdgeColoring& c,
                                                        int k, const std::vector<Vertex>& x_side,
                                                        const std::vector<Vertex>& y_side);

struct GreedyCycleTrials {
  int trials = 0;
  int successes = 0;
  /// Trials where the procedure gave up or returned something that is not a
  /// rainbow k-cycle of the host.
  int failures = 0;
  /// First failing trial, for reproduction.
  std::optional<int> first_failure;
};

/// Random trials on the cycle family: each adds one random edge inside the
/// independent side, colors the result with random_proper_coloring (palette
/// n-1 plus trial mod 4) and runs greedy_rainbow_cycle.
GreedyCycleTrials greedy_cycle_trials(int k, int n, int trials, std::uint64_t seed);

struct CliqueExtensionAudit {
  bool passed = false;
  int trials = 0;
  int failures = 0;
  /// Extensions visited by the exhaustive mode (r = 3 only).
  std::uint64_t exhaustive_checked = 0;
};

/// K_r joined to r*C(r-1,2)+1 independent vertices with a rainbow K_r:
/// checks that random proper colorings of the join edges always leave a
/// rainbow K_{r+1} through some join vertex.
CliqueExtensionAudit audit_clique_extension(int r, int trials, std::uint64_t seed,
                                            bool exhaustive = false);

/// Exact rational arithmetic for the closed forms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  static Rational parse(std::string_view text);  // "7", "-3/4", "0.125"
  std::string to_string() const;
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  bool operator==(const Rational&) const = default;
};

/// k4_lower(n, alpha) = 7n/2 - 8*alpha*n, needs 0 < alpha < 1/2,
/// alpha^2 n >= 7 and alpha n > 220.
Rational k4_lower(std::int64_t n, Rational alpha);
Rational k4_upper_slope();
/// r - 1, for r >= 5.
Rational kr_lower_slope(int r);
/// (r^4 - 2r^3 - r^2 + 10r - 8)/8, the slope of the K_{r+1} family.
Rational kr_upper_poly_slope(int r);
Rational path_lower(std::int64_t n);
/// n + (k-5)2^{k-5} for k >= 6; n + 2 for k = 5.
Rational path_upper(int k, std::int64_t n);
/// ((k-1)/2) n - C((k+1)/2, 2), odd k >= 7.
Rational cycle_upper(int k, std::int64_t n);

/// Evaluates a query such as "kr_upper_poly_slope(4)", "path_upper(6,20)",
/// "k4_lower(100000,1/10)" or "construction_edge_count(k4:n=10)".
/// Throws std::invalid_argument on an unknown query.
Rational closed_form(std::string_view query);

}  // namespace rainsat
