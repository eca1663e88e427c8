#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainsat/graph.hpp"
#include "rainsat/pattern.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

enum class SaturationVerdict { Saturated, NotRainbowFreeColorable, MissedEdge, Inconclusive };
std::string to_string(SaturationVerdict v);

/// How a non-edge was settled.
enum class NonEdgeMethod {
  NoNewCopy,        // G+e has no copy through e: G's witness plus a fresh color
  Extension,        // G's witness plus one color on e is already rainbow-free
  Inherited,        // G itself has no rainbow-free coloring
  Search,
};
std::string to_string(NonEdgeMethod m);

struct NonEdgeResult {
  VertexPair pair;
  NonEdgeMethod method = NonEdgeMethod::Search;
  /// Found means G+e is still colorable, so e is missed.
  SearchOutcome outcome;
};

struct SaturationReport {
  SearchOutcome condition1;
  /// In lexicographic pair order. With stop_at_first_miss the list ends at
  /// the first missed edge.
  std::vector<NonEdgeResult> per_nonedge;
  SaturationVerdict verdict = SaturationVerdict::Inconclusive;
  /// The first missed non-edge (MissedEdge only).
  std::optional<VertexPair> missed_edge;
  /// Non-edges whose search ran out of budget.
  std::vector<VertexPair> inconclusive_edges;
  std::uint64_t total_nodes = 0;
  double elapsed_ms = 0;
};

struct SaturationOptions {
  /// Applied to condition (1) and to each non-edge separately.
  Budget budget;
  /// Non-edges are checked concurrently, each search single-threaded.
  int workers = 1;
  bool stop_at_first_miss = false;
};

/// Decides proper rainbow saturation: G has a proper rainbow-H-free
/// coloring, and G+e has none for every non-edge e. A budget-limited search
/// never counts as a proof; it makes the verdict Inconclusive unless some
/// other non-edge is already missed.
SaturationReport check_saturation(const Graph& g, const Pattern& pattern,
                                  const SaturationOptions& options = {});

struct RsatResult {
  int n = 0;
  std::string pattern;
  /// Fewest edges of a saturated graph; empty when none was found.
  std::optional<int> value;
  Graph witness;
  std::optional<EdgeColoring> witness_coloring;
  /// Isomorphism classes checked.
  std::uint64_t graphs_examined = 0;
  /// No check hit its budget at an edge count below `value` (or anywhere,
  /// when no value was found).
  bool exhaustive = false;
  double elapsed_ms = 0;
};

inline constexpr int kRsatExhaustiveLimit = 7;

/// Streams every labeled graph on n vertices by edge count, keeps one per
/// isomorphism class and returns the first edge count with a saturated
/// member. Throws std::invalid_argument for n > kRsatExhaustiveLimit unless
/// `allow_large` is set (n <= 16 regardless).
RsatResult rsat_exact(int n, const Pattern& pattern, const SaturationOptions& options = {},
                      bool allow_large = false);

struct Violation {
  /// "a".."e" for clique checks, "f" for the path check.
  std::string check;
  std::string detail;
};

/// Necessary conditions for saturated graphs.
///   K4: (a) every non-adjacent pair has an edge inside its common
///       neighborhood, (b) vertices of degree <= 3 form a clique, (c) no
///       K3 v E4 subgraph.
///   K_r, r >= 4: (d) every non-adjacent pair has >= r-1 common neighbors or
///       degree sum >= C(r,2)-1, (e) at most one vertex has degree r-2.
///   P_k, k >= 5: (f) at most one acyclic component.
/// Throws std::invalid_argument for any other pattern.
std::vector<Violation> audit_structure(const Graph& g, const Pattern& pattern);

}  // namespace rainsat
