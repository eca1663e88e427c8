#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainsat/coloring.hpp"
#include "rainsat/graph.hpp"
#include "rainsat/pattern.hpp"

namespace rainsat {

/// Largest number of edges the solver accepts after dropping edges that lie
/// in no pattern copy.
inline constexpr int kMaxSearchEdges = 256;

/// Zero means unlimited. Whichever limit trips first ends the search.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::int64_t max_ms = 0;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, 0}; }
  static Budget millis(std::int64_t ms) { return {0, ms}; }
};

enum class Verdict { Found, NoneExists, BudgetExceeded };

std::string to_string(Verdict v);

struct SearchOptions {
  Budget budget;
  /// Worker threads. The verdict, witness and node count do not depend on
  /// this value unless the wall-clock limit trips.
  int workers = 1;
  /// Forward checking: the last uncolored edge of a copy whose other edges
  /// are pairwise distinct must repeat one of their colors.
  bool forced_repeat_pruning = true;
  /// Branch on the edge with the fewest remaining options; otherwise follow
  /// the static order (most copies first, then index).
  bool fail_first = true;
  /// Optional pre-coloring, one entry per edge; -1 leaves the edge free.
  std::vector<Color> fixed;
};

struct SearchOutcome {
  Verdict verdict = Verdict::BudgetExceeded;
  /// Present iff verdict == Found. Proper and rainbow-free, re-verified.
  /// Canonical (restricted growth) unless fixed colors were supplied.
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

struct EnumerationOutcome {
  /// True when the whole space was searched and `count` is exact.
  bool exhaustive = false;
  std::uint64_t count = 0;
  /// The first colorings in search order, up to the requested limit, each in
  /// canonical form.
  std::vector<EdgeColoring> colorings;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

/// Decides whether g has a proper edge-coloring with no rainbow copy of the
/// pattern. Colorings are searched as partitions of the edges into matchings
/// (each edge joins an existing class or opens the next one), which covers
/// every coloring up to relabeling.
SearchOutcome find_rainbow_free_coloring(const Graph& g, const Pattern& pattern,
                                         const SearchOptions& options = {});
/// Same, against an explicit copy list (edge-index sets).
SearchOutcome find_rainbow_free_coloring(const Graph& g, const std::vector<Copy>& copies,
                                         const SearchOptions& options = {});

/// Every rainbow-free proper coloring, once per relabeling class.
EnumerationOutcome enumerate_rainbow_free_colorings(const Graph& g, const Pattern& pattern,
                                                    const SearchOptions& options = {},
                                                    std::size_t keep = 16);
EnumerationOutcome enumerate_rainbow_free_colorings(const Graph& g,
                                                    const std::vector<Copy>& copies,
                                                    const SearchOptions& options = {},
                                                    std::size_t keep = 16);

struct UnrestrictedOutcome {
  /// False when the budget ran out first.
  bool decided = false;
  bool unrestricted = false;
  /// A proper recoloring of the edge set that creates a rainbow copy.
  std::optional<EdgeColoring> recoloring;
  std::optional<Copy> rainbow_copy;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

/// Whether every proper recoloring of `edge_set` (the rest of c held fixed)
/// keeps g rainbow-free. Recolorings may reuse any color, including the
/// edge's current one. Throws std::invalid_argument when c is improper or
/// already has a rainbow copy, or an edge index is out of range.
UnrestrictedOutcome check_unrestricted(const Graph& g, const EdgeColoring& c,
                                       const std::vector<EdgeId>& edge_set,
                                       const Pattern& pattern, const Budget& budget = {});

}  // namespace rainsat
