#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainsat/graph.hpp"
#include "rainsat/pattern.hpp"

namespace rainsat {

using Color = int;

/// One nonnegative color per edge index of a host graph.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> colors);

  std::size_t size() const { return colors_.size(); }
  Color operator[](EdgeId e) const { return colors_[e]; }
  Color& operator[](EdgeId e) { return colors_[e]; }
  const std::vector<Color>& colors() const { return colors_; }

  int distinct_colors() const;
  /// Relabel so colors appear as 0, 1, 2, ... in first-use order along the
  /// edge index sequence.
  EdgeColoring canonical() const;
  bool is_canonical() const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<Color> colors_;
};

bool equal_up_to_relabeling(const EdgeColoring& a, const EdgeColoring& b);

/// Throws std::invalid_argument when the coloring does not cover every edge.
bool is_proper(const Graph& g, const EdgeColoring& c);

/// Some copy of `pattern` whose edges carry pairwise distinct colors.
/// Paths and cycles use a color-pruned DFS; cliques extend rainbow cliques.
/// Throws std::invalid_argument when `c` is improper.
std::optional<Copy> find_rainbow_copy(const Graph& g, const EdgeColoring& c,
                                      const Pattern& pattern);

bool is_rainbow(const Copy& copy, const EdgeColoring& c);

/// Lowest available color per edge in index order.
EdgeColoring greedy_proper_coloring(const Graph& g);

/// Each edge, visited in a shuffled order, takes a uniformly random color
/// from {0..palette-1} that is free at both endpoints, or a fresh color when
/// none is. Small palettes force heavy color reuse.
EdgeColoring random_proper_coloring(const Graph& g, std::mt19937_64& rng, int palette);

/// "n=<count> m=<count>" header, then "u v color" per edge in index order.
std::string to_coloring_text(const Graph& g, const EdgeColoring& c);
std::pair<Graph, EdgeColoring> parse_coloring_text(std::string_view text);

}  // namespace rainsat
