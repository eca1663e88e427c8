#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainsat/coloring.hpp"
#include "rainsat/graph.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

/// The folded hypercube H_w/2: binary strings of length w with each string
/// identified with its complement, adjacent when some representatives differ
/// in one bit.
///
/// Vertex r stands for the class whose representative has leading bit 0 and
/// bits 2..w equal to the (w-1)-bit binary form of r, most significant
/// first. Bits are numbered 1..w from the left.
struct FoldedHypercube {
  int w = 0;
  Graph graph;
  std::vector<int> bitflip;  // per edge index, in 1..w

  int vertex_bit(Vertex v, int bit) const;
  Vertex flip(Vertex v, int bit) const;
  /// The representative as a string of w characters.
  std::string label(Vertex v) const;
};

/// Throws std::invalid_argument for w < 3 or w > 20.
FoldedHypercube build_folded_hypercube(int w);

/// Each edge colored by its bit position.
EdgeColoring bitflip_coloring(const FoldedHypercube& f);

/// A w-cycle using every bit-flip once.
struct Tbfc {
  std::vector<Vertex> cycle;   // w vertices; the closing edge returns to cycle[0]
  std::vector<int> bits;       // bits[i] is the flip from cycle[i] to cycle[i+1 mod w]
  std::vector<EdgeId> edges;
  std::vector<Color> colors;   // colors of `edges`, when found under a coloring
};

/// A rainbow total bit-flip cycle under c, by DFS over paths whose bit-flips
/// and colors are pairwise distinct (starts in vertex order, bits in
/// increasing order). Throws std::invalid_argument if c is improper.
std::optional<Tbfc> find_tbfrc(const FoldedHypercube& f, const EdgeColoring& c);

/// Colors every edge with the color the cycle uses for the same bit-flip,
/// then checks the result is proper and rainbow-P_{w+1}-free. Throws
/// std::invalid_argument for w < 5 or a cycle whose colors repeat.
EdgeColoring extend_tbfrc(const FoldedHypercube& f, const Tbfc& t);

struct UniquenessReport {
  int w = 0;
  /// Rainbow-P_{w+1}-free proper colorings counted up to color relabeling.
  std::uint64_t up_to_relabeling = 0;
  /// The same colorings counted up to relabeling and automorphisms of H_w/2.
  std::uint64_t up_to_isomorphism = 0;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

/// Exhaustive enumeration of the rainbow-P_{w+1}-free colorings of H_w/2.
/// Only w <= 5 is attempted unless `allow_large` is set.
UniquenessReport verify_unique_coloring(int w, const SearchOptions& options = {},
                                        bool allow_large = false);

struct AvoidBit {
  int bit;
};
struct AvoidVertex {
  Vertex vertex;
};

/// A path with w-1 edges from `start` whose bit-flips are pairwise distinct,
/// either never flipping the given bit or never visiting the given vertex.
/// Throws std::invalid_argument when the avoided vertex is `start`.
std::vector<Vertex> nice_path(const FoldedHypercube& f, Vertex start,
                              std::variant<AvoidBit, AvoidVertex> avoid);

/// "u v bit" per edge after a "n=<count> m=<count>" header.
std::string to_bit_edge_list(const FoldedHypercube& f);
std::string to_bit_dot(const FoldedHypercube& f);

}  // namespace rainsat
