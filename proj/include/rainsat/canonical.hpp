#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainsat/graph.hpp"

namespace rainsat {

/// Largest vertex count for which canonical_key is exact.
inline constexpr int kCanonicalExactLimit = 16;

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
///
/// Computed by individualization-refinement over equitable partitions with
/// automorphism pruning, minimising the graph6 string of the relabeled
/// graph. Exact only for n <= kCanonicalExactLimit; larger graphs throw
/// std::invalid_argument and should use invariant_hash instead.
std::string canonical_key(const Graph& g);

/// The relabeling achieving canonical_key: perm[v] is v's canonical label.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// Hash-only mode: a color-refinement invariant. Isomorphic graphs always
/// collide; non-isomorphic graphs usually do not.
std::uint64_t invariant_hash(const Graph& g);

/// Every automorphism as a vertex map (gamma[v] is v's image), found by
/// plain backtracking. Stops after `limit` maps. Meant for small graphs.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit = 1U << 20);

}  // namespace rainsat
