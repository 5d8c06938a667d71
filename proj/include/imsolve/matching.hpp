#pragma once

#include <cstdint>
#include <vector>

#include "imsolve/graph.hpp"

namespace imsolve {

/// A set of pairwise vertex-disjoint edges of some host graph.
using Matching = EdgeSet;

/// Mate of every dense index of g, or -1 when exposed. Edmonds' blossom
/// algorithm, O(n^3); roots and neighbors are scanned in label order, so the
/// result is deterministic.
std::vector<std::int32_t> maximum_matching_mates(const Graph& g);

/// Maximum cardinality matching.
Matching maximum_matching(const Graph& g);

/// MM(g).
std::size_t matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Connected, and g - v has a perfect matching for every v. A single vertex
/// is factor-critical; the empty graph is not.
bool is_factor_critical(const Graph& g);

/// Minimum vertex cover of a bipartite graph, extracted from a maximum
/// matching by alternating reachability. Throws NotBipartite.
VertexSet konig_cover(const Graph& g);

}  // namespace imsolve
