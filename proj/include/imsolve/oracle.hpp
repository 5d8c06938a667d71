#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "imsolve/graph.hpp"

namespace imsolve {

/// Default vertex cap of the exhaustive oracles. Never above 64.
inline constexpr std::size_t kDefaultOracleCap = 16;

struct InducedMatchingResult {
  std::size_t size = 0;
  EdgeSet witness;
};

// Exact optima by branching over vertex bitmasks. All throw TooLarge when
// the graph has more than min(cap, 64) vertices.
InducedMatchingResult brute_im(const Graph& g, std::size_t cap = kDefaultOracleCap);
std::size_t brute_mm(const Graph& g, std::size_t cap = kDefaultOracleCap);
std::size_t brute_is(const Graph& g, std::size_t cap = kDefaultOracleCap);
std::size_t brute_vc(const Graph& g, std::size_t cap = kDefaultOracleCap);
/// Minimum dominating set size.
std::size_t brute_ds(const Graph& g, std::size_t cap = kDefaultOracleCap);

/// Half-integral value stored doubled.
struct HalfInteger {
  std::int64_t twice = 0;

  double value() const { return static_cast<double>(twice) / 2.0; }
  std::string str() const;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

struct ParameterReport {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t mm = 0;
  std::size_t is = 0;
  std::size_t im = 0;
  std::size_t vc = 0;
  HalfInteger k_trivial;  // n/2 - ell
  std::int64_t k_mm = 0;  // MM - ell
  std::int64_t k_is = 0;  // IS - ell
  HalfInteger k_avg;      // (MM + IS)/2 - ell, the measure of (g, ell)
};

/// Every quantity by exhaustive search (MM included, independently of the
/// blossom code).
ParameterReport parameters(const Graph& g, std::size_t ell, std::size_t cap = kDefaultOracleCap);

enum class StructureKind {
  NotCameronWalker,
  Star,
  TriangleStar,
  PendantBipartite,
  IsolatedEdge,
  TightPendantBipartite,
  NotTight,
};

std::string_view to_string(StructureKind kind);

struct StructureClass {
  StructureKind kind = StructureKind::NotCameronWalker;
  // Bipartite core for the pendant cases; pendants[i] belongs to u[i],
  // triangles[i] to w[i].
  VertexSet u;
  VertexSet w;
  std::vector<std::size_t> pendants;
  std::vector<std::size_t> triangles;
};

/// Structural test for MM(g) = IM(g): a star, a triangle star, or a
/// connected bipartite core (U, W) with at least one pendant vertex on every
/// U-vertex and any number of pendant triangles on W-vertices. Linear time.
/// Throws Disconnected for disconnected or empty graphs.
StructureClass recognize_cameron_walker(const Graph& g);

/// Structural test for (MM + IS)/2 = IM: an isolated edge, a triangle star,
/// or the pendant-bipartite shape with exactly one pendant per U-vertex and
/// at least one pendant triangle per W-vertex. Returns NotTight otherwise.
/// Throws Disconnected.
StructureClass classify_tight(const Graph& g);

}  // namespace imsolve
