#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "imsolve/graph.hpp"

namespace imsolve {

/// The (D, A, C) partition: D holds the vertices missed by some maximum
/// matching, A = N(D), C = everything else.
struct GEDecomposition {
  VertexSet d;
  VertexSet a;
  VertexSet c;
  std::vector<VertexSet> d_components;  // components of G[D], by smallest vertex

  friend bool operator==(const GEDecomposition&, const GEDecomposition&) = default;
};

/// Definitional computation: v is in D iff MM(g - v) = MM(g). One matching
/// per vertex.
GEDecomposition decompose(const Graph& g);

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool passed() const;
  /// Check by name; nullptr if absent.
  const AuditCheck* find(const std::string& name) const;
};

/// Largest |A| accepted by the surplus check (2^|A| subsets).
inline constexpr std::size_t kAuditMaxA = 20;

/// Checks d against the structure theorem: partition, A = N(D), the
/// components of G[D] are exactly d_components and factor-critical, G[C] has
/// a perfect matching, |N(A')| > |A'| in the contracted bipartite graph for
/// every nonempty A' of A, and a maximum matching of g matches A into D and
/// restricts to near-perfect / perfect matchings on D-components / C.
/// Throws AuditTooLarge when |A| > kAuditMaxA.
AuditReport audit(const Graph& g, const GEDecomposition& d);

}  // namespace imsolve
