#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "imsolve/graph.hpp"

namespace imsolve {

/// Does `graph` have an induced matching of size `ell`?
struct Instance {
  Graph graph;
  std::size_t ell = 0;
};

enum class ReductionRule {
  IsolatedVertex,   // RR1: drop a degree-0 vertex
  IsolatedEdge,     // RR2: drop an isolated edge, ell -= 1 while ell > 0
  PendantTriangle,  // RR3: drop the attachment vertex of a pendant triangle
};

std::string_view to_string(ReductionRule rule);

struct ReductionStep {
  ReductionRule rule = ReductionRule::IsolatedVertex;
  VertexSet deleted;
  std::optional<Edge> harvested;  // set iff RR2 decremented ell
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct Reduction {
  Instance instance;
  EdgeSet harvested;  // in application order
  ReductionTrace trace;
};

/// Applies the reduction rules until none applies. Each step takes the
/// first applicable rule in the order RR1, RR2, RR3, at its smallest
/// instance (smallest vertex; smallest edge; smallest (v, u, w) triangle).
/// `pendant_triangles = false` restricts to RR1/RR2.
Reduction reduce(const Instance& inst, bool pendant_triangles = true);

enum class Terminal { Continue, Yes, No, Exhausted };

std::string_view to_string(Terminal t);

/// In order: ell = 0 -> Yes; |V|/2 < ell -> No; depth >= budget ->
/// Exhausted; otherwise Continue.
Terminal terminal_state(const Instance& inst, std::size_t depth, std::size_t budget);

}  // namespace imsolve
