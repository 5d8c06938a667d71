#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "imsolve/graph.hpp"

namespace imsolve::testing {

inline VertexSet vs(const Graph& g, std::initializer_list<const char*> labels) {
  VertexSet out;
  for (const char* l : labels) out.push_back(g.vertex(l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

inline std::vector<std::string> names(const Graph& g) { return names(g, g.vertices()); }

inline std::vector<std::string> edge_names(const Graph& g, const EdgeSet& es) {
  std::vector<std::string> out;
  for (const Edge& e : es) out.push_back(g.label(e));
  return out;
}

inline Edge edge(const Graph& g, const char* a, const char* b) { return Edge::make(g.vertex(a), g.vertex(b)); }

}  // namespace imsolve::testing
