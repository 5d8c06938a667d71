#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace imsolve {

/// Stable vertex identifier. Ids are assigned once, at build time, in label
/// order and never change when vertices are deleted, so comparing ids is the
/// same as comparing labels.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalizes so that u < v.
  static constexpr Edge make(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of normalized edges.
using EdgeSet = std::vector<Edge>;

/// Natural ordering of labels: digit runs compare numerically, so "2" < "10"
/// and "v2" < "v10".
bool label_less(std::string_view a, std::string_view b);

/// Label universe shared by a graph and every graph derived from it.
struct LabelTable {
  std::vector<std::string> names;  // indexed by Vertex, sorted by label_less
};

/// Immutable simple undirected graph over opaque string labels.
///
/// Internally each graph keeps a dense index (0..order()-1) over its present
/// vertices, in label order. `adjacency(i)` speaks in those indices; every
/// other accessor speaks in stable `Vertex` ids.
class Graph {
 public:
  Graph();

  /// Throws SelfLoop, DuplicateEdge, UnknownEndpoint or DuplicateLabel.
  static Graph build(std::vector<std::string> labels,
                     std::span<const std::pair<std::string, std::string>> edges);

  /// Labels "1".."n"; endpoints are 1-based.
  static Graph numbered(std::size_t n, std::span<const std::pair<int, int>> edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return vertices_.empty(); }

  const VertexSet& vertices() const noexcept { return vertices_; }
  Vertex at(std::size_t index) const { return vertices_[index]; }
  bool contains(Vertex v) const noexcept {
    return v < index_.size() && index_[v] >= 0;
  }
  /// Dense index of a present vertex; throws UnknownVertex otherwise.
  std::size_t index_of(Vertex v) const;

  std::span<const std::uint32_t> adjacency(std::size_t index) const {
    return adj_[index];
  }
  VertexSet neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_[index_of(v)].size(); }
  bool adjacent(Vertex a, Vertex b) const;

  const std::string& label(Vertex v) const;
  std::string label(Edge e) const;
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find(), but throws UnknownVertex.
  Vertex vertex(std::string_view label) const;
  std::size_t universe_size() const noexcept { return table_->names.size(); }

  EdgeSet edges() const;

  /// Subgraph induced by the dense indices in `keep` (ascending).
  Graph induced_by_index(std::span<const std::uint32_t> keep) const;

  /// Same labels and same edges (label tables may differ).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::shared_ptr<const LabelTable> table_;
  VertexSet vertices_;
  std::vector<std::int32_t> index_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// G - S. Throws UnknownVertex if some member of S is absent.
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

/// G[keep]. Throws UnknownVertex if some member of keep is absent.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// N(X) = union of neighborhoods minus X.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> x);

/// Components sorted by their smallest vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// BFS 2-coloring, each component started from its smallest vertex, which
/// lands on the first side.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct PendantTriangle {
  Vertex u = 0;
  Vertex v = 0;  // attachment vertex
  Vertex w = 0;

  friend auto operator<=>(const PendantTriangle&, const PendantTriangle&) = default;
};

struct LocalFeatures {
  VertexSet isolated_vertices;
  EdgeSet isolated_edges;
  std::vector<PendantTriangle> pendant_triangles;  // sorted by (v, u, w), u < w
};

LocalFeatures local_features(const Graph& g);

/// True iff m is a matching of g and no edge of g joins two of its edges.
/// Throws UnknownEndpoint for endpoints not in g.
bool verify_induced_matching(const Graph& g, std::span<const Edge> m);

}  // namespace imsolve
