#include "imsolve/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "imsolve/errors.hpp"

namespace imsolve {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs numerically; leading zeros are ignored.
int compare_digits(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      int c = compare_digits(a.substr(i, ie - i), b.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((i < a.size()) != (j < b.size())) return i >= a.size();
  return a < b;
}

Graph::Graph() : table_(std::make_shared<LabelTable>()) {}

Graph Graph::build(std::vector<std::string> labels,
                   std::span<const std::pair<std::string, std::string>> edges) {
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return label_less(a, b); });
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) throw DuplicateLabel("duplicate label '" + labels[i] + "'");
  }
  std::unordered_map<std::string_view, Vertex> by_name;
  by_name.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) by_name.emplace(labels[i], static_cast<Vertex>(i));

  const std::size_t n = labels.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [a, b] : edges) {
    auto ia = by_name.find(a);
    auto ib = by_name.find(b);
    if (ia == by_name.end()) throw UnknownEndpoint("unknown endpoint '" + a + "'");
    if (ib == by_name.end()) throw UnknownEndpoint("unknown endpoint '" + b + "'");
    if (ia->second == ib->second) throw SelfLoop("self-loop at '" + a + "'");
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
  }
  std::size_t m = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      auto dup = *std::adjacent_find(list.begin(), list.end());
      throw DuplicateEdge("duplicate edge '" + labels[v] + "'-'" + labels[dup] + "'");
    }
    m += list.size();
  }

  auto table = std::make_shared<LabelTable>();
  table->names = std::move(labels);

  Graph g;
  g.table_ = std::move(table);
  g.vertices_.resize(n);
  std::iota(g.vertices_.begin(), g.vertices_.end(), Vertex{0});
  g.index_.resize(n);
  std::iota(g.index_.begin(), g.index_.end(), 0);
  g.adj_ = std::move(adj);
  g.edge_count_ = m / 2;
  return g;
}

Graph Graph::numbered(std::size_t n, std::span<const std::pair<int, int>> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges.size());
  for (auto [a, b] : edges) named.emplace_back(std::to_string(a), std::to_string(b));
  return build(std::move(labels), named);
}

std::size_t Graph::index_of(Vertex v) const {
  if (!contains(v)) throw UnknownVertex("vertex id " + std::to_string(v) + " not in graph");
  return static_cast<std::size_t>(index_[v]);
}

VertexSet Graph::neighbors(Vertex v) const {
  const auto& list = adj_[index_of(v)];
  VertexSet out;
  out.reserve(list.size());
  for (auto i : list) out.push_back(vertices_[i]);
  return out;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = adj_[static_cast<std::size_t>(index_[a])];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(index_[b]));
}

const std::string& Graph::label(Vertex v) const {
  if (v >= table_->names.size()) throw UnknownVertex("vertex id " + std::to_string(v) + " out of range");
  return table_->names[v];
}

std::string Graph::label(Edge e) const { return label(e.u) + "-" + label(e.v); }

std::optional<Vertex> Graph::find(std::string_view name) const {
  const auto& names = table_->names;
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& a, std::string_view b) { return label_less(a, b); });
  if (it == names.end() || *it != name) return std::nullopt;
  auto v = static_cast<Vertex>(it - names.begin());
  if (!contains(v)) return std::nullopt;
  return v;
}

Vertex Graph::vertex(std::string_view name) const {
  auto v = find(name);
  if (!v) throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
  return *v;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (auto j : adj_[i]) {
      if (j > i) out.push_back(Edge{vertices_[i], vertices_[j]});
    }
  }
  return out;
}

Graph Graph::induced_by_index(std::span<const std::uint32_t> keep) const {
  Graph g;
  g.table_ = table_;
  g.index_.assign(index_.size(), -1);
  g.vertices_.reserve(keep.size());
  std::vector<std::int32_t> remap(adj_.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    remap[keep[k]] = static_cast<std::int32_t>(k);
    g.vertices_.push_back(vertices_[keep[k]]);
    g.index_[vertices_[keep[k]]] = static_cast<std::int32_t>(k);
  }
  g.adj_.resize(keep.size());
  std::size_t m = 0;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    auto& out = g.adj_[k];
    for (auto j : adj_[keep[k]]) {
      if (remap[j] >= 0) out.push_back(static_cast<std::uint32_t>(remap[j]));
    }
    m += out.size();
  }
  g.edge_count_ = m / 2;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a.label(a.at(i)) != b.label(b.at(i))) return false;
    if (a.adj_[i] != b.adj_[i]) return false;
  }
  return true;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : s) drop[g.index_of(v)] = 1;
  std::vector<std::uint32_t> keep;
  keep.reserve(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (!drop[i]) keep.push_back(i);
  }
  return g.induced_by_index(keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::uint32_t> idx;
  idx.reserve(keep.size());
  for (Vertex v : keep) idx.push_back(static_cast<std::uint32_t>(g.index_of(v)));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return g.induced_by_index(idx);
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> in_x(g.order(), 0);
  for (Vertex v : x) in_x[g.index_of(v)] = 1;
  std::vector<char> hit(g.order(), 0);
  for (Vertex v : x) {
    for (auto j : g.adjacency(g.index_of(v))) {
      if (!in_x[j]) hit[j] = 1;
    }
  }
  VertexSet out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (hit[i]) out.push_back(g.at(i));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(g.at(v));
      for (auto w : g.adjacency(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : g.adjacency(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    (side[i] == 0 ? out.first : out.second).push_back(g.at(i));
  }
  return out;
}

LocalFeatures local_features(const Graph& g) {
  LocalFeatures f;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    auto adj = g.adjacency(i);
    if (adj.empty()) {
      f.isolated_vertices.push_back(g.at(i));
    } else if (adj.size() == 1 && adj[0] > i && g.adjacency(adj[0]).size() == 1) {
      f.isolated_edges.push_back(Edge{g.at(i), g.at(adj[0])});
    }
  }
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    auto adj = g.adjacency(v);
    for (std::size_t a = 0; a < adj.size(); ++a) {
      if (g.adjacency(adj[a]).size() != 2) continue;
      for (std::size_t b = a + 1; b < adj.size(); ++b) {
        if (g.adjacency(adj[b]).size() != 2) continue;
        auto nu = g.adjacency(adj[a]);
        if (std::find(nu.begin(), nu.end(), adj[b]) != nu.end()) {
          f.pendant_triangles.push_back(PendantTriangle{g.at(adj[a]), g.at(v), g.at(adj[b])});
        }
      }
    }
  }
  return f;
}

bool verify_induced_matching(const Graph& g, std::span<const Edge> m) {
  for (const Edge& e : m) {
    if (!g.contains(e.u)) throw UnknownEndpoint("certificate endpoint id " + std::to_string(e.u) + " not in graph");
    if (!g.contains(e.v)) throw UnknownEndpoint("certificate endpoint id " + std::to_string(e.v) + " not in graph");
  }
  // owner[i] = which certificate edge covers dense vertex i
  std::vector<std::int32_t> owner(g.order(), -1);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!g.adjacent(m[k].u, m[k].v)) return false;
    for (Vertex x : {m[k].u, m[k].v}) {
      auto i = g.index_of(x);
      if (owner[i] >= 0) return false;
      owner[i] = static_cast<std::int32_t>(k);
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (owner[i] < 0) continue;
    for (auto j : g.adjacency(i)) {
      if (owner[j] >= 0 && owner[j] != owner[i]) return false;
    }
  }
  return true;
}

}  // namespace imsolve
