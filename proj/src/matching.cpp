#include "imsolve/matching.hpp"

#include <algorithm>
#include <deque>

#include "imsolve/errors.hpp"

namespace imsolve {

namespace {

// Edmonds' algorithm with explicit blossom bases (Gabow's O(n^3) variant as
// usually presented: BFS from one exposed root, contracting blossoms by
// relabelling bases).
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<std::int32_t> run() {
    greedy_start();
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      std::int32_t end = find_path(static_cast<std::int32_t>(root));
      while (end != -1) {
        std::int32_t pv = parent_[end];
        std::int32_t next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  void greedy_start() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (auto w : g_.adjacency(v)) {
        if (mate_[w] == -1) {
          mate_[v] = static_cast<std::int32_t>(w);
          mate_[w] = static_cast<std::int32_t>(v);
          break;
        }
      }
    }
  }

  std::int32_t lca(std::int32_t a, std::int32_t b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::int32_t v, std::int32_t b, std::int32_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::int32_t find_path(std::int32_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<std::int32_t>(i);
    used_[root] = 1;
    std::deque<std::int32_t> queue{root};
    while (!queue.empty()) {
      std::int32_t v = queue.front();
      queue.pop_front();
      for (auto to_u : g_.adjacency(static_cast<std::size_t>(v))) {
        auto to = static_cast<std::int32_t>(to_u);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          std::int32_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<std::int32_t>(i));
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::int32_t> mate_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

std::vector<std::int32_t> maximum_matching_mates(const Graph& g) { return Blossom(g).run(); }

Matching maximum_matching(const Graph& g) {
  auto mate = maximum_matching_mates(g);
  Matching m;
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (mate[i] > static_cast<std::int32_t>(i)) {
      m.push_back(Edge{g.at(i), g.at(static_cast<std::size_t>(mate[i]))});
    }
  }
  return m;
}

std::size_t matching_number(const Graph& g) {
  auto mate = maximum_matching_mates(g);
  return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](auto m) { return m != -1; })) / 2;
}

bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

bool is_factor_critical(const Graph& g) {
  if (g.empty() || g.order() % 2 == 0 || !is_connected(g)) return false;
  for (Vertex v : g.vertices()) {
    const Vertex drop[] = {v};
    if (!has_perfect_matching(delete_vertices(g, drop))) return false;
  }
  return true;
}

VertexSet konig_cover(const Graph& g) {
  auto sides = bipartition(g);
  if (!sides) throw NotBipartite("konig_cover requires a bipartite graph");
  const auto n = g.order();
  std::vector<char> left(n, 0);
  for (Vertex v : sides->first) left[g.index_of(v)] = 1;

  auto mate = maximum_matching_mates(g);
  // Alternating reachability from exposed left vertices: left -> right along
  // non-matching edges, right -> left along matching edges.
  std::vector<char> reached(n, 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (left[i] && mate[i] == -1) {
      reached[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : g.adjacency(v)) {
      if (reached[w] || mate[v] == static_cast<std::int32_t>(w)) continue;
      reached[w] = 1;
      if (mate[w] != -1 && !reached[mate[w]]) {
        reached[mate[w]] = 1;
        queue.push_back(static_cast<std::uint32_t>(mate[w]));
      }
    }
  }
  VertexSet cover;
  for (std::uint32_t i = 0; i < n; ++i) {
    if ((left[i] && !reached[i]) || (!left[i] && reached[i])) cover.push_back(g.at(i));
  }
  return cover;
}

}  // namespace imsolve
