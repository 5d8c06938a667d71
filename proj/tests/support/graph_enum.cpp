#include "graph_enum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

namespace imsolve::testing {

bool SmallGraph::connected() const {
  if (n == 0) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

Graph SmallGraph::to_graph() const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(i, j)) edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return Graph::numbered(n, edges);
}

namespace {

using Colors = std::vector<int>;

// Equitable refinement. Colors are ranks of isomorphism-invariant
// signatures, so the result does not depend on vertex numbering.
void refine(const SmallGraph& g, Colors& col) {
  const std::size_t n = g.n;
  std::vector<std::vector<int>> sig(n);
  std::size_t classes = 0;
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(col[v]);
      std::vector<int> nb;
      for (std::uint32_t m = g.adj[v]; m; m &= m - 1) nb.push_back(col[std::countr_zero(m)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      col[order[i]] = rank;
    }
    const auto now = static_cast<std::size_t>(n == 0 ? 0 : rank + 1);
    if (now == classes) return;
    classes = now;
  }
}

std::uint64_t leaf_code(const SmallGraph& g, const Colors& col) {
  std::vector<std::size_t> at(g.n);
  for (std::size_t v = 0; v < g.n; ++v) at[static_cast<std::size_t>(col[v])] = v;
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) code = code << 1 | static_cast<std::uint64_t>(g.edge(at[i], at[j]));
  }
  return code;
}

// u and v are interchangeable by an automorphism swapping just them.
bool twins(const SmallGraph& g, std::size_t u, std::size_t v) {
  const std::uint16_t mask = static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
  return (g.adj[u] & mask) == (g.adj[v] & mask);
}

void search(const SmallGraph& g, Colors col, std::uint64_t& best, bool& have) {
  refine(g, col);
  const int classes = g.n == 0 ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  if (static_cast<std::size_t>(classes) == g.n) {
    auto code = leaf_code(g, col);
    if (!have || code > best) best = code;
    have = true;
    return;
  }
  // first non-singleton cell
  std::vector<int> size(static_cast<std::size_t>(classes), 0);
  for (int c : col) ++size[static_cast<std::size_t>(c)];
  int target = 0;
  while (size[static_cast<std::size_t>(target)] == 1) ++target;

  std::vector<std::size_t> tried;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (col[v] != target) continue;
    if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(g, t, v); })) continue;
    tried.push_back(v);
    Colors next(g.n);
    for (std::size_t x = 0; x < g.n; ++x) next[x] = 2 * col[x] + (col[x] == target && x != v ? 1 : 0);
    search(g, next, best, have);
  }
}

}  // namespace

std::uint64_t canonical_code(const SmallGraph& g) {
  Colors col(g.n);
  for (std::size_t v = 0; v < g.n; ++v) col[v] = std::popcount(g.adj[v]);
  std::uint64_t best = 0;
  bool have = false;
  search(g, col, best, have);
  return best;
}

SmallGraph decode(std::size_t n, std::uint64_t code) {
  SmallGraph g{n, std::vector<std::uint16_t>(n, 0)};
  std::size_t bit = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      --bit;
      if (code >> bit & 1) {
        g.adj[i] |= static_cast<std::uint16_t>(1u << j);
        g.adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  return g;
}

std::vector<std::vector<std::uint64_t>> enumerate_graphs(std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> out(max_n + 1);
  out[0] = {0};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t prev : out[n - 1]) {
      SmallGraph h = decode(n - 1, prev);
      h.n = n;
      h.adj.push_back(0);
      for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
        SmallGraph g = h;
        g.adj[n - 1] = static_cast<std::uint16_t>(s);
        for (std::uint32_t m = s; m; m &= m - 1) g.adj[std::countr_zero(m)] |= static_cast<std::uint16_t>(1u << (n - 1));
        seen.insert(canonical_code(g));
      }
    }
    out[n].assign(seen.begin(), seen.end());
    std::sort(out[n].begin(), out[n].end());
  }
  return out;
}

}  // namespace imsolve::testing
