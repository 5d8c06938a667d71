#include "imsolve/oracle.hpp"

#include <algorithm>
#include <bit>

#include "imsolve/errors.hpp"
#include "imsolve/solver.hpp"

namespace imsolve {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
int lowest(Mask m) { return std::countr_zero(m); }
std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::vector<Mask> adjacency_masks(const Graph& g, std::size_t cap, std::string_view what) {
  const std::size_t limit = std::min<std::size_t>(cap, 64);
  if (g.order() > limit) {
    throw TooLarge(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceed the oracle cap of " +
                   std::to_string(limit));
  }
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (auto j : g.adjacency(i)) adj[i] |= bit(j);
  }
  return adj;
}

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// Vertices of `open` that still have a neighbor in `open`.
Mask matchable(const std::vector<Mask>& adj, Mask open) {
  Mask out = 0;
  for (Mask m = open; m; m &= m - 1) {
    int v = lowest(m);
    if (adj[v] & open) out |= bit(v);
  }
  return out;
}

struct InducedSearch {
  const std::vector<Mask>& adj;
  std::vector<std::pair<int, int>> current;
  std::vector<std::pair<int, int>> best;

  // open: undecided vertices; any vertex adjacent to a chosen edge has been
  // removed from it, so open vertices are free to be matched.
  void run(Mask open) {
    if (current.size() > best.size()) best = current;
    Mask live = matchable(adj, open);
    if (current.size() + count(live) / 2 <= best.size()) return;
    int v = lowest(live);
    for (Mask m = adj[v] & open; m; m &= m - 1) {
      int u = lowest(m);
      current.emplace_back(v, u);
      run(open & ~adj[v] & ~adj[u] & ~bit(v) & ~bit(u));
      current.pop_back();
    }
    run(open & ~bit(v));
  }
};

struct MatchingSearch {
  const std::vector<Mask>& adj;
  std::size_t best = 0;

  void run(Mask open, std::size_t size) {
    best = std::max(best, size);
    Mask live = matchable(adj, open);
    if (size + count(live) / 2 <= best) return;
    int v = lowest(live);
    for (Mask m = adj[v] & open; m; m &= m - 1) {
      int u = lowest(m);
      run(open & ~bit(v) & ~bit(u), size + 1);
    }
    run(open & ~bit(v), size);
  }
};

struct IndependentSearch {
  const std::vector<Mask>& adj;
  std::size_t best = 0;

  void run(Mask open, std::size_t size) {
    if (open == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + count(open) <= best) return;
    int v = lowest(open);
    if ((adj[v] & open) == 0) {
      run(open & ~bit(v), size + 1);
      return;
    }
    run(open & ~adj[v] & ~bit(v), size + 1);
    run(open & ~bit(v), size);
  }
};

// Minimum vertex cover: either v joins the cover or all of its remaining
// neighbors do.
struct CoverSearch {
  const std::vector<Mask>& adj;
  std::size_t best;

  void run(Mask open, std::size_t size) {
    if (size >= best) return;
    int v = -1;
    for (Mask m = open; m; m &= m - 1) {
      int x = lowest(m);
      if (adj[x] & open) {
        v = x;
        break;
      }
    }
    if (v < 0) {
      best = size;
      return;
    }
    Mask nbrs = adj[v] & open;
    run(open & ~bit(v), size + 1);
    run(open & ~nbrs & ~bit(v), size + count(nbrs));
  }
};

// Minimum dominating set: the smallest undominated vertex needs a member of
// its closed neighborhood in the set.
struct DominationSearch {
  const std::vector<Mask>& adj;
  std::size_t best;

  void run(Mask undominated, Mask allowed, std::size_t size) {
    if (undominated == 0) {
      best = std::min(best, size);
      return;
    }
    if (size + 1 >= best) return;
    int x = lowest(undominated);
    Mask options = (adj[x] | bit(x)) & allowed;
    for (Mask m = options; m; m &= m - 1) {
      int y = lowest(m);
      run(undominated & ~(adj[y] | bit(y)), allowed & ~bit(y), size + 1);
      // later candidates for x need not reconsider y
      allowed &= ~bit(y);
    }
  }
};

}  // namespace

InducedMatchingResult brute_im(const Graph& g, std::size_t cap) {
  auto adj = adjacency_masks(g, cap, "brute_im");
  InducedSearch search{adj, {}, {}};
  search.run(all_vertices(g.order()));
  InducedMatchingResult out;
  out.size = search.best.size();
  for (auto [a, b] : search.best) {
    out.witness.push_back(Edge::make(g.at(static_cast<std::size_t>(a)), g.at(static_cast<std::size_t>(b))));
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

std::size_t brute_mm(const Graph& g, std::size_t cap) {
  auto adj = adjacency_masks(g, cap, "brute_mm");
  MatchingSearch search{adj};
  search.run(all_vertices(g.order()), 0);
  return search.best;
}

std::size_t brute_is(const Graph& g, std::size_t cap) {
  auto adj = adjacency_masks(g, cap, "brute_is");
  IndependentSearch search{adj};
  search.run(all_vertices(g.order()), 0);
  return search.best;
}

std::size_t brute_vc(const Graph& g, std::size_t cap) {
  auto adj = adjacency_masks(g, cap, "brute_vc");
  CoverSearch search{adj, g.order() + 1};
  search.run(all_vertices(g.order()), 0);
  return search.best;
}

std::size_t brute_ds(const Graph& g, std::size_t cap) {
  auto adj = adjacency_masks(g, cap, "brute_ds");
  DominationSearch search{adj, g.order() + 1};
  search.run(all_vertices(g.order()), all_vertices(g.order()), 0);
  return std::min(search.best, g.order());
}

std::string HalfInteger::str() const {
  std::string s = std::to_string(twice / 2);
  if (twice % 2 != 0) {
    if (twice < 0 && twice / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

ParameterReport parameters(const Graph& g, std::size_t ell, std::size_t cap) {
  ParameterReport r;
  r.n = g.order();
  r.ell = ell;
  r.mm = brute_mm(g, cap);
  r.is = brute_is(g, cap);
  r.im = brute_im(g, cap).size;
  r.vc = brute_vc(g, cap);
  const auto l = static_cast<std::int64_t>(ell);
  r.k_trivial = HalfInteger{static_cast<std::int64_t>(r.n) - 2 * l};
  r.k_mm = static_cast<std::int64_t>(r.mm) - l;
  r.k_is = static_cast<std::int64_t>(r.is) - l;
  r.k_avg = HalfInteger{static_cast<std::int64_t>(r.mm + r.is) - 2 * l};
  return r;
}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::NotCameronWalker: return "not-cameron-walker";
    case StructureKind::Star: return "star";
    case StructureKind::TriangleStar: return "triangle-star";
    case StructureKind::PendantBipartite: return "pendant-bipartite";
    case StructureKind::IsolatedEdge: return "isolated-edge";
    case StructureKind::TightPendantBipartite: return "tight-pendant-bipartite";
    case StructureKind::NotTight: return "not-tight";
  }
  return "?";
}

namespace {

void require_connected(const Graph& g) {
  if (g.empty() || !is_connected(g)) throw Disconnected("structure recognition needs a connected, nonempty graph");
}

bool is_star_graph(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 1) return true;
  if (g.size() != n - 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.adjacency(i).size() == n - 1) return true;
  }
  return false;
}

// Peels pendant vertices and pendant triangles off a connected graph that is
// neither a star nor a triangle star and checks what remains is a connected
// bipartite core with pendant carriers on one side and triangle carriers on
// the other.
StructureClass parse_pendant_bipartite(const Graph& g) {
  StructureClass out;
  const std::size_t n = g.order();
  auto deg = [&](std::size_t i) { return g.adjacency(i).size(); };

  // 0 core, 1 pendant vertex, 2 pendant-triangle vertex
  std::vector<int> role(n, 0);
  std::vector<std::int64_t> carrier(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto adj = g.adjacency(i);
    if (deg(i) == 1) {
      role[i] = 1;
      carrier[i] = adj[0];
    } else if (deg(i) == 2) {
      auto p = adj[0];
      auto q = adj[1];
      auto pa = g.adjacency(p);
      if (!std::binary_search(pa.begin(), pa.end(), q)) continue;
      if ((deg(p) == 2) == (deg(q) == 2)) continue;
      role[i] = 2;
      carrier[i] = deg(p) == 2 ? q : p;
    }
  }

  std::vector<int> side(n, -1);  // 0 = U, 1 = W for core vertices
  std::vector<std::size_t> pendants(n, 0);
  std::vector<std::size_t> triangle_vertices(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == 0) continue;
    auto c = static_cast<std::size_t>(carrier[i]);
    if (role[c] != 0) return out;
    (role[i] == 1 ? pendants[c] : triangle_vertices[c]) += 1;
  }
  std::vector<std::uint32_t> core;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (role[i] != 0) continue;
    core.push_back(i);
    side[i] = pendants[i] > 0 ? 0 : 1;
    if (pendants[i] > 0 && triangle_vertices[i] > 0) return out;
  }
  if (core.empty()) return out;
  for (auto i : core) {
    for (auto j : g.adjacency(i)) {
      if (role[j] == 0 && side[j] == side[i]) return out;
    }
  }
  if (!is_connected(g.induced_by_index(core))) return out;

  out.kind = StructureKind::PendantBipartite;
  for (auto i : core) {
    if (side[i] == 0) {
      out.u.push_back(g.at(i));
      out.pendants.push_back(pendants[i]);
    } else {
      out.w.push_back(g.at(i));
      out.triangles.push_back(triangle_vertices[i] / 2);
    }
  }
  return out;
}

}  // namespace

StructureClass recognize_cameron_walker(const Graph& g) {
  require_connected(g);
  if (is_star_graph(g)) return StructureClass{StructureKind::Star, {}, {}, {}, {}};
  if (is_triangle_star(g)) return StructureClass{StructureKind::TriangleStar, {}, {}, {}, {}};
  return parse_pendant_bipartite(g);
}

StructureClass classify_tight(const Graph& g) {
  require_connected(g);
  if (g.order() == 2 && g.size() == 1) return StructureClass{StructureKind::IsolatedEdge, {}, {}, {}, {}};
  if (is_triangle_star(g)) return StructureClass{StructureKind::TriangleStar, {}, {}, {}, {}};
  if (is_star_graph(g)) return StructureClass{StructureKind::NotTight, {}, {}, {}, {}};
  auto cls = parse_pendant_bipartite(g);
  if (cls.kind != StructureKind::PendantBipartite) {
    cls.kind = StructureKind::NotTight;
    return cls;
  }
  const bool one_pendant = std::all_of(cls.pendants.begin(), cls.pendants.end(), [](auto c) { return c == 1; });
  const bool has_triangle = std::all_of(cls.triangles.begin(), cls.triangles.end(), [](auto c) { return c >= 1; });
  cls.kind = one_pendant && has_triangle ? StructureKind::TightPendantBipartite : StructureKind::NotTight;
  return cls;
}

}  // namespace imsolve
