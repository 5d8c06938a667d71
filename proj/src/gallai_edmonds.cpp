#include "imsolve/gallai_edmonds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "imsolve/errors.hpp"
#include "imsolve/matching.hpp"

namespace imsolve {

GEDecomposition decompose(const Graph& g) {
  GEDecomposition out;
  const std::size_t mm = matching_number(g);
  for (Vertex v : g.vertices()) {
    const Vertex drop[] = {v};
    if (matching_number(delete_vertices(g, drop)) == mm) out.d.push_back(v);
  }
  out.a = neighborhood(g, out.d);
  std::set_difference(g.vertices().begin(), g.vertices().end(), out.a.begin(), out.a.end(),
                      std::back_inserter(out.c));
  VertexSet rest;
  std::set_difference(out.c.begin(), out.c.end(), out.d.begin(), out.d.end(), std::back_inserter(rest));
  out.c = std::move(rest);
  out.d_components = connected_components(induced_subgraph(g, out.d));
  return out;
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

const AuditCheck* AuditReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Enumerates nonempty subsets of A; returns the first violating subset size
// through `bad`, or false if every subset has surplus.
bool find_deficient(const std::vector<Bits>& reach, std::size_t at, Bits& acc, std::size_t chosen,
                    VertexSet& path, const VertexSet& a, VertexSet& bad) {
  if (at == reach.size()) {
    if (chosen > 0 && popcount(acc) <= chosen) {
      bad = path;
      return true;
    }
    return false;
  }
  if (find_deficient(reach, at + 1, acc, chosen, path, a, bad)) return true;
  Bits saved = acc;
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= reach[at][w];
  path.push_back(a[at]);
  bool hit = find_deficient(reach, at + 1, acc, chosen + 1, path, a, bad);
  path.pop_back();
  acc = std::move(saved);
  return hit;
}

std::string list(const Graph& g, const VertexSet& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << g.label(vs[i]);
  os << '}';
  return os.str();
}

}  // namespace

AuditReport audit(const Graph& g, const GEDecomposition& d) {
  if (d.a.size() > kAuditMaxA) {
    throw AuditTooLarge("|A| = " + std::to_string(d.a.size()) + " exceeds the surplus-check guard");
  }
  AuditReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back(AuditCheck{std::move(name), ok, std::move(detail)});
  };

  const std::size_t n = g.order();
  // 0 = D, 1 = A, 2 = C
  std::vector<int> part(n, -1);
  bool partition_ok = true;
  for (int p = 0; p < 3; ++p) {
    const VertexSet& set = p == 0 ? d.d : (p == 1 ? d.a : d.c);
    for (Vertex v : set) {
      if (!g.contains(v) || part[g.index_of(v)] != -1) {
        partition_ok = false;
        continue;
      }
      part[g.index_of(v)] = p;
    }
  }
  partition_ok = partition_ok && std::none_of(part.begin(), part.end(), [](int p) { return p < 0; });
  add("partition", partition_ok);
  if (!partition_ok) return report;

  VertexSet nd = neighborhood(g, d.d);
  add("A = N(D)", nd == d.a, nd == d.a ? "" : "N(D) = " + list(g, nd));

  const Graph gd = induced_subgraph(g, d.d);
  const auto comps = connected_components(gd);
  add("d_components", comps == d.d_components);

  bool fc_ok = true;
  std::string fc_detail;
  for (const auto& s : comps) {
    if (!is_factor_critical(induced_subgraph(g, s))) {
      fc_ok = false;
      fc_detail = list(g, s) + " is not factor-critical";
      break;
    }
  }
  add("factor-critical D components", fc_ok, fc_detail);

  add("perfect matching on C", has_perfect_matching(induced_subgraph(g, d.c)));

  // Contracted bipartite graph: A on one side, components of G[D] on the
  // other, edges of G[A] dropped.
  std::vector<int> comp_of(n, -1);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (Vertex v : comps[k]) comp_of[g.index_of(v)] = static_cast<int>(k);
  }
  const std::size_t words = (comps.size() + 63) / 64;
  std::vector<Bits> reach;
  reach.reserve(d.a.size());
  for (Vertex av : d.a) {
    Bits b(words, 0);
    for (auto j : g.adjacency(g.index_of(av))) {
      if (comp_of[j] >= 0) b[static_cast<std::size_t>(comp_of[j]) / 64] |= std::uint64_t{1} << (comp_of[j] % 64);
    }
    reach.push_back(std::move(b));
  }
  Bits acc(words, 0);
  VertexSet path;
  VertexSet bad;
  bool deficient = find_deficient(reach, 0, acc, 0, path, d.a, bad);
  add("surplus", !deficient, deficient ? "A' = " + list(g, bad) + " has no surplus" : "");

  auto mate = maximum_matching_mates(g);
  bool a_into_d = true;
  for (Vertex av : d.a) {
    auto m = mate[g.index_of(av)];
    if (m < 0 || part[static_cast<std::size_t>(m)] != 0) a_into_d = false;
  }
  add("A matched into D", a_into_d);

  bool near_perfect = true;
  for (const auto& s : comps) {
    std::size_t inside = 0;
    for (Vertex v : s) {
      auto m = mate[g.index_of(v)];
      if (m >= 0 && comp_of[static_cast<std::size_t>(m)] == comp_of[g.index_of(v)]) ++inside;
    }
    if (inside != s.size() - 1) near_perfect = false;  // counts matched vertices, 2 per edge
  }
  add("near-perfect on D components", near_perfect);

  bool c_perfect = true;
  for (Vertex v : d.c) {
    auto m = mate[g.index_of(v)];
    if (m < 0 || part[static_cast<std::size_t>(m)] != 2) c_perfect = false;
  }
  add("perfect on C", c_perfect);
  return report;
}

}  // namespace imsolve
