#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imsolve/graph.hpp"
#include "imsolve/kernel.hpp"

namespace imsolve {

// Fixtures.
Graph fixture_fig2();      // 9 vertices, max matching and independent set both 4
Graph fixture_tstar4();    // center s with four pendant triangles
Graph fixture_paw_tail();  // triangle abc, a-x, x-y
Graph fixture_tri_a();     // triangle abc, z ~ a, b, y ~ z
/// "fig2", "tstar4", "paw-tail", "tri-a"; throws InvalidSpec otherwise.
Graph fixture(std::string_view name);

// Small families on labels "1".."n".
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center "1"

/// Instance file text:
///   c <comment>                 any number, anywhere
///   c label <index> <name>      optional vertex names
///   p im <n> <m> <ell>          exactly one, before any edge
///   e <u> <v>                   m lines, 1-based indices
/// Throws ParseError (with line number) or InconsistentHeader.
Instance read_instance(std::string_view text);

/// Normalized text: label lines (only when names differ from 1..n), the
/// header, then edges sorted by index pair.
std::string write_instance(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst);

/// G(n, p) on labels "1".."n"; identical (n, p, seed) give identical graphs.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Cameron-Walker construction. With an empty `core_edges` and both sides
/// non-empty, a random connected bipartite core is drawn from `seed` with
/// extra edge probability `core_p`.
struct CWSpec {
  std::vector<std::string> u;
  std::vector<std::string> w;
  std::vector<std::pair<std::string, std::string>> core_edges;  // each joins U and W
  std::vector<std::size_t> pendants;   // per u, >= 1
  std::vector<std::size_t> triangles;  // per w
  bool tight = false;                  // pendants == 1 and triangles >= 1
  double core_p = 0.3;
};

/// Throws InvalidSpec.
Graph gen_cameron_walker(const CWSpec& spec, std::uint64_t seed);

/// Full subdivision of g; the vertex on edge uv is labeled "u_v" (u < v).
/// Returns (G', |V(g)| - ell). Throws Disconnected or Acyclic.
Instance reduce_dominating_set(const Graph& g, std::size_t ell);

/// Adds apex v_i with N(v_i) = cliques[i]. Returns (G', number of cliques).
/// Throws NotAClique, or InvalidSpec when `cliques` is not a partition.
Instance reduce_multicolored_is(const Graph& g, const std::vector<VertexSet>& cliques);

/// Greedy partition into cliques, smallest vertex first.
std::vector<VertexSet> greedy_clique_partition(const Graph& g);

/// Declarative generator text, one of
///   random n=<N> p=<P>
///   cw u=<N> w=<N> [pendants=<N>] [triangles=<N>] [p=<P>] [tight]
///   fixture <fig2|tstar4|paw-tail|tri-a>
///   path|cycle|complete|empty n=<N>
///   star k=<N>
/// Throws InvalidSpec.
Graph generate(std::string_view spec, std::uint64_t seed);

}  // namespace imsolve
