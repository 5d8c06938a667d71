#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "imsolve/gallai_edmonds.hpp"
#include "imsolve/graph.hpp"
#include "imsolve/kernel.hpp"

namespace imsolve {

enum class Rule {
  AC,        // naive branch on a C-vertex
  AA,        // edge inside A
  Triangle,  // triangle component of G[D]
  TStar,     // triangle-star component of G[D] with >= 2 pendant triangles
  FC,        // other factor-critical component with >= 5 vertices
  NaiveA,    // naive branch once G is bipartite with sides A, D
  Naive,     // plain naive branch (IMBTG only)
  NaiveB,    // u, v, N({u, v}) branch
};

std::string_view to_string(Rule rule);

struct Actor {
  std::string_view role;
  Vertex vertex = 0;
};

/// A branching rule together with the vertices it acts on. Actor roles, in
/// order:
///   AC, NaiveA   v u w          Naive        u v w
///   AA, NaiveB   u v            Triangle     u v w u' v'
///   TStar        u v u' v' u'' v''
///   FC           u v w x v' v1' v2' w' w1' w2'
struct BranchChoice {
  Rule rule = Rule::NaiveA;
  std::vector<Actor> actors;
  VertexSet component;  // the D-component for Triangle, TStar and FC

  /// Throws PreconditionViolated when the role is absent.
  Vertex actor(std::string_view role) const;
};

/// True iff h is a triangle with any number of pendant triangles glued to
/// one of its vertices.
bool is_triangle_star(const Graph& h);

/// A path (u, v, w, x) on four vertices of g[component], built around a
/// maximum-degree pivot v. Absent when the component has fewer than four
/// vertices or is a star.
std::optional<std::array<Vertex, 4>> find_path4(const Graph& g, std::span<const Vertex> component);

struct Survivor {
  Vertex vertex = 0;
  Vertex first = 0;   // smallest neighbor in component - v
  Vertex second = 0;  // next smallest
};

/// Smallest vertex of component - v with at least two neighbors in
/// component - v. Throws PreconditionViolated if g[component] is a triangle
/// star, or if no such vertex exists.
Survivor find_degree2_survivor(const Graph& g, std::span<const Vertex> component, Vertex v);

/// Picks the branching rule by priority AC, AA, Triangle, TStar, FC,
/// NaiveA. `g` must be fully reduced. Throws NoRuleApplies when g has no
/// vertex of degree >= 2.
BranchChoice choose_rule(const Graph& g, const GEDecomposition& ged);

/// Child instances of a branching, in rule order; all keep inst.ell.
std::vector<Instance> expand(const Instance& inst, const BranchChoice& choice);

enum class Answer { Yes, No, Exhausted };

std::string_view to_string(Answer a);

struct SearchStats {
  std::size_t nodes_visited = 0;
  std::size_t max_depth = 0;
  std::map<Rule, std::size_t> branchings_by_rule;
  std::map<ReductionRule, std::size_t> reductions_by_rule;

  void merge(const SearchStats& other);
};

struct SolveResult {
  Answer answer = Answer::No;
  EdgeSet certificate;  // sorted; non-empty only for Yes with ell > 0
  SearchStats stats;
  std::size_t budget = 0;  // branching budget of the run that decided
};

/// Everything known about one search node when it is visited.
struct NodeEvent {
  std::size_t depth = 0;
  const Instance& input;
  const Reduction& reduction;
  Terminal state;
  const BranchChoice* choice;  // null unless state == Continue
  std::span<const Instance> children;
};

class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_node(const NodeEvent& event) = 0;
};

/// Writes one JSON object per node: depth, state, rule, actors, n, ell.
class TraceWriter : public SearchObserver {
 public:
  explicit TraceWriter(std::ostream& out) : out_(out) {}
  void on_node(const NodeEvent& event) override;

 private:
  std::ostream& out_;
};

struct SolveOptions {
  SearchObserver* observer = nullptr;
};

/// Depth-first branch-and-reduce with at most `budget` branchings on any
/// root-to-leaf path. Yes carries a certificate checked against inst.graph;
/// Exhausted means no Yes leaf was found and some leaf hit the budget.
SolveResult solve_imba(const Instance& inst, std::size_t budget, const SolveOptions& options = {});

/// Definitive answer. With `trusted_budget` (twice a known parameter k) a
/// single run at that budget, Exhausted read as No. Otherwise iterative
/// deepening over budget 0, 1, 2, ... until Yes or a run with no truncated
/// leaf.
SolveResult solve_auto(const Instance& inst, std::optional<std::size_t> trusted_budget = std::nullopt,
                       const SolveOptions& options = {});

/// The simple algorithm: RR1/RR2, naive branching on the smallest vertex of
/// degree >= 2, depth bound |V| - 2 ell + 1.
SolveResult solve_imbtg(const Instance& inst, const SolveOptions& options = {});

}  // namespace imsolve
