#include "imsolve/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "imsolve/errors.hpp"

namespace imsolve {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::AC: return "AC";
    case Rule::AA: return "AA";
    case Rule::Triangle: return "TRIANGLE";
    case Rule::TStar: return "TSTAR";
    case Rule::FC: return "FC";
    case Rule::NaiveA: return "NAIVE-A";
    case Rule::Naive: return "NAIVE";
    case Rule::NaiveB: return "NAIVE-B";
  }
  return "?";
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Exhausted: return "exhausted";
  }
  return "?";
}

Vertex BranchChoice::actor(std::string_view role) const {
  for (const auto& a : actors) {
    if (a.role == role) return a.vertex;
  }
  throw PreconditionViolated("branch choice has no actor '" + std::string(role) + "'");
}

void SearchStats::merge(const SearchStats& other) {
  nodes_visited += other.nodes_visited;
  max_depth = std::max(max_depth, other.max_depth);
  for (auto [rule, count] : other.branchings_by_rule) branchings_by_rule[rule] += count;
  for (auto [rule, count] : other.reductions_by_rule) reductions_by_rule[rule] += count;
}

bool is_triangle_star(const Graph& h) {
  const std::size_t n = h.order();
  if (n < 3 || n % 2 == 0) return false;
  if (n == 3) return h.size() == 3;
  std::size_t centers = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = h.adjacency(i).size();
    if (d == n - 1) {
      ++centers;
    } else if (d != 2) {
      return false;
    }
  }
  // A center adjacent to everything plus degree 2 elsewhere forces the
  // remaining vertices to pair up into disjoint edges.
  return centers == 1;
}

namespace {

bool is_star(const Graph& h) {
  const std::size_t n = h.order();
  if (n < 2 || h.size() != n - 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (h.adjacency(i).size() == n - 1) return true;
  }
  return false;
}

}  // namespace

std::optional<std::array<Vertex, 4>> find_path4(const Graph& g, std::span<const Vertex> component) {
  const Graph h = induced_subgraph(g, component);
  const std::size_t n = h.order();
  if (n < 4 || is_star(h) || !is_connected(h)) return std::nullopt;

  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (h.adjacency(i).size() > h.adjacency(pivot).size()) pivot = i;
  }
  auto nv = h.adjacency(pivot);
  if (nv.size() == n - 1) {
    // Two adjacent neighbors w, x of the pivot, then any third neighbor u.
    for (auto w : nv) {
      for (auto x : h.adjacency(w)) {
        if (x == pivot || x < w) continue;
        for (auto u : nv) {
          if (u != w && u != x) return std::array<Vertex, 4>{h.at(u), h.at(pivot), h.at(w), h.at(x)};
        }
      }
    }
    return std::nullopt;
  }
  // Neighbor w of the pivot with a neighbor x outside N[pivot].
  std::vector<char> closed(n, 0);
  closed[pivot] = 1;
  for (auto j : nv) closed[j] = 1;
  for (auto w : nv) {
    for (auto x : h.adjacency(w)) {
      if (closed[x]) continue;
      for (auto u : nv) {
        if (u != w) return std::array<Vertex, 4>{h.at(u), h.at(pivot), h.at(w), h.at(x)};
      }
    }
  }
  return std::nullopt;
}

Survivor find_degree2_survivor(const Graph& g, std::span<const Vertex> component, Vertex v) {
  const Graph h = induced_subgraph(g, component);
  if (is_triangle_star(h)) throw PreconditionViolated("component is a triangle star");
  const auto skip = h.index_of(v);
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (i == skip) continue;
    std::vector<Vertex> nbrs;
    for (auto j : h.adjacency(i)) {
      if (j != skip) nbrs.push_back(h.at(j));
    }
    if (nbrs.size() >= 2) return Survivor{h.at(i), nbrs[0], nbrs[1]};
  }
  throw PreconditionViolated("no vertex keeps two neighbors after deleting " + g.label(v));
}

namespace {

// Smallest A-neighbor of v, if any.
std::optional<Vertex> a_neighbor(const Graph& g, const std::vector<char>& in_a, Vertex v) {
  for (auto j : g.adjacency(g.index_of(v))) {
    if (in_a[j]) return g.at(j);
  }
  return std::nullopt;
}

BranchChoice naive_on(const Graph& g, std::uint32_t i, Rule rule) {
  auto adj = g.adjacency(i);
  BranchChoice c{rule, {}, {}};
  if (rule == Rule::Naive) {
    c.actors = {{"u", g.at(adj[0])}, {"v", g.at(i)}, {"w", g.at(adj[1])}};
  } else {
    c.actors = {{"v", g.at(i)}, {"u", g.at(adj[0])}, {"w", g.at(adj[1])}};
  }
  return c;
}

std::optional<BranchChoice> triangle_choice(const Graph& g, const std::vector<char>& in_a, const VertexSet& s) {
  std::vector<std::pair<Vertex, Vertex>> with_a;  // (vertex, its A-neighbor)
  for (Vertex x : s) {
    if (auto an = a_neighbor(g, in_a, x)) with_a.emplace_back(x, *an);
  }
  if (with_a.size() < 2) {
    throw PreconditionViolated("triangle component without two A-attached vertices; graph not reduced?");
  }
  auto [u, up] = with_a[0];
  auto [v, vp] = with_a[1];
  Vertex w = 0;
  for (Vertex x : s) {
    if (x != u && x != v) w = x;
  }
  return BranchChoice{Rule::Triangle, {{"u", u}, {"v", v}, {"w", w}, {"u'", up}, {"v'", vp}}, s};
}

BranchChoice tstar_choice(const Graph& g, const std::vector<char>& in_a, const VertexSet& s) {
  const Graph h = induced_subgraph(g, s);
  std::size_t center = 0;
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (h.adjacency(i).size() == h.order() - 1) center = i;
  }
  auto partner = [&](Vertex x) {
    for (auto j : h.adjacency(h.index_of(x))) {
      if (j != center) return h.at(j);
    }
    throw PreconditionViolated("pendant triangle without partner");
  };
  std::optional<Vertex> u, v, up, vp;
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (i == center) continue;
    auto an = a_neighbor(g, in_a, h.at(i));
    if (!an) continue;
    if (!u) {
      u = h.at(i);
      up = an;
    } else if (h.at(i) != partner(*u)) {
      v = h.at(i);
      vp = an;
      break;
    }
  }
  if (!u || !v) {
    throw PreconditionViolated("triangle star without two A-attached pendant triangles; graph not reduced?");
  }
  return BranchChoice{Rule::TStar,
                      {{"u", *u}, {"v", *v}, {"u'", *up}, {"v'", *vp}, {"u''", partner(*u)}, {"v''", partner(*v)}},
                      s};
}

BranchChoice fc_choice(const Graph& g, const VertexSet& s) {
  auto path = find_path4(g, s);
  if (!path) throw PreconditionViolated("no four-vertex path in a factor-critical component");
  auto [u, v, w, x] = *path;
  auto sv = find_degree2_survivor(g, s, v);
  auto sw = find_degree2_survivor(g, s, w);
  return BranchChoice{Rule::FC,
                      {{"u", u},
                       {"v", v},
                       {"w", w},
                       {"x", x},
                       {"v'", sv.vertex},
                       {"v1'", sv.first},
                       {"v2'", sv.second},
                       {"w'", sw.vertex},
                       {"w1'", sw.first},
                       {"w2'", sw.second}},
                      s};
}

}  // namespace

BranchChoice choose_rule(const Graph& g, const GEDecomposition& ged) {
  std::vector<char> in_a(g.order(), 0);
  std::vector<char> in_c(g.order(), 0);
  for (Vertex x : ged.a) in_a[g.index_of(x)] = 1;
  for (Vertex x : ged.c) in_c[g.index_of(x)] = 1;

  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (in_c[i] && g.adjacency(i).size() >= 2) return naive_on(g, i, Rule::AC);
  }
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (!in_a[i]) continue;
    for (auto j : g.adjacency(i)) {
      if (j > i && in_a[j]) return BranchChoice{Rule::AA, {{"u", g.at(i)}, {"v", g.at(j)}}, {}};
    }
  }
  for (const auto& s : ged.d_components) {
    if (s.size() == 3 && induced_subgraph(g, s).size() == 3) return *triangle_choice(g, in_a, s);
  }
  for (const auto& s : ged.d_components) {
    if (s.size() >= 5 && is_triangle_star(induced_subgraph(g, s))) return tstar_choice(g, in_a, s);
  }
  for (const auto& s : ged.d_components) {
    if (s.size() >= 5) return fc_choice(g, s);
  }
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (g.adjacency(i).size() >= 2) return naive_on(g, i, Rule::NaiveA);
  }
  throw NoRuleApplies("no vertex of degree >= 2 left; reduction was not exhaustive");
}

std::vector<Instance> expand(const Instance& inst, const BranchChoice& choice) {
  const Graph& g = inst.graph;
  auto a = [&](std::string_view role) { return choice.actor(role); };
  std::vector<VertexSet> deletions;
  switch (choice.rule) {
    case Rule::AC:
    case Rule::NaiveA:
      deletions = {{a("v")}, {a("u")}, {a("w")}};
      break;
    case Rule::Naive:
      deletions = {{a("u")}, {a("v")}, {a("w")}};
      break;
    case Rule::AA:
    case Rule::NaiveB: {
      const Vertex uv[] = {a("u"), a("v")};
      deletions = {{a("u")}, {a("v")}, neighborhood(g, uv)};
      break;
    }
    case Rule::Triangle:
      deletions = {{a("u'")},          {a("u"), a("v'")}, {a("u"), a("v")}, {a("u"), a("w")},
                   {a("v"), a("u'")}, {a("v"), a("u")},  {a("v"), a("w")}};
      break;
    case Rule::TStar:
      deletions = {{a("u'")},           {a("u"), a("v")},    {a("u"), a("v'")},   {a("u"), a("v''")},
                   {a("u''"), a("v")}, {a("u''"), a("v'")}, {a("u''"), a("v''")}};
      break;
    case Rule::FC: {
      const Vertex vw[] = {a("v"), a("w")};
      deletions = {{a("v"), a("v'")}, {a("v"), a("v1'")}, {a("v"), a("v2'")}, {a("w"), a("w'")},
                   {a("w"), a("w1'")}, {a("w"), a("w2'")}, neighborhood(g, vw)};
      break;
    }
  }
  std::vector<Instance> children;
  children.reserve(deletions.size());
  for (const auto& del : deletions) children.push_back(Instance{delete_vertices(g, del), inst.ell});
  return children;
}

void TraceWriter::on_node(const NodeEvent& event) {
  const Graph& g = event.reduction.instance.graph;
  nlohmann::ordered_json rec;
  rec["depth"] = event.depth;
  rec["state"] = to_string(event.state);
  rec["n"] = g.order();
  rec["ell"] = event.reduction.instance.ell;
  if (event.choice != nullptr) {
    rec["rule"] = to_string(event.choice->rule);
    nlohmann::ordered_json actors = nlohmann::ordered_json::object();
    for (const auto& actor : event.choice->actors) actors[std::string(actor.role)] = g.label(actor.vertex);
    rec["actors"] = actors;
  } else {
    rec["rule"] = nullptr;
  }
  out_ << rec.dump() << '\n';
}

namespace {

class Search {
 public:
  Search(const Instance& root, std::size_t budget, bool simple, const SolveOptions& options)
      : root_(root), budget_(budget), simple_(simple), options_(options) {}

  SolveResult run() {
    SolveResult result;
    result.budget = budget_;
    if (visit(root_, 0)) {
      EdgeSet cert = path_;
      std::sort(cert.begin(), cert.end());
      if (cert.size() != root_.ell || !verify_induced_matching(root_.graph, cert)) {
        throw std::logic_error("search produced an invalid certificate");
      }
      result.answer = Answer::Yes;
      result.certificate = std::move(cert);
    } else {
      result.answer = truncated_ ? Answer::Exhausted : Answer::No;
    }
    result.stats = std::move(stats_);
    return result;
  }

 private:
  bool visit(const Instance& inst, std::size_t depth) {
    ++stats_.nodes_visited;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const Reduction red = reduce(inst, !simple_);
    for (const auto& step : red.trace.steps) ++stats_.reductions_by_rule[step.rule];
    const std::size_t mark = path_.size();
    path_.insert(path_.end(), red.harvested.begin(), red.harvested.end());

    const Terminal state = terminal_state(red.instance, depth, budget_);
    std::optional<BranchChoice> choice;
    std::vector<Instance> children;
    if (state == Terminal::Continue) {
      const Graph& g = red.instance.graph;
      if (simple_) {
        for (std::uint32_t i = 0; i < g.order() && !choice; ++i) {
          if (g.adjacency(i).size() >= 2) choice = naive_on(g, i, Rule::Naive);
        }
        if (!choice) throw NoRuleApplies("no vertex of degree >= 2 left; reduction was not exhaustive");
      } else {
        choice = choose_rule(g, decompose(g));
      }
      children = expand(red.instance, *choice);
      ++stats_.branchings_by_rule[choice->rule];
    }
    if (options_.observer != nullptr) {
      options_.observer->on_node(NodeEvent{depth, inst, red, state, choice ? &*choice : nullptr, children});
    }

    switch (state) {
      case Terminal::Yes:
        return true;
      case Terminal::Exhausted:
        truncated_ = true;
        break;
      case Terminal::No:
        break;
      case Terminal::Continue:
        for (const auto& child : children) {
          if (visit(child, depth + 1)) return true;
        }
        break;
    }
    path_.resize(mark);
    return false;
  }

  const Instance& root_;
  std::size_t budget_;
  bool simple_;
  const SolveOptions& options_;
  SearchStats stats_;
  EdgeSet path_;
  bool truncated_ = false;
};

}  // namespace

SolveResult solve_imba(const Instance& inst, std::size_t budget, const SolveOptions& options) {
  return Search(inst, budget, false, options).run();
}

SolveResult solve_auto(const Instance& inst, std::optional<std::size_t> trusted_budget,
                       const SolveOptions& options) {
  if (trusted_budget) {
    auto r = solve_imba(inst, *trusted_budget, options);
    if (r.answer == Answer::Exhausted) r.answer = Answer::No;
    return r;
  }
  SearchStats total;
  // Every branching deletes a vertex, so budget |V| never truncates.
  for (std::size_t budget = 0;; ++budget) {
    auto r = solve_imba(inst, budget, options);
    total.merge(r.stats);
    if (r.answer != Answer::Exhausted || budget >= inst.graph.order()) {
      if (r.answer == Answer::Exhausted) r.answer = Answer::No;
      r.stats = std::move(total);
      return r;
    }
  }
}

SolveResult solve_imbtg(const Instance& inst, const SolveOptions& options) {
  const std::size_t n = inst.graph.order();
  const std::size_t budget = n >= 2 * inst.ell ? n - 2 * inst.ell + 1 : 0;
  auto r = Search(inst, budget, true, options).run();
  if (r.answer == Answer::Exhausted) r.answer = Answer::No;
  return r;
}

}  // namespace imsolve
