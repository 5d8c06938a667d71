#include "imsolve/kernel.hpp"

#include <cstdint>

namespace imsolve {

std::string_view to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::IsolatedVertex: return "RR1";
    case ReductionRule::IsolatedEdge: return "RR2";
    case ReductionRule::PendantTriangle: return "RR3";
  }
  return "?";
}

std::string_view to_string(Terminal t) {
  switch (t) {
    case Terminal::Continue: return "continue";
    case Terminal::Yes: return "yes";
    case Terminal::No: return "no";
    case Terminal::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

// Mutable scratch view over the dense indices of the input graph.
class Workspace {
 public:
  explicit Workspace(const Graph& g) : g_(g), alive_(g.order(), 1), degree_(g.order()) {
    for (std::size_t i = 0; i < g.order(); ++i) degree_[i] = g.adjacency(i).size();
  }

  void remove(std::uint32_t i) {
    alive_[i] = 0;
    for (auto j : g_.adjacency(i)) {
      if (alive_[j]) --degree_[j];
    }
  }

  bool alive(std::uint32_t i) const { return alive_[i] != 0; }
  std::size_t degree(std::uint32_t i) const { return degree_[i]; }

  std::uint32_t only_neighbor(std::uint32_t i) const {
    for (auto j : g_.adjacency(i)) {
      if (alive_[j]) return j;
    }
    return i;
  }

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    for (auto j : g_.adjacency(a)) {
      if (j == b) return alive_[j] != 0;
    }
    return false;
  }

  std::vector<std::uint32_t> survivors() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < alive_.size(); ++i) {
      if (alive_[i]) out.push_back(i);
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  std::vector<std::size_t> degree_;
};

}  // namespace

Reduction reduce(const Instance& inst, bool pendant_triangles) {
  const Graph& g = inst.graph;
  const auto n = static_cast<std::uint32_t>(g.order());
  Workspace ws(g);
  Reduction out;
  std::size_t ell = inst.ell;

  while (true) {
    bool applied = false;
    for (std::uint32_t i = 0; i < n && !applied; ++i) {
      if (ws.alive(i) && ws.degree(i) == 0) {
        ws.remove(i);
        out.trace.steps.push_back({ReductionRule::IsolatedVertex, {g.at(i)}, std::nullopt});
        applied = true;
      }
    }
    for (std::uint32_t i = 0; i < n && !applied; ++i) {
      if (!ws.alive(i) || ws.degree(i) != 1) continue;
      std::uint32_t j = ws.only_neighbor(i);
      if (j < i || ws.degree(j) != 1) continue;
      ws.remove(i);
      ws.remove(j);
      ReductionStep step{ReductionRule::IsolatedEdge, {g.at(i), g.at(j)}, std::nullopt};
      if (ell > 0) {
        --ell;
        step.harvested = Edge{g.at(i), g.at(j)};
        out.harvested.push_back(*step.harvested);
      }
      out.trace.steps.push_back(std::move(step));
      applied = true;
    }
    if (!applied && pendant_triangles) {
      for (std::uint32_t v = 0; v < n && !applied; ++v) {
        if (!ws.alive(v) || ws.degree(v) < 2) continue;
        auto adj = g.adjacency(v);
        for (std::size_t a = 0; a < adj.size() && !applied; ++a) {
          if (!ws.alive(adj[a]) || ws.degree(adj[a]) != 2) continue;
          for (std::size_t b = a + 1; b < adj.size(); ++b) {
            if (!ws.alive(adj[b]) || ws.degree(adj[b]) != 2) continue;
            if (!ws.adjacent(adj[a], adj[b])) continue;
            ws.remove(v);
            out.trace.steps.push_back({ReductionRule::PendantTriangle, {g.at(v)}, std::nullopt});
            applied = true;
            break;
          }
        }
      }
    }
    if (!applied) break;
  }

  if (out.trace.steps.empty()) {
    out.instance = inst;
  } else {
    auto keep = ws.survivors();
    out.instance = Instance{g.induced_by_index(keep), ell};
  }
  return out;
}

Terminal terminal_state(const Instance& inst, std::size_t depth, std::size_t budget) {
  if (inst.ell == 0) return Terminal::Yes;
  if (inst.graph.order() < 2 * inst.ell) return Terminal::No;
  if (depth >= budget) return Terminal::Exhausted;
  return Terminal::Continue;
}

}  // namespace imsolve
