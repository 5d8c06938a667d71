#include "imsolve/instances.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "imsolve/errors.hpp"

namespace imsolve {

namespace {

using NamedEdges = std::vector<std::pair<std::string, std::string>>;

Graph named(std::vector<std::string> labels, const NamedEdges& edges) {
  return Graph::build(std::move(labels), edges);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

Graph fixture_fig2() {
  return named({"s", "ru1", "ru2", "rb1", "rb2", "su", "lm", "lu", "lb"},
               {{"ru1", "ru2"}, {"ru1", "s"}, {"ru2", "s"}, {"ru1", "rb1"}, {"rb1", "ru2"}, {"ru1", "rb2"},
                {"rb2", "ru2"}, {"s", "su"}, {"su", "lm"}, {"lm", "s"}, {"lu", "lm"}, {"lm", "lb"}, {"lb", "lu"}});
}

Graph fixture_tstar4() {
  return named({"s", "a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"},
               {{"s", "a1"}, {"a1", "a2"}, {"a2", "s"}, {"s", "b1"}, {"b1", "b2"}, {"b2", "s"},
                {"s", "c1"}, {"c1", "c2"}, {"c2", "s"}, {"s", "d1"}, {"d1", "d2"}, {"d2", "s"}});
}

Graph fixture_paw_tail() {
  return named({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "x"}, {"x", "y"}});
}

Graph fixture_tri_a() {
  return named({"a", "b", "c", "z", "y"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"z", "a"}, {"z", "b"}, {"y", "z"}});
}

Graph fixture(std::string_view name) {
  if (name == "fig2") return fixture_fig2();
  if (name == "tstar4") return fixture_tstar4();
  if (name == "paw-tail") return fixture_paw_tail();
  if (name == "tri-a") return fixture_tri_a();
  throw InvalidSpec("unknown fixture '" + std::string(name) + "'");
}

Graph empty_graph(std::size_t n) { return Graph::numbered(n, {}); }

Graph path_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < static_cast<int>(n); ++i) e.emplace_back(i, i + 1);
  return Graph::numbered(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < static_cast<int>(n); ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(static_cast<int>(n), 1);
  return Graph::numbered(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) e.emplace_back(i, j);
  }
  return Graph::numbered(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= static_cast<int>(leaves) + 1; ++i) e.emplace_back(1, i);
  return Graph::numbered(leaves + 1, e);
}

Instance read_instance(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t ell = 0;
  std::map<std::size_t, std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "c") {
      if (tok.size() >= 4 && tok[1] == "label") {
        std::size_t idx = 0;
        if (!parse_number(tok[2], idx) || idx == 0) throw ParseError(line_no, "bad label index '" + tok[2] + "'");
        // name is everything after the index token
        auto at = line.find(tok[2], line.find("label") + 5) + tok[2].size();
        std::string name(line.substr(at));
        name.erase(0, name.find_first_not_of(' '));
        if (!names.emplace(idx, name).second) throw ParseError(line_no, "label index given twice");
      }
    } else if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (tok.size() != 5 || tok[1] != "im" || !parse_number(tok[2], n) || !parse_number(tok[3], m) ||
          !parse_number(tok[4], ell)) {
        throw ParseError(line_no, "expected 'p im <n> <m> <ell>'");
      }
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      std::size_t a = 0;
      std::size_t b = 0;
      if (tok.size() != 3 || !parse_number(tok[1], a) || !parse_number(tok[2], b)) {
        throw ParseError(line_no, "expected 'e <u> <v>'");
      }
      if (a == 0 || b == 0 || a > n || b > n) throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      edges.emplace_back(a, b);
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing 'p im' header");
  if (edges.size() != m) {
    throw InconsistentHeader("header declares " + std::to_string(m) + " edges, file has " +
                             std::to_string(edges.size()));
  }
  for (const auto& [idx, name] : names) {
    if (idx > n) throw InconsistentHeader("label index " + std::to_string(idx) + " exceeds n");
  }

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = names.find(i + 1);
    labels[i] = it != names.end() ? it->second : std::to_string(i + 1);
  }
  NamedEdges named_edges;
  named_edges.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    named_edges.emplace_back(labels[edges[k].first - 1], labels[edges[k].second - 1]);
  }
  try {
    return Instance{Graph::build(labels, named_edges), ell};
  } catch (const SelfLoop& e) {
    throw ParseError(line_no, e.what());
  } catch (const DuplicateEdge& e) {
    throw ParseError(line_no, e.what());
  } catch (const DuplicateLabel& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string write_instance(const Instance& inst) {
  const Graph& g = inst.graph;
  std::ostringstream os;
  bool plain = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.label(g.at(i)) != std::to_string(i + 1)) plain = false;
  }
  if (!plain) {
    for (std::size_t i = 0; i < g.order(); ++i) os << "c label " << (i + 1) << ' ' << g.label(g.at(i)) << '\n';
  }
  os << "p im " << g.order() << ' ' << g.size() << ' ' << inst.ell << '\n';
  for (const Edge& e : g.edges()) os << "e " << (g.index_of(e.u) + 1) << ' ' << (g.index_of(e.v) + 1) << '\n';
  return os.str();
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_instance(ss.str());
}

void save_instance(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  out << write_instance(inst);
}

namespace {

// 53 random mantissa bits in [0, 1); platform-independent unlike
// std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

}  // namespace

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      if (unit(rng) < p) e.emplace_back(i, j);
    }
  }
  return Graph::numbered(n, e);
}

Graph gen_cameron_walker(const CWSpec& spec, std::uint64_t seed) {
  if (spec.u.empty() && spec.w.empty()) throw InvalidSpec("empty core");
  if (spec.pendants.size() != spec.u.size()) throw InvalidSpec("need one pendant count per U vertex");
  if (spec.triangles.size() != spec.w.size()) throw InvalidSpec("need one triangle count per W vertex");
  for (auto c : spec.pendants) {
    if (c == 0) throw InvalidSpec("every U vertex needs at least one pendant vertex");
    if (spec.tight && c != 1) throw InvalidSpec("tight spec needs exactly one pendant per U vertex");
  }
  if (spec.tight) {
    for (auto c : spec.triangles) {
      if (c == 0) throw InvalidSpec("tight spec needs a pendant triangle on every W vertex");
    }
  }
  std::set<std::string> in_u(spec.u.begin(), spec.u.end());
  std::set<std::string> in_w(spec.w.begin(), spec.w.end());
  if (in_u.size() != spec.u.size() || in_w.size() != spec.w.size()) throw InvalidSpec("duplicate core label");
  for (const auto& x : in_u) {
    if (in_w.count(x)) throw InvalidSpec("label '" + x + "' on both sides");
  }

  NamedEdges core = spec.core_edges;
  if (core.empty() && !spec.u.empty() && !spec.w.empty()) {
    // random spanning tree across the two sides, then extra U-W edges
    std::mt19937_64 rng(seed);
    std::vector<std::string> order;
    for (std::size_t i = 1; i < spec.u.size(); ++i) order.push_back(spec.u[i]);
    for (std::size_t i = 1; i < spec.w.size(); ++i) order.push_back(spec.w[i]);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
    std::vector<std::string> placed_u{spec.u[0]};
    std::vector<std::string> placed_w{spec.w[0]};
    std::set<std::pair<std::string, std::string>> have{{spec.u[0], spec.w[0]}};
    for (const auto& x : order) {
      if (in_u.count(x)) {
        have.emplace(x, placed_w[below(rng, placed_w.size())]);
        placed_u.push_back(x);
      } else {
        have.emplace(placed_u[below(rng, placed_u.size())], x);
        placed_w.push_back(x);
      }
    }
    for (const auto& a : spec.u) {
      for (const auto& b : spec.w) {
        bool extra = unit(rng) < spec.core_p;
        if (extra) have.emplace(a, b);
      }
    }
    core.assign(have.begin(), have.end());
  }
  for (const auto& [a, b] : core) {
    bool across = (in_u.count(a) && in_w.count(b)) || (in_w.count(a) && in_u.count(b));
    if (!across) throw InvalidSpec("core edge " + a + "-" + b + " does not join U and W");
  }

  std::vector<std::string> labels(spec.u);
  labels.insert(labels.end(), spec.w.begin(), spec.w.end());
  if (!is_connected(Graph::build(labels, core))) throw InvalidSpec("core is not connected");

  NamedEdges edges = core;
  for (std::size_t i = 0; i < spec.u.size(); ++i) {
    for (std::size_t k = 1; k <= spec.pendants[i]; ++k) {
      std::string p = spec.u[i] + "p" + std::to_string(k);
      labels.push_back(p);
      edges.emplace_back(spec.u[i], p);
    }
  }
  for (std::size_t i = 0; i < spec.w.size(); ++i) {
    for (std::size_t k = 1; k <= spec.triangles[i]; ++k) {
      std::string a = spec.w[i] + "t" + std::to_string(k) + "a";
      std::string b = spec.w[i] + "t" + std::to_string(k) + "b";
      labels.push_back(a);
      labels.push_back(b);
      edges.emplace_back(spec.w[i], a);
      edges.emplace_back(spec.w[i], b);
      edges.emplace_back(a, b);
    }
  }
  try {
    return Graph::build(labels, edges);
  } catch (const DuplicateLabel& e) {
    throw InvalidSpec(e.what());
  }
}

Instance reduce_dominating_set(const Graph& g, std::size_t ell) {
  if (g.empty() || !is_connected(g)) throw Disconnected("dominating-set reduction needs a connected graph");
  if (g.size() < g.order()) throw Acyclic("dominating-set reduction needs a graph with a cycle");
  std::vector<std::string> labels;
  NamedEdges edges;
  for (Vertex v : g.vertices()) labels.push_back(g.label(v));
  for (const Edge& e : g.edges()) {
    std::string mid = g.label(e.u) + "_" + g.label(e.v);
    labels.push_back(mid);
    edges.emplace_back(g.label(e.u), mid);
    edges.emplace_back(mid, g.label(e.v));
  }
  const std::size_t target = ell >= g.order() ? 0 : g.order() - ell;
  return Instance{Graph::build(std::move(labels), edges), target};
}

Instance reduce_multicolored_is(const Graph& g, const std::vector<VertexSet>& cliques) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& part : cliques) {
    if (part.empty()) throw InvalidSpec("empty clique in partition");
    for (Vertex v : part) {
      if (!g.contains(v)) throw InvalidSpec("partition names a vertex outside the graph");
      if (seen[g.index_of(v)]++) throw InvalidSpec("vertex " + g.label(v) + " in two cliques");
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (!g.adjacent(part[i], part[j])) {
          throw NotAClique(g.label(part[i]) + " and " + g.label(part[j]) + " share a part but are not adjacent");
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidSpec("partition misses a vertex");

  std::vector<std::string> labels;
  NamedEdges edges;
  for (Vertex v : g.vertices()) labels.push_back(g.label(v));
  for (const Edge& e : g.edges()) edges.emplace_back(g.label(e.u), g.label(e.v));
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    std::string apex = "v" + std::to_string(i + 1);
    labels.push_back(apex);
    for (Vertex v : cliques[i]) edges.emplace_back(apex, g.label(v));
  }
  try {
    return Instance{Graph::build(std::move(labels), edges), cliques.size()};
  } catch (const DuplicateLabel& e) {
    throw InvalidSpec(std::string("apex label collides with an input label: ") + e.what());
  }
}

std::vector<VertexSet> greedy_clique_partition(const Graph& g) {
  std::vector<VertexSet> parts;
  std::vector<char> used(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    VertexSet part{g.at(i)};
    used[i] = 1;
    for (auto j : g.adjacency(i)) {
      if (used[j]) continue;
      bool all = std::all_of(part.begin(), part.end(), [&](Vertex x) { return g.adjacent(x, g.at(j)); });
      if (all) {
        part.push_back(g.at(j));
        used[j] = 1;
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

Graph generate(std::string_view spec, std::uint64_t seed) {
  auto tok = split_ws(spec);
  if (tok.empty()) throw InvalidSpec("empty generator spec");
  std::map<std::string, std::string> kv;
  std::set<std::string> flags;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    auto eq = tok[i].find('=');
    if (eq == std::string::npos) {
      flags.insert(tok[i]);
    } else {
      kv[tok[i].substr(0, eq)] = tok[i].substr(eq + 1);
    }
  }
  auto num = [&](const std::string& key, std::size_t fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::size_t v = 0;
    if (!parse_number(it->second, v)) throw InvalidSpec("bad value for " + key);
    return v;
  };
  auto real = [&](const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw InvalidSpec("bad value for " + key);
    }
  };
  const std::string& kind = tok[0];
  if (kind == "random") {
    double p = real("p", 0.5);
    if (p < 0.0 || p > 1.0) throw InvalidSpec("p must lie in [0, 1]");
    return gen_random(num("n", 8), p, seed);
  }
  if (kind == "cw") {
    CWSpec cw;
    for (std::size_t i = 1; i <= num("u", 1); ++i) cw.u.push_back("u" + std::to_string(i));
    for (std::size_t i = 1; i <= num("w", 1); ++i) cw.w.push_back("w" + std::to_string(i));
    cw.tight = flags.count("tight") > 0;
    cw.pendants.assign(cw.u.size(), num("pendants", 1));
    cw.triangles.assign(cw.w.size(), num("triangles", cw.tight ? 1 : 0));
    cw.core_p = real("p", 0.3);
    return gen_cameron_walker(cw, seed);
  }
  if (kind == "fixture") {
    if (flags.empty()) throw InvalidSpec("fixture needs a name");
    return fixture(*flags.begin());
  }
  if (kind == "path") return path_graph(num("n", 4));
  if (kind == "cycle") return cycle_graph(num("n", 5));
  if (kind == "complete") return complete_graph(num("n", 4));
  if (kind == "empty") return empty_graph(num("n", 0));
  if (kind == "star") return star_graph(num("k", 3));
  throw InvalidSpec("unknown generator '" + kind + "'");
}

}  // namespace imsolve
