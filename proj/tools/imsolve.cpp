// imsolve: command-line front end.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "imsolve/errors.hpp"
#include "imsolve/gallai_edmonds.hpp"
#include "imsolve/instances.hpp"
#include "imsolve/oracle.hpp"
#include "imsolve/solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace imsolve;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct RunConfig {
  std::string input;
  std::string generator;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> budget;
  bool auto_budget = false;
  bool oracle_k = false;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultOracleCap;
  std::string trace;
  std::string output;
  std::string cliques;
  bool json = false;
  bool answer_status = false;
  bool timing = false;
};

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load(const RunConfig& cfg) {
  Instance inst;
  if (!cfg.generator.empty()) {
    inst.graph = generate(cfg.generator, cfg.seed);
  } else if (cfg.input.empty()) {
    throw UsageError("no input: give a path, '-' for stdin, or --gen SPEC");
  } else if (cfg.input == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    inst = read_instance(text);
  } else {
    if (!fs::exists(cfg.input)) throw UsageError("no such file: " + cfg.input);
    inst = load_instance(cfg.input);
  }
  if (cfg.ell) inst.ell = *cfg.ell;
  return inst;
}

json labels(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

json edges_json(const Graph& g, const EdgeSet& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back(json::array({g.label(e.u), g.label(e.v)}));
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string set_text(const Graph& g, const VertexSet& s) {
  std::vector<std::string> parts;
  for (Vertex v : s) parts.push_back(g.label(v));
  return "{" + join(parts, ", ") + "}";
}

json stats_json(const SearchStats& st) {
  json by_rule = json::object();
  for (auto [rule, count] : st.branchings_by_rule) by_rule[std::string(to_string(rule))] = count;
  json by_red = json::object();
  for (auto [rule, count] : st.reductions_by_rule) by_red[std::string(to_string(rule))] = count;
  return json{{"nodes_visited", st.nodes_visited},
              {"max_depth", st.max_depth},
              {"branchings_by_rule", by_rule},
              {"reductions_by_rule", by_red}};
}

json instance_json(const Instance& inst) {
  return json{{"n", inst.graph.order()}, {"m", inst.graph.size()}, {"ell", inst.ell}};
}

void emit(const RunConfig& cfg, const json& doc, const std::string& human) {
  if (cfg.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << human;
  }
}

// Writes instance text to --output or stdout.
void emit_instance(const RunConfig& cfg, const Instance& inst) {
  if (cfg.output.empty()) {
    std::cout << write_instance(inst);
  } else {
    save_instance(cfg.output, inst);
  }
}

int answer_exit(const RunConfig& cfg, Answer a, bool fixed_budget) {
  if (a == Answer::Exhausted && fixed_budget) return kExitUndecided;
  if (cfg.answer_status) return a == Answer::Yes ? 0 : 1;
  return 0;
}

std::string human_result(const Graph& g, const SolveResult& r) {
  std::ostringstream os;
  os << "answer: " << to_string(r.answer) << '\n';
  if (r.answer == Answer::Yes) {
    std::vector<std::string> parts;
    for (const Edge& e : r.certificate) parts.push_back(g.label(e));
    os << "certificate: [" << join(parts, ", ") << "]\n";
  }
  os << "budget: " << r.budget << '\n';
  os << "nodes_visited: " << r.stats.nodes_visited << '\n';
  os << "max_depth: " << r.stats.max_depth << '\n';
  for (auto [rule, count] : r.stats.branchings_by_rule) os << "branchings " << to_string(rule) << ": " << count << '\n';
  for (auto [rule, count] : r.stats.reductions_by_rule) os << "reductions " << to_string(rule) << ": " << count << '\n';
  return os.str();
}

int run_solve(const RunConfig& cfg, bool simple) {
  const Instance inst = load(cfg);
  std::ofstream trace_file;
  std::optional<TraceWriter> trace;
  SolveOptions opts;
  if (!cfg.trace.empty()) {
    trace_file.open(cfg.trace);
    if (!trace_file) throw UsageError("cannot write trace file " + cfg.trace);
    trace.emplace(trace_file);
    opts.observer = &*trace;
  }

  SolveResult r;
  std::string mode = "auto";
  bool fixed = false;
  if (simple) {
    mode = "simple";
    r = solve_imbtg(inst, opts);
  } else if (cfg.budget) {
    mode = "fixed";
    fixed = true;
    r = solve_imba(inst, *cfg.budget, opts);
  } else if (cfg.oracle_k) {
    mode = "oracle-k";
    auto k = parameters(inst.graph, inst.ell, cfg.cap).k_avg;
    r = solve_auto(inst, static_cast<std::size_t>(std::max<std::int64_t>(0, k.twice)), opts);
  } else {
    r = solve_auto(inst, std::nullopt, opts);
  }

  json doc{{"command", simple ? "solve-tg" : "solve"},
           {"instance", instance_json(inst)},
           {"budget_mode", mode},
           {"budget", r.budget},
           {"answer", to_string(r.answer)},
           {"certificate", edges_json(inst.graph, r.certificate)},
           {"stats", stats_json(r.stats)}};
  emit(cfg, doc, human_result(inst.graph, r));
  return answer_exit(cfg, r.answer, fixed);
}

int run_oracle(const RunConfig& cfg) {
  const Instance inst = load(cfg);
  auto p = parameters(inst.graph, inst.ell, cfg.cap);
  json doc{{"command", "oracle"},
           {"instance", instance_json(inst)},
           {"mm", p.mm},
           {"is", p.is},
           {"im", p.im},
           {"vc", p.vc},
           {"k_trivial", p.k_trivial.value()},
           {"k_mm", p.k_mm},
           {"k_is", p.k_is},
           {"k_avg", p.k_avg.value()}};
  std::ostringstream os;
  os << "n=" << p.n << " ell=" << p.ell << '\n'
     << "mm=" << p.mm << " is=" << p.is << " im=" << p.im << " vc=" << p.vc << '\n'
     << "k_trivial=" << p.k_trivial.str() << " k_mm=" << p.k_mm << " k_is=" << p.k_is << " k_avg=" << p.k_avg.str()
     << '\n';
  emit(cfg, doc, os.str());
  return 0;
}

int run_decompose(const RunConfig& cfg) {
  const Instance inst = load(cfg);
  const Graph& g = inst.graph;
  auto d = decompose(g);
  json comps = json::array();
  for (const auto& c : d.d_components) comps.push_back(labels(g, c));
  json doc{{"command", "decompose"},
           {"instance", instance_json(inst)},
           {"D", labels(g, d.d)},
           {"A", labels(g, d.a)},
           {"C", labels(g, d.c)},
           {"d_components", comps}};
  std::ostringstream os;
  os << "D: " << set_text(g, d.d) << "\nA: " << set_text(g, d.a) << "\nC: " << set_text(g, d.c) << '\n';
  for (const auto& c : d.d_components) os << "D-component: " << set_text(g, c) << '\n';
  try {
    auto report = audit(g, d);
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      os << "audit " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << '\n';
    }
    doc["audit"] = json{{"passed", report.passed()}, {"checks", checks}};
  } catch (const AuditTooLarge& e) {
    doc["audit"] = nullptr;
    os << "audit skipped: " << e.what() << '\n';
  }
  emit(cfg, doc, os.str());
  return 0;
}

json structure_json(const Graph& g, const StructureClass& c) {
  json out{{"class", to_string(c.kind)}};
  if (!c.u.empty() || !c.w.empty()) {
    out["U"] = labels(g, c.u);
    out["W"] = labels(g, c.w);
    out["pendants"] = c.pendants;
    out["triangles"] = c.triangles;
  }
  return out;
}

int run_classify(const RunConfig& cfg) {
  const Instance inst = load(cfg);
  const Graph& g = inst.graph;
  auto cw = recognize_cameron_walker(g);
  auto tight = classify_tight(g);
  json doc{{"command", "classify"},
           {"instance", instance_json(inst)},
           {"cameron_walker", structure_json(g, cw)},
           {"tight", structure_json(g, tight)}};
  std::ostringstream os;
  os << "cameron-walker: " << to_string(cw.kind) << '\n' << "tight: " << to_string(tight.kind) << '\n';
  if (!tight.u.empty() || !tight.w.empty()) os << "U: " << set_text(g, tight.u) << "\nW: " << set_text(g, tight.w) << '\n';
  emit(cfg, doc, os.str());
  return 0;
}

int run_gen(const RunConfig& cfg) {
  if (cfg.input.empty() && cfg.generator.empty()) throw UsageError("gen needs a generator spec");
  Instance inst{generate(cfg.generator.empty() ? cfg.input : cfg.generator, cfg.seed), cfg.ell.value_or(0)};
  emit_instance(cfg, inst);
  return 0;
}

int run_reduce_ds(const RunConfig& cfg) {
  const Instance inst = load(cfg);
  emit_instance(cfg, reduce_dominating_set(inst.graph, inst.ell));
  return 0;
}

// "a,b;c,d" -> [{a, b}, {c, d}]
std::vector<VertexSet> parse_cliques(const Graph& g, const std::string& text) {
  std::vector<VertexSet> parts;
  std::stringstream outer(text);
  std::string part;
  while (std::getline(outer, part, ';')) {
    VertexSet s;
    std::stringstream inner(part);
    std::string name;
    while (std::getline(inner, name, ',')) {
      if (!name.empty()) s.push_back(g.vertex(name));
    }
    std::sort(s.begin(), s.end());
    parts.push_back(std::move(s));
  }
  return parts;
}

int run_reduce_mis(const RunConfig& cfg) {
  const Instance inst = load(cfg);
  auto parts = cfg.cliques.empty() ? greedy_clique_partition(inst.graph) : parse_cliques(inst.graph, cfg.cliques);
  emit_instance(cfg, reduce_multicolored_is(inst.graph, parts));
  return 0;
}

int run_bench(const RunConfig& cfg) {
  if (cfg.input.empty() || !fs::is_directory(cfg.input)) throw UsageError("bench needs a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".im") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  json rows = json::array();
  std::ostringstream os;
  os << "instance                  n    m  ell  answer     tg       nodes  depth";
  if (cfg.timing) os << "    ms";
  os << '\n';
  for (const auto& path : files) {
    Instance inst = load_instance(path);
    if (cfg.ell) inst.ell = *cfg.ell;
    auto start = std::chrono::steady_clock::now();
    auto r = cfg.budget ? solve_imba(inst, *cfg.budget) : solve_auto(inst);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    auto tg = solve_imbtg(inst);
    json row{{"instance", path.filename().string()},
             {"n", inst.graph.order()},
             {"m", inst.graph.size()},
             {"ell", inst.ell},
             {"answer", to_string(r.answer)},
             {"imbtg_answer", to_string(tg.answer)},
             {"budget", r.budget},
             {"stats", stats_json(r.stats)}};
    if (cfg.timing) row["ms"] = ms;
    rows.push_back(row);
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %4zu %4zu %4zu  %-9s  %-9s %6zu %5zu", path.filename().string().c_str(),
                  inst.graph.order(), inst.graph.size(), inst.ell, std::string(to_string(r.answer)).c_str(),
                  std::string(to_string(tg.answer)).c_str(), r.stats.nodes_visited, r.stats.max_depth);
    os << line;
    if (cfg.timing) os << ' ' << std::fixed << std::setprecision(1) << std::setw(6) << ms;
    os << '\n';
  }
  emit(cfg, json{{"command", "bench"}, {"instances", rows}}, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced matching toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool positional = true) {
    if (positional) sub->add_option("path", cfg.input, "instance file ('-' for stdin)");
    sub->add_option("--gen", cfg.generator, "inline generator spec instead of a file");
    sub->add_option("--ell", cfg.ell, "override the target size");
    sub->add_option("--seed", cfg.seed, "seed for generators");
    sub->add_option("--cap", cfg.cap, "vertex cap of the exhaustive oracles")->check(CLI::Range(1, 64));
    sub->add_flag("--json", cfg.json, "structured output");
  };

  auto* solve = app.add_subcommand("solve", "branch-and-reduce solver");
  common(solve);
  auto* budget = solve->add_option("--budget", cfg.budget, "fixed branching budget (twice k)");
  auto* auto_flag = solve->add_flag("--auto", cfg.auto_budget, "iterative deepening (default)");
  auto* oracle_k = solve->add_flag("--oracle-k", cfg.oracle_k, "budget from exhaustive parameter computation");
  budget->excludes(auto_flag)->excludes(oracle_k);
  auto_flag->excludes(oracle_k);
  solve->add_option("--trace", cfg.trace, "write one JSON line per search node");
  solve->add_flag("--answer-status", cfg.answer_status, "exit 0 for yes, 1 for no");

  auto* solve_tg = app.add_subcommand("solve-tg", "simple naive-branching solver");
  common(solve_tg);
  solve_tg->add_option("--trace", cfg.trace, "write one JSON line per search node");
  solve_tg->add_flag("--answer-status", cfg.answer_status, "exit 0 for yes, 1 for no");

  auto* oracle = app.add_subcommand("oracle", "exact parameters by exhaustive search");
  common(oracle);
  auto* dec = app.add_subcommand("decompose", "Gallai-Edmonds decomposition and audit");
  common(dec);
  auto* classify = app.add_subcommand("classify", "Cameron-Walker and tight-shape recognition");
  common(classify);

  auto* gen = app.add_subcommand("gen", "emit a generated instance");
  gen->add_option("spec", cfg.input, "generator spec, e.g. \"random n=8 p=0.5\"");
  common(gen, false);
  gen->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  auto* rds = app.add_subcommand("reduce-ds", "dominating set to induced matching");
  common(rds);
  rds->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  auto* rmis = app.add_subcommand("reduce-mis", "multicolored independent set to induced matching");
  common(rmis);
  rmis->add_option("--cliques", cfg.cliques, "clique partition \"a,b;c,d\" (default: greedy)");
  rmis->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  auto* bench = app.add_subcommand("bench", "solve every .im file in a directory");
  bench->add_option("path", cfg.input, "directory")->required();
  bench->add_option("--ell", cfg.ell, "override every target size");
  bench->add_option("--budget", cfg.budget, "fixed branching budget");
  bench->add_flag("--json", cfg.json, "structured output");
  bench->add_flag("--timing", cfg.timing, "include wall time (output no longer reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) return run_solve(cfg, false);
    if (*solve_tg) return run_solve(cfg, true);
    if (*oracle) return run_oracle(cfg);
    if (*dec) return run_decompose(cfg);
    if (*classify) return run_classify(cfg);
    if (*gen) return run_gen(cfg);
    if (*rds) return run_reduce_ds(cfg);
    if (*rmis) return run_reduce_mis(cfg);
    if (*bench) return run_bench(cfg);
  } catch (const TooLarge& e) {
    std::cerr << "imsolve: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const Error& e) {
    std::cerr << "imsolve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "imsolve: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
