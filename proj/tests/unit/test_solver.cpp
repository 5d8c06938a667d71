#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "imsolve/errors.hpp"
#include "imsolve/gallai_edmonds.hpp"
#include "imsolve/instances.hpp"
#include "imsolve/oracle.hpp"
#include "imsolve/solver.hpp"

using namespace imsolve;
using imsolve::testing::edge;
using imsolve::testing::names;
using imsolve::testing::vs;

using Names = std::vector<std::string>;

namespace {

Graph bowtie() {
  return Graph::build({"a", "b", "c", "d", "e"},
                      std::vector<std::pair<std::string, std::string>>{
                          {"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
}

bool is_path(const Graph& g, const std::array<Vertex, 4>& p) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
    }
  }
  return g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]);
}

}  // namespace

TEST_CASE("is_triangle_star") {
  CHECK(is_triangle_star(complete_graph(3)));
  CHECK(is_triangle_star(bowtie()));
  CHECK(is_triangle_star(fixture_tstar4()));
  CHECK_FALSE(is_triangle_star(cycle_graph(5)));
  CHECK_FALSE(is_triangle_star(complete_graph(5)));
  CHECK_FALSE(is_triangle_star(star_graph(4)));
  CHECK_FALSE(is_triangle_star(empty_graph(1)));
}

TEST_CASE("find_path4") {
  Graph c5 = cycle_graph(5);
  auto p = find_path4(c5, c5.vertices());
  REQUIRE(p.has_value());
  CHECK(is_path(c5, *p));

  Graph star = star_graph(4);
  CHECK_FALSE(find_path4(star, star.vertices()).has_value());

  Graph p4 = path_graph(4);
  auto q = find_path4(p4, p4.vertices());
  REQUIRE(q.has_value());
  Names got{p4.label((*q)[0]), p4.label((*q)[1]), p4.label((*q)[2]), p4.label((*q)[3])};
  CHECK((got == Names{"1", "2", "3", "4"} || got == Names{"4", "3", "2", "1"}));

  CHECK_FALSE(find_path4(complete_graph(3), complete_graph(3).vertices()).has_value());

  // every connected non-star graph on >= 4 vertices has one
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = gen_random(4 + seed % 6, 0.4, seed);
    if (!is_connected(g)) continue;
    auto path = find_path4(g, g.vertices());
    bool star_like = g.size() == g.order() - 1 &&
                     std::any_of(g.vertices().begin(), g.vertices().end(),
                                 [&](Vertex v) { return g.degree(v) == g.order() - 1; });
    CHECK(path.has_value() == !star_like);
    if (path) CHECK(is_path(g, *path));
  }
}

TEST_CASE("find_degree2_survivor") {
  Graph c5 = cycle_graph(5);
  auto s = find_degree2_survivor(c5, c5.vertices(), c5.vertex("1"));
  CHECK(c5.label(s.vertex) == "3");
  CHECK(c5.label(s.first) == "2");
  CHECK(c5.label(s.second) == "4");

  Graph c7 = cycle_graph(7);
  CHECK(c7.label(find_degree2_survivor(c7, c7.vertices(), c7.vertex("1")).vertex) == "3");

  Graph b = bowtie();
  for (Vertex v : b.vertices()) CHECK_THROWS_AS(find_degree2_survivor(b, b.vertices(), v), PreconditionViolated);
}

TEST_CASE("choose_rule examples") {
  Graph k4 = complete_graph(4);
  auto ck = choose_rule(k4, decompose(k4));
  CHECK(ck.rule == Rule::AC);
  CHECK(k4.label(ck.actor("v")) == "1");

  Graph tri = fixture_tri_a();
  auto ct = choose_rule(tri, decompose(tri));
  CHECK(ct.rule == Rule::Triangle);
  CHECK(ct.component == vs(tri, {"a", "b", "c"}));
  CHECK(tri.label(ct.actor("u")) == "a");
  CHECK(tri.label(ct.actor("v")) == "b");
  CHECK(tri.label(ct.actor("w")) == "c");
  CHECK(tri.label(ct.actor("u'")) == "z");
  CHECK(tri.label(ct.actor("v'")) == "z");

  Graph c5 = cycle_graph(5);
  auto cc = choose_rule(c5, decompose(c5));
  CHECK(cc.rule == Rule::FC);
  CHECK(cc.component == c5.vertices());
  CHECK(is_path(c5, {cc.actor("u"), cc.actor("v"), cc.actor("w"), cc.actor("x")}));
  CHECK(cc.actor("v'") != cc.actor("v"));
  CHECK(cc.actor("w'") != cc.actor("w"));

  CHECK_THROWS_AS(choose_rule(path_graph(2), decompose(path_graph(2))), NoRuleApplies);
}

TEST_CASE("choose_rule picks AA and TSTAR") {
  // two adjacent A-vertices, each carrying two leaves
  Graph aa = Graph::build({"p", "q", "p1", "p2", "q1", "q2"},
                          std::vector<std::pair<std::string, std::string>>{
                              {"p", "q"}, {"p", "p1"}, {"p", "p2"}, {"q", "q1"}, {"q", "q2"}});
  auto ca = choose_rule(aa, decompose(aa));
  CHECK(ca.rule == Rule::AA);
  CHECK(aa.label(ca.actor("u")) == "p");
  CHECK(aa.label(ca.actor("v")) == "q");
  auto kids = expand(Instance{aa, 2}, ca);
  REQUIRE(kids.size() == 3);
  CHECK(kids[2].graph.order() == 2);  // only p and q survive G - N({p, q})

  // bowtie whose four outer vertices hang off two A-vertices with leaves
  Graph ts = Graph::build({"a", "b", "c", "d", "e", "x", "y", "x1", "x2", "y1", "y2"},
                          std::vector<std::pair<std::string, std::string>>{{"a", "b"},
                                                                          {"a", "c"},
                                                                          {"b", "c"},
                                                                          {"c", "d"},
                                                                          {"c", "e"},
                                                                          {"d", "e"},
                                                                          {"a", "x"},
                                                                          {"b", "x"},
                                                                          {"d", "y"},
                                                                          {"e", "y"},
                                                                          {"x", "x1"},
                                                                          {"x", "x2"},
                                                                          {"y", "y1"},
                                                                          {"y", "y2"}});
  auto ged = decompose(ts);
  CHECK(ged.a == vs(ts, {"x", "y"}));
  auto ct = choose_rule(ts, ged);
  CHECK(ct.rule == Rule::TStar);
  CHECK(ts.label(ct.actor("u")) == "a");
  CHECK(ts.label(ct.actor("v")) == "d");
  CHECK(ts.label(ct.actor("u''")) == "b");
  CHECK(ts.label(ct.actor("v''")) == "e");
  CHECK(ts.label(ct.actor("u'")) == "x");
  CHECK(ts.label(ct.actor("v'")) == "y");
  CHECK_FALSE(ts.adjacent(ct.actor("u"), ct.actor("v")));
  CHECK(expand(Instance{ts, 3}, ct).size() == 7);
}

TEST_CASE("expand examples") {
  Graph k4 = complete_graph(4);
  auto kids = expand(Instance{k4, 1}, choose_rule(k4, decompose(k4)));
  REQUIRE(kids.size() == 3);
  for (const auto& k : kids) {
    CHECK(k.graph.order() == 3);
    CHECK(k.graph.size() == 3);
    CHECK(k.ell == 1);
  }

  Graph tri = fixture_tri_a();
  auto tk = expand(Instance{tri, 2}, choose_rule(tri, decompose(tri)));
  REQUIRE(tk.size() == 7);
  const std::vector<std::vector<const char*>> removed = {{"z"},      {"a", "z"}, {"a", "b"}, {"a", "c"},
                                                         {"b", "z"}, {"b", "a"}, {"b", "c"}};
  for (std::size_t i = 0; i < 7; ++i) {
    VertexSet del;
    for (const char* l : removed[i]) del.push_back(tri.vertex(l));
    std::sort(del.begin(), del.end());
    CHECK(tk[i].graph == delete_vertices(tri, del));
  }

  // FC on C5 with the path (1, 2, 3, 4) given explicitly
  Graph c5 = cycle_graph(5);
  auto s2 = find_degree2_survivor(c5, c5.vertices(), c5.vertex("2"));
  auto s3 = find_degree2_survivor(c5, c5.vertices(), c5.vertex("3"));
  BranchChoice fc{Rule::FC,
                  {{"u", c5.vertex("1")},
                   {"v", c5.vertex("2")},
                   {"w", c5.vertex("3")},
                   {"x", c5.vertex("4")},
                   {"v'", s2.vertex},
                   {"v1'", s2.first},
                   {"v2'", s2.second},
                   {"w'", s3.vertex},
                   {"w1'", s3.first},
                   {"w2'", s3.second}},
                  c5.vertices()};
  auto ck = expand(Instance{c5, 2}, fc);
  REQUIRE(ck.size() == 7);
  CHECK(names(ck[6].graph) == Names{"2", "3", "5"});
  CHECK(ck[6].graph.size() == 1);
  CHECK(ck[6].graph.adjacent(c5.vertex("2"), c5.vertex("3")));
}

TEST_CASE("solve_imba examples") {
  Graph paw = fixture_paw_tail();
  auto r = solve_imba(Instance{paw, 2}, 0);
  CHECK(r.answer == Answer::Yes);
  CHECK(r.certificate == EdgeSet{edge(paw, "b", "c"), edge(paw, "x", "y")});

  CHECK(solve_imba(Instance{cycle_graph(5), 2}, 0).answer == Answer::Exhausted);

  auto e = solve_imba(Instance{Graph{}, 0}, 0);
  CHECK(e.answer == Answer::Yes);
  CHECK(e.certificate.empty());
}

TEST_CASE("solve_auto examples") {
  Graph c5 = cycle_graph(5);
  auto one = solve_auto(Instance{c5, 1});
  CHECK(one.answer == Answer::Yes);
  CHECK(one.certificate.size() == 1);
  CHECK(solve_auto(Instance{c5, 2}).answer == Answer::No);

  Graph fig = fixture_fig2();
  auto f = solve_auto(Instance{fig, 2});
  CHECK(f.answer == Answer::Yes);
  CHECK(f.certificate.size() == 2);
  CHECK(verify_induced_matching(fig, f.certificate));

  // trusted budget from the oracle parameter
  auto k = parameters(c5, 2).k_avg;
  CHECK(k.twice == 0);
  CHECK(solve_auto(Instance{c5, 2}, static_cast<std::size_t>(k.twice)).answer == Answer::No);
}

TEST_CASE("solve_imbtg examples") {
  CHECK(solve_imbtg(Instance{fixture_paw_tail(), 2}).answer == Answer::Yes);
  CHECK(solve_imbtg(Instance{cycle_graph(5), 2}).answer == Answer::No);
  auto r = solve_imbtg(Instance{path_graph(2), 1});
  CHECK(r.answer == Answer::Yes);
  CHECK(r.certificate.size() == 1);
}

TEST_CASE("solvers agree with the oracle on random graphs") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const std::size_t n = 2 + seed % 9;
    Graph g = gen_random(n, 0.2 + 0.05 * static_cast<double>(seed % 10), seed);
    const auto im = brute_im(g).size;
    for (std::size_t ell = 0; ell <= (n + 1) / 2; ++ell) {
      Instance in{g, ell};
      auto a = solve_auto(in);
      auto b = solve_imbtg(in);
      const bool yes = im >= ell;
      CHECK((a.answer == Answer::Yes) == yes);
      CHECK((b.answer == Answer::Yes) == yes);
      CHECK(a.answer != Answer::Exhausted);
      CHECK(b.answer != Answer::Exhausted);
      if (a.answer == Answer::Yes) {
        CHECK(a.certificate.size() == ell);
        CHECK(verify_induced_matching(g, a.certificate));
      }
    }
  }
}

TEST_CASE("trace writer emits one JSON record per node") {
  std::ostringstream os;
  TraceWriter trace(os);
  SolveOptions opts;
  opts.observer = &trace;
  auto r = solve_imba(Instance{fixture_tri_a(), 1}, 4, opts);
  CHECK(r.answer == Answer::Yes);
  std::istringstream in(os.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("depth"));
    CHECK(j.contains("rule"));
    CHECK(j.contains("n"));
    CHECK(j.contains("ell"));
    ++lines;
  }
  CHECK(lines == r.stats.nodes_visited);
  auto first = nlohmann::json::parse(os.str().substr(0, os.str().find('\n')));
  CHECK(first["rule"] == "TRIANGLE");
  CHECK(first["actors"]["u"] == "a");
}

TEST_CASE("rule names") {
  CHECK(to_string(Rule::NaiveA) == "NAIVE-A");
  CHECK(to_string(Rule::TStar) == "TSTAR");
  CHECK(to_string(Answer::Exhausted) == "exhausted");
}
