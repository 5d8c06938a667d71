#include <doctest.h>

#include "helpers.hpp"
#include "imsolve/errors.hpp"
#include "imsolve/instances.hpp"
#include "imsolve/matching.hpp"
#include "imsolve/oracle.hpp"

using namespace imsolve;
using imsolve::testing::vs;

namespace {

Graph tight_five() {
  return Graph::build({"u1", "w1", "p", "t1", "t2"}, std::vector<std::pair<std::string, std::string>>{
                                                         {"u1", "w1"}, {"u1", "p"}, {"w1", "t1"}, {"w1", "t2"}, {"t1", "t2"}});
}

// Exhaustive induced matching over all edge subsets, for tiny graphs.
std::size_t subset_im(const Graph& g) {
  auto edges = g.edges();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    EdgeSet pick;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1) pick.push_back(edges[i]);
    }
    if (pick.size() > best && verify_induced_matching(g, pick)) best = pick.size();
  }
  return best;
}

}  // namespace

TEST_CASE("brute_im examples") {
  CHECK(brute_im(cycle_graph(5)).size == 1);
  auto p5 = brute_im(path_graph(5));
  CHECK(p5.size == 2);
  CHECK(verify_induced_matching(path_graph(5), p5.witness));
  CHECK(brute_im(path_graph(2)).size == 1);
  CHECK(brute_im(Graph{}).size == 0);
}

TEST_CASE("brute_im matches edge-subset enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = gen_random(3 + seed % 6, 0.45, seed);
    if (g.size() > 14) continue;
    auto r = brute_im(g);
    CHECK(r.size == subset_im(g));
    CHECK(r.witness.size() == r.size);
    CHECK(verify_induced_matching(g, r.witness));
  }
}

TEST_CASE("other oracles") {
  CHECK(brute_is(fixture_fig2()) == 4);
  CHECK(brute_mm(fixture_fig2()) == 4);
  CHECK(brute_is(complete_graph(4)) == 1);
  CHECK(brute_vc(complete_graph(4)) == 3);
  CHECK(brute_ds(complete_graph(3)) == 1);
  CHECK(brute_ds(path_graph(7)) == 3);
  CHECK(brute_ds(empty_graph(4)) == 4);
  CHECK(brute_ds(cycle_graph(6)) == 2);
  CHECK(brute_vc(Graph{}) == 0);
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(brute_im(empty_graph(17)), TooLarge);
  CHECK_NOTHROW(brute_im(empty_graph(17), 20));
  CHECK_THROWS_AS(brute_is(empty_graph(65), 100), TooLarge);
  CHECK_THROWS_AS(parameters(empty_graph(17), 0), TooLarge);
}

TEST_CASE("parameters") {
  auto p = parameters(fixture_paw_tail(), 2);
  CHECK(p.mm == 2);
  CHECK(p.is == 2);
  CHECK(p.im == 2);
  CHECK(p.k_avg.twice == 0);

  auto c = parameters(cycle_graph(5), 1);
  CHECK(c.mm == 2);
  CHECK(c.is == 2);
  CHECK(c.im == 1);
  CHECK(c.k_avg.twice == 2);
  CHECK(c.k_avg.str() == "1");
  CHECK(c.k_trivial.str() == "1.5");

  auto e = parameters(Graph{}, 0);
  CHECK(e.mm == 0);
  CHECK(e.is == 0);
  CHECK(e.im == 0);
  CHECK(e.vc == 0);
  CHECK(e.k_trivial.twice == 0);
  CHECK(e.k_avg.twice == 0);

  CHECK(HalfInteger{-1}.str() == "-0.5");
  CHECK(HalfInteger{-3}.str() == "-1.5");
  CHECK(HalfInteger{7}.value() == 3.5);
}

TEST_CASE("parameter chain") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = gen_random(1 + seed % 12, 0.3, seed);
    auto p = parameters(g, 0);
    CHECK(p.im <= p.mm);
    CHECK(p.im <= p.is);
    CHECK(2 * p.im <= p.mm + p.is);
    CHECK(p.mm + p.is <= p.vc + p.is);
    CHECK(p.vc + p.is <= p.n);
    CHECK(p.vc + p.is == p.n);
    CHECK(p.mm == matching_number(g));
  }
}

TEST_CASE("recognize_cameron_walker") {
  CHECK(recognize_cameron_walker(star_graph(5)).kind == StructureKind::Star);
  CHECK(recognize_cameron_walker(fixture_tstar4()).kind == StructureKind::TriangleStar);
  CHECK(recognize_cameron_walker(cycle_graph(5)).kind == StructureKind::NotCameronWalker);
  CHECK(recognize_cameron_walker(empty_graph(1)).kind == StructureKind::Star);
  CHECK_THROWS_AS(recognize_cameron_walker(empty_graph(2)), Disconnected);
  CHECK_THROWS_AS(recognize_cameron_walker(Graph{}), Disconnected);

  Graph t = tight_five();
  auto cls = recognize_cameron_walker(t);
  CHECK(cls.kind == StructureKind::PendantBipartite);
  CHECK(cls.u == vs(t, {"u1"}));
  CHECK(cls.w == vs(t, {"w1"}));
  CHECK(cls.pendants == std::vector<std::size_t>{1});
  CHECK(cls.triangles == std::vector<std::size_t>{1});
}

TEST_CASE("classify_tight") {
  CHECK(classify_tight(path_graph(2)).kind == StructureKind::IsolatedEdge);

  Graph ts = fixture_tstar4();
  CHECK(classify_tight(ts).kind == StructureKind::TriangleStar);
  CHECK(brute_mm(ts) == 4);
  CHECK(brute_is(ts) == 4);
  CHECK(brute_im(ts).size == 4);

  Graph t = tight_five();
  auto cls = classify_tight(t);
  CHECK(cls.kind == StructureKind::TightPendantBipartite);
  CHECK(cls.u == vs(t, {"u1"}));
  CHECK(cls.w == vs(t, {"w1"}));
  CHECK(brute_mm(t) == 2);
  CHECK(brute_is(t) == 2);
  CHECK(brute_im(t).size == 2);

  CHECK(classify_tight(star_graph(3)).kind == StructureKind::NotTight);
  CHECK(classify_tight(cycle_graph(5)).kind == StructureKind::NotTight);
  CHECK(to_string(StructureKind::TightPendantBipartite) == "tight-pendant-bipartite");
}

TEST_CASE("structure recognizers agree with the oracles on random connected graphs") {
  std::size_t tested = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    Graph g = gen_random(2 + seed % 8, 0.25 + 0.05 * static_cast<double>(seed % 5), seed);
    if (!is_connected(g)) continue;
    auto p = parameters(g, 0);
    CHECK((recognize_cameron_walker(g).kind != StructureKind::NotCameronWalker) == (p.mm == p.im));
    CHECK((classify_tight(g).kind != StructureKind::NotTight) == (p.mm + p.is == 2 * p.im));
    ++tested;
  }
  CHECK(tested > 500);
}
