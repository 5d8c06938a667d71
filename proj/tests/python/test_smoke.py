import os
from pathlib import Path

import pytest

import imsolve

FIXTURES = Path(os.environ.get("IMSOLVE_FIXTURES", "data/fixtures"))


def cycle(n):
    return imsolve.Graph.from_edges([(str(i), str(i % n + 1)) for i in range(1, n + 1)])


def test_graph_basics():
    g = imsolve.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.order == 3 and g.size == 2
    assert g.neighbors("b") == ["a", "c"]
    assert "a" in g
    h = g.delete_vertices(["b"])
    assert h.edges == []
    assert h.vertices == ["a", "c"]
    with pytest.raises(imsolve.Error):
        imsolve.Graph(["a"], [("a", "a")])


def test_matching_and_decomposition():
    fig = imsolve.fixture("fig2")
    assert imsolve.matching_number(fig) == 4
    assert len(imsolve.maximum_matching(fig)) == 4
    d = imsolve.decompose(fig)
    assert d["A"] == ["ru1", "ru2"]
    assert all(imsolve.audit(fig).values())
    assert imsolve.is_factor_critical(cycle(5))
    assert len(imsolve.konig_cover(cycle(6))) == 3


def test_reduce_and_solve():
    paw = imsolve.fixture("paw-tail")
    kernel, ell, harvested, steps = imsolve.reduce(paw, 2)
    assert kernel.order == 0 and ell == 0
    assert sorted(harvested) == [("b", "c"), ("x", "y")]
    assert [s["rule"] for s in steps] == ["RR3", "RR2", "RR2"]

    r = imsolve.solve(paw, 2)
    assert r["answer"] == "yes"
    assert imsolve.verify_induced_matching(paw, r["certificate"])
    assert imsolve.solve(cycle(5), 2, budget=0)["answer"] == "exhausted"
    assert imsolve.solve(cycle(5), 2)["answer"] == "no"
    assert imsolve.solve_simple(cycle(5), 1)["answer"] == "yes"


def test_oracles_and_structure():
    p = imsolve.parameters(cycle(5), 1)
    assert (p["mm"], p["is"], p["im"], p["k_avg"]) == (2, 2, 1, 1.0)
    assert imsolve.brute_im(cycle(5))[0] == 1
    with pytest.raises(imsolve.TooLarge):
        imsolve.brute_im(cycle(20))
    assert imsolve.recognize_cameron_walker(imsolve.fixture("tstar4"))["kind"] == "triangle-star"
    t = imsolve.classify_tight(imsolve.generate("cw u=1 w=1 tight"))
    assert t["kind"] == "tight-pendant-bipartite"


def test_instances():
    g, ell = imsolve.read_instance("p im 2 1 1\ne 1 2")
    assert g.size == 1 and ell == 1
    with pytest.raises(imsolve.ParseError):
        imsolve.read_instance("p im 2 1 1\ne 1 5")
    text = imsolve.write_instance(imsolve.fixture("fig2"), 2)
    g2, _ = imsolve.read_instance(text)
    assert g2 == imsolve.fixture("fig2")
    fig, ell = imsolve.load_instance(str(FIXTURES / "fig2.im"))
    assert fig.order == 9 and ell == 2
    assert imsolve.gen_random(8, 0.5, 3) == imsolve.gen_random(8, 0.5, 3)

    gp, lp = imsolve.reduce_dominating_set(imsolve.Graph.from_edges([("1", "2"), ("2", "3"), ("1", "3")]), 1)
    assert gp.order == 6 and lp == 2
    sq = imsolve.Graph.from_edges([("a", "b"), ("c", "d"), ("a", "c")])
    gm, lm = imsolve.reduce_multicolored_is(sq, [["a", "b"], ["c", "d"]])
    assert gm.order == 6 and lm == 2
    assert imsolve.brute_is(gm) == 2
