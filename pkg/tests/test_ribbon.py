import json

import pytest
from hypothesis import given, settings, strategies as st

from gentle_hh1.bases import alt_basis, hh1_dual_basis
from gentle_hh1.quiver import fundamental_cycles
from gentle_hh1.ribbon import (
    MarkedRibbonGraph,
    NoAltFreeCut,
    RibbonVertex,
    admissible_cuts,
    brauer_algebra,
    euler_report,
    find_alt_free_cut,
    ribbon_graph,
    round_trip_ok,
    star_graph,
    trivial_extension_quiver,
)

from conftest import F2, Q, example_cuts, kronecker, loop, loop_cycle, nakayama, point, small_corpus

corpus_algebras = st.sampled_from([G for _, G in small_corpus()])


def test_kronecker_ribbon_graph():
    R = ribbon_graph(kronecker())
    assert len(R.vertices) == 2 and R.n_edges == 2
    assert [v.label for v in R.vertices] == ["b1", "b2"]
    assert all(v.marking is not None for v in R.vertices)
    assert R.endpoints(0) == (0, 1) and R.endpoints(1) == (0, 1)


def test_loop_cycle_ribbon_graph():
    R = ribbon_graph(loop_cycle())
    (v,) = R.vertices
    assert v.label == "c·b·a" and v.valency == 4
    assert R.endpoints(0) == (0, 0) and R.endpoints(1) == (0, 0)
    # the marked angle is the one of β, between t(m) and s(m)
    assert v.angle_labels[v.marking] == "β[c·b·a]"


def test_rotation_canonical():
    for G in (kronecker(), loop_cycle(), example_cuts()):
        for v in ribbon_graph(G).vertices:
            assert v.rotation[0] == min(v.rotation)


def test_euler_examples():
    assert euler_report(kronecker()) == (0, 0, 2)
    assert euler_report(example_cuts()) == (-1, -1, 3)
    assert euler_report(point()) == (1, 1, 2)


def test_trivial_extension_examples():
    T = trivial_extension_quiver(loop())
    assert T.vertices == ("e",) and [a[0] for a in T.arrows] == ["x", "β[x]"]
    P = trivial_extension_quiver(point())
    assert [a[0] for a in P.arrows] == ["α"] and P.zeros == ((0, 0),)
    K = trivial_extension_quiver(kronecker())
    assert [a[0] for a in K.arrows] == ["b1", "b2", "β[b1]", "β[b2]"]


def test_brauer_examples():
    single = MarkedRibbonGraph((RibbonVertex("u", (0,)), RibbonVertex("v", (1,))), ("e",))
    B = brauer_algebra(single)
    assert B.vertices == ("e",) and B.arrows == ()
    KB = brauer_algebra(ribbon_graph(kronecker()).unmark())
    assert KB.arrow_signature() == trivial_extension_quiver(kronecker()).arrow_signature()
    assert len(KB.arrows) == 4
    one_loop = MarkedRibbonGraph((RibbonVertex("u", (0, 1)),), ("e",))
    B1 = brauer_algebra(one_loop)
    assert len(B1.vertices) == 1 and len(B1.arrows) == 2
    assert all(s == t == 0 for _, s, t in B1.arrows)


def test_kronecker_cuts_include_nakayama():
    cuts = list(admissible_cuts(ribbon_graph(kronecker()).unmark()))
    assert len(cuts) == 4
    assert any(c.algebra.is_kronecker() for c in cuts)
    assert any(c.algebra.is_nakayama_two_cycle() for c in cuts)


def test_single_edge_cut():
    cuts = list(admissible_cuts(ribbon_graph(point()).unmark()))
    assert len(cuts) == 1 and cuts[0].algebra.is_point()


def test_loop_cycle_alt_free_cut():
    R = ribbon_graph(loop_cycle()).unmark()
    cut = find_alt_free_cut(R, F2)
    assert alt_basis(cut.algebra, F2) == []
    assert alt_basis(loop_cycle(), F2) != []


def test_no_alt_free_cut_for_point_in_char_2():
    with pytest.raises(NoAltFreeCut):
        find_alt_free_cut(ribbon_graph(point()).unmark(), F2)
    assert find_alt_free_cut(ribbon_graph(point()).unmark(), Q).algebra.is_point()


def test_example_cuts():
    R = ribbon_graph(example_cuts()).unmark()
    cuts = list(admissible_cuts(R))
    assert len(cuts) == 18
    assert cuts == sorted(cuts, key=lambda c: c.angles)


@pytest.mark.parametrize("k", [3, 4])
def test_star_every_cut_has_homology(k):
    cuts = list(admissible_cuts(star_graph(k)))
    assert len(cuts) == k * k
    for c in cuts:
        assert len(hh1_dual_basis(c.algebra, Q)) >= 1


def test_json_and_dot():
    R = ribbon_graph(kronecker())
    doc = json.loads(R.to_json_string())
    assert doc["schema"] == 1
    assert doc["vertices"][0]["rotation"] == [0, 2]
    dot = R.to_dot()
    assert dot.startswith("graph ribbon {") and "// ×" in dot
    assert dot.count(" -- ") == 2
    assert R.to_json_string() == ribbon_graph(kronecker()).to_json_string()


def test_nakayama_and_kronecker_share_brauer_graph():
    a = ribbon_graph(kronecker()).unmark().canonical_form()
    b = ribbon_graph(nakayama()).unmark().canonical_form()
    assert a == b


@settings(max_examples=100, deadline=None)
@given(G=corpus_algebras)
def test_graph_identities(G):
    chi_q, chi_r, n = euler_report(G)
    q = G.quiver
    assert chi_q == chi_r and n == 2 * q.n_vertices - q.n_arrows
    assert fundamental_cycles(q).cycle_count == 1 - chi_q
    assert round_trip_ok(G)
    R = ribbon_graph(G)
    for e in range(R.n_edges):
        assert len(R.endpoints(e)) == 2


@settings(max_examples=40, deadline=None)
@given(G=corpus_algebras)
def test_cuts_have_same_trivial_extension(G):
    R = ribbon_graph(G).unmark()
    target = R.canonical_form()
    sig = trivial_extension_quiver(G).arrow_signature()
    for cut in admissible_cuts(R):
        assert ribbon_graph(cut.algebra).unmark().canonical_form() == target
        assert trivial_extension_quiver(cut.algebra).arrow_signature() == sig
