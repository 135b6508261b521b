import pytest
from hypothesis import given, settings, strategies as st

from gentle_hh1.bases import (
    NotSpecialCase,
    alt_basis,
    center_basis,
    hh1_basis,
    hh1_dual_basis,
    special_case_report,
    summand_dims,
    trivial_extension_hh1_basis,
)
from gentle_hh1.linalg import Echelon
from gentle_hh1.oracle import (
    alt_space,
    arrow_pairs,
    center_dimension,
    coboundary_echelon,
    d1_matrix,
    hh1_dual_quotient,
    hh1_quotient,
    is_alternating_map,
)
from gentle_hh1.quiver import fundamental_cycles

from conftest import F2, F3, Q, four_vertex, kronecker, loop, loop_cycle, nakayama, point, small_corpus

corpus_algebras = st.sampled_from([G for _, G in small_corpus()])
fields = st.sampled_from([Q, F2, F3])


def labels(G, basis):
    return [b.label(G) for b in basis]


def test_center_examples():
    assert labels(kronecker(), center_basis(kronecker(), Q)) == ["Identity"]
    L = loop()
    assert labels(L, center_basis(L, Q)) == ["Identity", "CentralCycle(x)"]
    assert labels(nakayama(), center_basis(nakayama(), Q)) == ["Identity"]


def test_hh1_examples():
    K = kronecker()
    assert labels(K, hh1_basis(K, Q)) == ["Shortcut(b1, b2)", "Shortcut(b2, b1)", "FundCycle(b2)"]
    N = nakayama()
    assert labels(N, hh1_basis(N, Q)) == ["FundCycle(a2)"]
    L = loop()
    assert labels(L, hh1_basis(L, F2)) == ["FundCycle(x)", "Char2Loop(x)"]
    assert labels(L, hh1_basis(L, Q)) == ["FundCycle(x)"]


def test_hh1_dual_examples():
    N = nakayama()
    assert labels(N, hh1_dual_basis(N, Q)) == ["SkewPair(a1, a2)"]
    assert hh1_dual_basis(kronecker(), Q) == []
    L = loop()
    assert labels(L, hh1_dual_basis(L, F2)) == ["LoopAtIdempotent(x, e)", "Char2LoopDual(x)"]


def test_alt_examples():
    A = loop_cycle()
    assert sorted(labels(A, alt_basis(A, F2))) == ["Psi_PP(c·b·a)", "Psi_eP(e1, c·b·a)"]
    assert alt_basis(A, Q) == []
    N = nakayama()
    assert labels(N, alt_basis(N, Q)) == ["Phi(a1, a2)"]


def test_phi_orientation():
    N = nakayama()
    (phi,) = alt_basis(N, Q)
    p, q = phi.payload
    assert p < q
    assert phi.vector(N, Q) == {(p, q): 1, (q, p): -1}


def test_trivial_extension_examples():
    assert len(trivial_extension_hh1_basis(kronecker(), Q)) == 4
    assert summand_dims(nakayama(), Q) == {"Center": 1, "H1Dual": 1, "H1": 1, "Alt": 1}
    F = four_vertex()
    assert labels(F, trivial_extension_hh1_basis(F, Q)) == ["Identity", "FundCycle(b)"]


def test_trivial_extension_order():
    N = nakayama()
    assert [b.summand for b in trivial_extension_hh1_basis(N, Q)] == ["Center", "H1Dual", "H1", "Alt"]


def test_special_cases():
    assert special_case_report(point(), Q).total == 1
    assert special_case_report(point(), F2).total == 2
    assert special_case_report(loop(), F2).dims == {"Center": 2, "H1Dual": 2, "H1": 2, "Alt": 2}
    assert special_case_report(loop(), Q).dims == {"Center": 2, "H1Dual": 1, "H1": 1, "Alt": 0}
    with pytest.raises(NotSpecialCase):
        special_case_report(kronecker(), Q)


@pytest.mark.parametrize("f", [Q, F2, F3])
@pytest.mark.parametrize("make", [point, loop])
def test_special_cases_match_general_bases(make, f):
    G = make()
    assert summand_dims(G, f) == special_case_report(G, f).dims


@settings(max_examples=100, deadline=None)
@given(G=corpus_algebras, f=fields)
def test_dims_match_oracle(G, f):
    assert len(hh1_basis(G, f)) == hh1_quotient(G, f).dimension
    assert len(hh1_dual_basis(G, f)) == hh1_dual_quotient(G, f).dimension
    assert len(center_basis(G, f)) == center_dimension(G, f)
    assert len(alt_basis(G, f)) == len(alt_space(G, f))


@settings(max_examples=100, deadline=None)
@given(G=corpus_algebras, f=fields)
def test_hh1_elements_are_independent_cocycles(G, f):
    d1 = d1_matrix(G, f)
    ech = Echelon(f, {k: i for i, k in enumerate(arrow_pairs(G))})
    for row in coboundary_echelon(G, f).sorted_rows():
        ech.insert(row)
    for x in hh1_basis(G, f):
        v = x.vector(G, f)
        assert not d1.apply(v)
        assert ech.insert(v), x.label(G)


@settings(max_examples=100, deadline=None)
@given(G=corpus_algebras, f=fields)
def test_alt_elements_alternating(G, f):
    for x in alt_basis(G, f):
        assert is_alternating_map(G, x.vector(G, f), f), x.label(G)


@settings(max_examples=100, deadline=None)
@given(G=corpus_algebras, f=fields)
def test_kind_invariants(G, f):
    free = set(range(G.quiver.n_arrows)) - G.arrows_in_relations
    cotree = fundamental_cycles(G.quiver).cotree
    for x in hh1_basis(G, f) + hh1_dual_basis(G, f) + alt_basis(G, f):
        pl = x.payload
        if x.kind == "Shortcut":
            a, q = pl[0].arrows[0], pl[1]
            assert a in free and a not in q.arrows and G.in_basis(q)
        elif x.kind == "Deviation":
            a, q = pl[0].arrows[0], pl[1]
            assert a in free
            assert any(q.arrows[i] == a for i in range(1, len(q.arrows) - 1))
        elif x.kind == "FundCycle":
            assert pl[0].arrows[0] in cotree
        elif x.kind in ("Char2Loop", "Char2LoopDual", "Psi_eP", "Psi_PP"):
            assert f.char == 2
        elif x.kind == "SkewPair":
            a, b = pl[0].arrows[0], pl[1].arrows[0]
            assert a < b and G.is_relation(a, b) and G.is_relation(b, a)
        elif x.kind == "Phi":
            p, q = pl
            assert p < q
            assert G.multiply(p, q) is None and G.multiply(q, p) is None
            assert G.valency(p.source) == G.valency(q.source) == 2
