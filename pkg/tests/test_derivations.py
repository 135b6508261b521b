import pytest
from hypothesis import given, settings, strategies as st

from gentle_hh1.coords import TAVector, coordinates
from gentle_hh1.derivations import (
    NotADerivation,
    check_derivation_A,
    check_derivation_TA,
    commutator,
    decompose,
    omega,
    realize,
    varsigma,
)

from conftest import F2, F3, Q, kronecker, loop, loop_cycle, nakayama, small_corpus

corpus_algebras = st.sampled_from([G for _, G in small_corpus()])


def test_omega_of_shortcut():
    G = kronecker()
    b1, b2 = G.arrow_paths
    phi = omega(G, {(b1, b2): 1}, Q)
    assert phi[b1] == {b2: 1} and phi[b2] == {}
    check_derivation_A(G, phi, Q)
    assert varsigma(G, phi, Q) == {(b1, b2): 1}


def test_non_cocycle_is_not_a_derivation():
    L = loop()
    (x,), (e,) = L.arrow_paths, L.vertex_paths
    with pytest.raises(NotADerivation):
        check_derivation_A(L, omega(L, {(x, e): 1}, Q), Q)
    check_derivation_A(L, omega(L, {(x, e): 1}, F2), F2)


def test_identity_map_is_not_a_derivation():
    G = nakayama()
    ident = {p: {p: 1} for p in G.path_basis}
    with pytest.raises(NotADerivation):
        check_derivation_A(G, ident, Q)
    ta_ident = {k: {k: 1} for k in realize(G, TAVector(), Q)}
    with pytest.raises(NotADerivation):
        check_derivation_TA(G, ta_ident, Q)


def test_commutator_of_kronecker_shortcuts():
    G = kronecker()
    b1, b2 = G.arrow_paths
    x = omega(G, {(b1, b2): 1}, Q)
    y = omega(G, {(b2, b1): 1}, Q)
    assert varsigma(G, commutator(x, y, Q), Q) == {(b1, b1): -1, (b2, b2): 1}


def test_round_trip_examples():
    for G in (kronecker(), nakayama(), loop(), loop_cycle()):
        for f in (Q, F2):
            co = coordinates(G, f)
            for x in co.ta_basis:
                delta = realize(G, co.element(x), f)
                check_derivation_TA(G, delta, f)
                assert co.ta(decompose(G, delta, f)) == {x: 1}, x.label(G)


@settings(max_examples=60, deadline=None)
@given(G=corpus_algebras, f=st.sampled_from([Q, F2, F3]))
def test_realize_decompose_round_trip(G, f):
    co = coordinates(G, f)
    for x in co.ta_basis:
        delta = realize(G, co.element(x), f)
        check_derivation_TA(G, delta, f)
        assert co.ta(decompose(G, delta, f)) == {x: 1}, x.label(G)


@settings(max_examples=60, deadline=None)
@given(G=corpus_algebras, f=st.sampled_from([Q, F2]))
def test_commutators_of_realized_classes_are_derivations(G, f):
    co = coordinates(G, f)
    B = co.ta_basis[:4]
    for x in B:
        for y in B:
            dx = realize(G, co.element(x), f)
            dy = realize(G, co.element(y), f)
            check_derivation_TA(G, commutator(dx, dy, f), f)
