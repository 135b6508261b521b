from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gentle_hh1.linalg import ComplexNotExact, Echelon, ExactMatrix, Field, NotInSpan, SparseVector, quotient

from conftest import F2, F3, Q


@pytest.mark.parametrize(
    "spec, p",
    [("Q", 0), ("QQ", 0), ("F2", 2), ("Fp:5", 5), ({"Fp": 3}, 3), ("GF7", 7)],
)
def test_field_parse(spec, p):
    assert Field.parse(spec) == Field(p)


@pytest.mark.parametrize("spec", ["R", "F4", {"p": 2}, "Fx"])
def test_field_parse_rejects(spec):
    with pytest.raises(ValueError):
        Field.parse(spec)


def test_field_arithmetic():
    assert F3(Fraction(1, 2)) == 2
    assert F2(-1) == 1
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert F3.inv(2) == 2
    assert F2.to_json() == {"Fp": 2} and Q.to_json() == "Q"


def test_sparse_vector_drops_zeros():
    v = SparseVector({"x": 2, "y": 0}, F2)
    assert not v and len(v) == 0
    w = SparseVector({"x": 1, "y": 3}, Q) - SparseVector({"x": 1}, Q)
    assert dict(w) == {"y": 3}
    assert (w.scale(0)) == 0
    assert SparseVector([("x", 1), ("x", 1)], F2) == {}


def test_echelon_express():
    ech = Echelon(Q, {"a": 0, "b": 1, "c": 2}, track=True)
    assert ech.insert({"a": 1, "b": 1})
    assert ech.insert({"b": 1, "c": 1})
    assert not Echelon(Q, {"a": 0}).contains({"a": 1})
    assert ech.express({"a": 1, "b": 2, "c": 1}) == {0: 1, 1: 1}
    with pytest.raises(NotInSpan):
        ech.express({"c": 1, "a": 5, "b": 0})


def test_quotient_detects_non_complex():
    d0 = ExactMatrix(("x",), ("y",), ({"y": 1},), Q)
    d1 = ExactMatrix(("y",), ("z",), ({"z": 1},), Q)
    with pytest.raises(ComplexNotExact):
        quotient(d1, d0)


matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n)
    )
)


def _matrix(rows, field):
    n, m = len(rows), len(rows[0])
    cols = tuple({i: rows[i][j] for i in range(n) if field(rows[i][j])} for j in range(m))
    cols = tuple({k: field(v) for k, v in c.items()} for c in cols)
    return ExactMatrix(tuple(range(m)), tuple(range(n)), cols, field)


@settings(max_examples=60, deadline=None)
@given(rows=matrices, p=st.sampled_from([0, 2, 3, 5]))
def test_rank_nullity(rows, p):
    f = Field(p)
    M = _matrix(rows, f)
    ker = M.kernel_basis()
    assert M.rank() + len(ker) == len(M.domain)
    for v in ker:
        assert not M.apply(v)


@settings(max_examples=60, deadline=None)
@given(rows=matrices, p=st.sampled_from([0, 2, 3]))
def test_express_reconstructs(rows, p):
    f = Field(p)
    M = _matrix(rows, f)
    ech = Echelon(f, {k: i for i, k in enumerate(M.codomain)}, track=True)
    kept = [c for c in M.columns if ech.insert(c)]
    ech2 = Echelon(f, {k: i for i, k in enumerate(M.codomain)}, track=True)
    for c in kept:
        assert ech2.insert(c)
    for col in M.columns:
        combo = ech2.express(col)
        rebuilt = SparseVector({}, f)
        for i, c in combo.items():
            rebuilt = rebuilt + SparseVector(kept[i], f).scale(c)
        assert rebuilt == SparseVector(col, f)
