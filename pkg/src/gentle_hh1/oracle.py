"""Brute-force cochain complexes for HH^1(A), HH_1(A)^*, Z(A) and Alt_A(DA).

Nothing here uses the classification of basis elements; every dimension is
a rank computation on explicitly assembled matrices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .algebra import left_act, right_act, sandwich
from .linalg import Echelon, ExactMatrix, Field, QuotientSpace, SparseVector, add_into, quotient
from .quiver import GentlePresentation, Path, cyclic_pairs, parallel_pairs, substitute


# --- coordinate spaces -------------------------------------------------------


def vertex_pairs(G: GentlePresentation):
    """Q0 || B."""
    return parallel_pairs(G.vertex_paths, G.path_basis)


def arrow_pairs(G: GentlePresentation):
    """Q1 || B."""
    return parallel_pairs(G.arrow_paths, G.path_basis)


def relation_pairs(G: GentlePresentation):
    """R || B."""
    return parallel_pairs(G.relation_paths, G.path_basis)


def vertex_cyclic(G: GentlePresentation):
    """Q0 ⊙ B*."""
    return cyclic_pairs(G.vertex_paths, G.path_basis)


def arrow_cyclic(G: GentlePresentation):
    """Q1 ⊙ B*."""
    return cyclic_pairs(G.arrow_paths, G.path_basis)


def relation_cyclic(G: GentlePresentation):
    """R ⊙ B*."""
    return cyclic_pairs(G.relation_paths, G.path_basis)


# --- the cohomology complex ---------------------------------------------------


def _d0(G: GentlePresentation, field: Field):
    q = G.quiver

    def fn(pair):
        e, p = pair
        v = e.source
        out: dict = {}
        for a in q.out_arrows(v):
            ap = G.multiply(G.arrow_paths[a], p)
            if ap is not None:
                add_into(out, (G.arrow_paths[a], ap), 1, field)
        for a in q.in_arrows(v):
            pa = G.multiply(p, G.arrow_paths[a])
            if pa is not None:
                add_into(out, (G.arrow_paths[a], pa), -1, field)
        return out

    return fn


def d0_matrix(G: GentlePresentation, field: Field) -> ExactMatrix:
    """d^0 : K(Q0||B) -> K(Q1||B)."""
    return ExactMatrix.from_function(vertex_pairs(G), arrow_pairs(G), _d0(G, field), field)


def d1_matrix(G: GentlePresentation, field: Field) -> ExactMatrix:
    """d^1 : K(Q1||B) -> K(R||B), ``(a,p) -> Σ_q (q, q^{(a,p)})``."""

    def fn(pair):
        a, p = pair
        out: dict = {}
        for r in G.relation_paths:
            for s, c in substitute(G, r, a.arrows[0], p, field).items():
                add_into(out, (r, s), c, field)
        return out

    return ExactMatrix.from_function(arrow_pairs(G), relation_pairs(G), fn, field)


# --- the homology-dual complex ------------------------------------------------


def homology_dual_matrices(G: GentlePresentation, field: Field) -> tuple[ExactMatrix, ExactMatrix]:
    """(d_0, d_1) on K(Q0⊙B*) -> K(Q1⊙B*) -> K(R⊙B*)."""
    q = G.quiver

    def fn0(pair):
        e, p = pair
        v = e.source
        out: dict = {}
        for a in q.out_arrows(v):
            y = left_act(G.arrow_paths[a], p)
            if y is not None:
                add_into(out, (G.arrow_paths[a], y), 1, field)
        for a in q.in_arrows(v):
            y = right_act(p, G.arrow_paths[a])
            if y is not None:
                add_into(out, (G.arrow_paths[a], y), -1, field)
        return out

    def fn1(pair):
        a, p = pair
        ai = a.arrows[0]
        out: dict = {}
        for r in G.relation_paths:
            first, second = r.arrows
            # r = θ · a · ν with one of θ, ν trivial
            if first == ai:
                x = sandwich(G.arrow_paths[second], p, G.vertex_paths[a.source])
                if x is not None:
                    add_into(out, (r, x), 1, field)
            if second == ai:
                x = sandwich(G.vertex_paths[a.target], p, G.arrow_paths[first])
                if x is not None:
                    add_into(out, (r, x), 1, field)
        return out

    c0, c1, c2 = vertex_cyclic(G), arrow_cyclic(G), relation_cyclic(G)
    return (
        ExactMatrix.from_function(c0, c1, fn0, field),
        ExactMatrix.from_function(c1, c2, fn1, field),
    )


# --- quotients ------------------------------------------------------------------


@lru_cache(maxsize=4096)
def hh1_quotient(G: GentlePresentation, field: Field) -> QuotientSpace:
    return quotient(d1_matrix(G, field), d0_matrix(G, field))


@lru_cache(maxsize=4096)
def hh1_dual_quotient(G: GentlePresentation, field: Field) -> QuotientSpace:
    d0, d1 = homology_dual_matrices(G, field)
    return quotient(d1, d0)


def center_dimension(G: GentlePresentation, field: Field) -> int:
    """dim HH^0(A) = dim ker d^0."""
    return len(d0_matrix(G, field).kernel_basis())


@lru_cache(maxsize=4096)
def coboundary_echelon(G: GentlePresentation, field: Field) -> Echelon:
    return d0_matrix(G, field).image_echelon()


@lru_cache(maxsize=4096)
def dual_coboundary_echelon(G: GentlePresentation, field: Field) -> Echelon:
    return homology_dual_matrices(G, field)[0].image_echelon()


def reduce_mod_coboundaries(v: Mapping, G: GentlePresentation, field: Field) -> SparseVector:
    """Canonical representative of ``v + Im d^0`` in K(Q1||B)."""
    return SparseVector(coboundary_echelon(G, field).reduce(v), field)


def reduce_mod_dual_coboundaries(v: Mapping, G: GentlePresentation, field: Field) -> SparseVector:
    """Canonical representative of ``v + Im d_0`` in K(Q1⊙B*)."""
    return SparseVector(dual_coboundary_echelon(G, field).reduce(v), field)


# --- Hom_{A-A}(DA, A) and Alt_A(DA) --------------------------------------------


def _bimodule_equations(G: GentlePresentation, field: Field) -> tuple[list, list[dict]]:
    """Unknowns λ[(q, r)]: ψ(q*) ∋ λ·r over cyclic pairs, and the A-A linearity equations."""
    B = G.path_basis
    unknowns = cyclic_pairs(B, B)
    by_q: dict = {}
    for q, r in unknowns:
        by_q.setdefault(q, []).append(r)
    eqs: dict = {}
    gens = G.arrow_paths
    for q in B:
        for x in gens:
            # ψ(x·q*) - x·ψ(q*) = 0
            y = left_act(x, q)
            if y is not None:
                for r in by_q.get(y, ()):
                    add_into(eqs.setdefault(("L", x, q, r), {}), (y, r), 1, field)
            for r in by_q.get(q, ()):
                s = G.multiply(x, r)
                if s is not None:
                    add_into(eqs.setdefault(("L", x, q, s), {}), (q, r), -1, field)
            # ψ(q*·x) - ψ(q*)·x = 0
            y = right_act(q, x)
            if y is not None:
                for r in by_q.get(y, ()):
                    add_into(eqs.setdefault(("R", x, q, r), {}), (y, r), 1, field)
            for r in by_q.get(q, ()):
                s = G.multiply(r, x)
                if s is not None:
                    add_into(eqs.setdefault(("R", x, q, s), {}), (q, r), -1, field)
    return unknowns, [e for e in eqs.values() if e]


def _alt_equations(G: GentlePresentation, field: Field, unknowns) -> list[dict]:
    """f ψ(g) + ψ(f) g = 0, evaluated on every basis path y."""
    B = G.path_basis
    eqs: dict = {}
    for g, r in unknowns:
        for y in B:
            # (q1* · ψ(g))(y) = q1*(r · y)
            t = G.multiply(r, y)
            if t is not None:
                add_into(eqs.setdefault((t, g, y), {}), (g, r), 1, field)
            # (ψ(f) · q2*)(y) = q2*(y · r)  with f = g here
            t = G.multiply(y, r)
            if t is not None:
                add_into(eqs.setdefault((g, t, y), {}), (g, r), 1, field)
    return [e for e in eqs.values() if e]


def _solution_space(unknowns, equations, field: Field) -> list[dict]:
    order = {u: i for i, u in enumerate(unknowns)}
    ech = Echelon(field, order)
    for e in equations:
        ech.insert(e)
    free = [u for u in unknowns if u not in ech.rows]
    sols = []
    for u in free:
        v = {u: field(1)}
        for piv, row in ech.rows.items():
            c = row.get(u)
            if c:
                v[piv] = field(-c)
        sols.append(v)
    return sols


@lru_cache(maxsize=4096)
def bimodule_hom_space(G: GentlePresentation, field: Field) -> tuple:
    """Basis of Hom_{A-A}(DA, A); each map as dict ``(q, r) -> λ``."""
    unknowns, eqs = _bimodule_equations(G, field)
    return tuple(_solution_space(unknowns, eqs, field))


@lru_cache(maxsize=4096)
def alt_space(G: GentlePresentation, field: Field) -> tuple:
    """Basis of Alt_A(DA) as maps DA -> A."""
    unknowns, eqs = _bimodule_equations(G, field)
    eqs = eqs + _alt_equations(G, field, unknowns)
    return tuple(_solution_space(unknowns, eqs, field))


def is_alternating_map(G: GentlePresentation, psi: Mapping, field: Field) -> bool:
    """Check that ``psi`` (dict ``(q, r) -> λ``) lies in Alt_A(DA)."""
    unknowns, eqs = _bimodule_equations(G, field)
    eqs = eqs + _alt_equations(G, field, unknowns)
    for e in eqs:
        s = field(sum(c * psi.get(k, 0) for k, c in e.items()))
        if s:
            return False
    return True
