"""Coordinates of (co)cycles with respect to the structural bases.

An element of HH^1(TA) is handled as a quadruple ``TAVector`` with one
component per summand of Z(A) ⊕ HH_1(A)^* ⊕ HH^1(A) ⊕ Alt_A(DA), each in
the raw form used by ``CohomologyElement.vector``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .bases import (
    CohomologyElement,
    alt_basis,
    center_basis,
    hh1_basis,
    hh1_dual_basis,
)
from .linalg import Echelon, Field, NotInSpan, SparseVector, add_into
from .oracle import arrow_cyclic, arrow_pairs, coboundary_echelon, dual_coboundary_echelon
from .quiver import GentlePresentation, cyclic_pairs


class NotInBasisSpan(ArithmeticError):
    """A vector that should be a (co)cycle is not in the span of the basis."""


@dataclass
class TAVector:
    center: dict = dc_field(default_factory=dict)
    h1dual: dict = dc_field(default_factory=dict)
    h1: dict = dc_field(default_factory=dict)
    alt: dict = dc_field(default_factory=dict)

    def add(self, other: "TAVector", c, field: Field) -> None:
        for mine, theirs in (
            (self.center, other.center),
            (self.h1dual, other.h1dual),
            (self.h1, other.h1),
            (self.alt, other.alt),
        ):
            for k, v in theirs.items():
                add_into(mine, k, c * v, field)


def _tracked(order: dict, field: Field, fixed, basis_vectors) -> tuple[Echelon, int]:
    ech = Echelon(field, order, track=True)
    for v in fixed:
        ech.insert(v)
    n_fixed = ech.n_inputs
    for v in basis_vectors:
        if not ech.insert(v):
            raise NotInBasisSpan("structural basis is not independent modulo boundaries")
    return ech, n_fixed


class Coordinates:
    """Express vectors in the structural basis of each summand."""

    def __init__(self, G: GentlePresentation, field: Field):
        self.G = G
        self.field = field
        self.center_basis = center_basis(G, field)
        self.h1_basis = hh1_basis(G, field)
        self.h1dual_basis = hh1_dual_basis(G, field)
        self.alt_basis = alt_basis(G, field)
        f = field
        B = G.path_basis
        self._c_ech, self._c_off = _tracked(
            {p: i for i, p in enumerate(B)}, f, [], [x.vector(G, f) for x in self.center_basis]
        )
        self._h_ech, self._h_off = _tracked(
            {k: i for i, k in enumerate(arrow_pairs(G))},
            f,
            coboundary_echelon(G, f).sorted_rows(),
            [x.vector(G, f) for x in self.h1_basis],
        )
        self._d_ech, self._d_off = _tracked(
            {k: i for i, k in enumerate(arrow_cyclic(G))},
            f,
            dual_coboundary_echelon(G, f).sorted_rows(),
            [x.vector(G, f) for x in self.h1dual_basis],
        )
        self._a_ech, self._a_off = _tracked(
            {k: i for i, k in enumerate(cyclic_pairs(B, B))}, f, [], [x.vector(G, f) for x in self.alt_basis]
        )

    @property
    def ta_basis(self) -> list[CohomologyElement]:
        return self.center_basis + self.h1dual_basis + self.h1_basis + self.alt_basis

    def _express(self, ech: Echelon, off: int, basis, vec, what: str) -> SparseVector:
        try:
            combo = ech.express(vec)
        except NotInSpan as exc:
            raise NotInBasisSpan(f"{what}: {exc}") from None
        return SparseVector({basis[i - off]: c for i, c in combo.items() if i >= off}, self.field)

    def center(self, z) -> SparseVector:
        return self._express(self._c_ech, self._c_off, self.center_basis, z, "not central")

    def h1(self, v) -> SparseVector:
        return self._express(self._h_ech, self._h_off, self.h1_basis, v, "not a cocycle")

    def h1dual(self, v) -> SparseVector:
        return self._express(self._d_ech, self._d_off, self.h1dual_basis, v, "not a cycle")

    def alt(self, psi) -> SparseVector:
        return self._express(self._a_ech, self._a_off, self.alt_basis, psi, "not alternating")

    def ta(self, x: TAVector) -> SparseVector:
        out = self.center(x.center)
        out = out + self.h1dual(x.h1dual)
        out = out + self.h1(x.h1)
        return out + self.alt(x.alt)

    def element(self, el: CohomologyElement) -> TAVector:
        """Embed a basis element as a quadruple."""
        v = el.vector(self.G, self.field)
        slot = {"Center": "center", "H1Dual": "h1dual", "H1": "h1", "Alt": "alt"}[el.summand]
        out = TAVector()
        setattr(out, slot, dict(v))
        return out


@lru_cache(maxsize=4096)
def coordinates(G: GentlePresentation, field: Field) -> Coordinates:
    return Coordinates(G, field)
