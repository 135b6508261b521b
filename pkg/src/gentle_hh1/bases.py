"""Combinatorial bases of Z(A), HH^1(A), HH_1(A)^* and Alt_A(DA).

Each basis element is a tagged record; ``vector`` turns it into coordinates
in the space the oracle works with:

* Center  -> element of A, dict ``Path -> c``
* H1      -> cocycle in K(Q1||B), dict ``(arrow, path) -> c``
* H1Dual  -> cycle in K(Q1⊙B*), dict ``(arrow, path) -> c`` (path read as dual)
* Alt     -> map DA -> A, dict ``(q, r) -> c`` meaning ``q* -> c r``
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .linalg import Field
from .quiver import GentlePresentation, Path, fundamental_cycles, vertex_path

SUMMANDS = ("Center", "H1Dual", "H1", "Alt")

KIND_ORDER = {
    "Identity": 0,
    "CentralCycle": 1,
    "SkewPair": 0,
    "LoopAtIdempotent": 1,
    "Char2LoopDual": 2,
    "Shortcut": 0,
    "Deviation": 1,
    "FundCycle": 2,
    "Char2Loop": 3,
    "Phi": 0,
    "Psi_eP": 1,
    "Psi_PP": 2,
}


class NotSpecialCase(ValueError):
    pass


@dataclass(frozen=True)
class CohomologyElement:
    """A basis element tagged by summand and combinatorial kind.

    ``payload`` holds the defining paths (arrows as length-1 paths).
    """

    summand: str
    kind: str
    payload: tuple = ()

    def sort_key(self):
        return (SUMMANDS.index(self.summand), KIND_ORDER[self.kind], tuple(p.sort_key() for p in self.payload))

    def __lt__(self, other: "CohomologyElement"):
        return self.sort_key() < other.sort_key()

    def label(self, G: GentlePresentation) -> str:
        if not self.payload:
            return self.kind
        return f"{self.kind}({', '.join(G.fmt(p) for p in self.payload)})"

    def to_json(self, G: GentlePresentation) -> dict:
        return {
            "summand": self.summand,
            "kind": self.kind,
            "payload": [G.fmt(p) for p in self.payload],
        }

    def vector(self, G: GentlePresentation, field: Field) -> dict:
        one = field(1)
        k, pl = self.kind, self.payload
        if k == "Identity":
            return {e: one for e in G.vertex_paths}
        if k == "CentralCycle":
            return {pl[0]: one}
        if k in ("Shortcut", "Deviation"):
            return {(pl[0], pl[1]): one}
        if k == "FundCycle":
            return {(pl[0], pl[0]): one}
        if k == "Char2Loop":
            return {(pl[0], vertex_path(pl[0].source)): one}
        if k == "SkewPair":
            a, b = pl
            return {(a, b): one, (b, a): field(-1)}
        if k == "LoopAtIdempotent":
            return {(pl[0], pl[1]): one}
        if k == "Char2LoopDual":
            return {(pl[0], pl[0]): one}
        if k == "Phi":
            p, q = pl
            return {(p, q): one, (q, p): field(-1)}
        if k == "Psi_eP":
            return psi_ep_map(G, pl[1], one)
        if k == "Psi_PP":
            return {(pl[0], pl[0]): one}
        raise ValueError(f"unknown kind {k}")


def psi_ep_map(G: GentlePresentation, p: Path, one) -> dict:
    """``q* -> r`` whenever ``p = q r`` or ``p = r q``."""
    arrows = G.quiver.arrows
    vs = [p.source] + [arrows[a].target for a in p.arrows]
    out: dict = {}
    for i in range(len(p.arrows) + 1):
        first = Path(p.arrows[:i], p.source, vs[i])
        second = Path(p.arrows[i:], vs[i], p.target)
        out[(second, first)] = one
        out[(first, second)] = one
    return out


# --- the four summands ------------------------------------------------------


def _closing_cycles(G: GentlePresentation) -> list[Path]:
    """Nontrivial cycles p in B at a valency-2 vertex whose two ends meet in a relation."""
    out = []
    for p in G.path_basis:
        if p.is_trivial() or not p.is_cycle() or G.valency(p.source) != 2:
            continue
        if G.is_relation(p.arrows[-1], p.arrows[0]):
            out.append(p)
    return out


def center_basis(G: GentlePresentation, field: Field) -> list[CohomologyElement]:
    out = [CohomologyElement("Center", "Identity")]
    out += [CohomologyElement("Center", "CentralCycle", (p,)) for p in _closing_cycles(G)]
    return out


def hh1_basis(G: GentlePresentation, field: Field) -> list[CohomologyElement]:
    out = []
    free = [a for a in range(G.quiver.n_arrows) if a not in G.arrows_in_relations]
    arrows = G.arrow_paths
    for a in free:
        ap = arrows[a]
        for q in G.path_basis:
            if q.source != ap.source or q.target != ap.target:
                continue
            if a not in q.arrows:
                out.append(CohomologyElement("H1", "Shortcut", (ap, q)))
            else:
                for i, x in enumerate(q.arrows):
                    # q = q2 a q1 with q1 = arrows before i, q2 = arrows after i
                    if x == a and 0 < i < len(q.arrows) - 1:
                        out.append(CohomologyElement("H1", "Deviation", (ap, q)))
                        break
    for a in fundamental_cycles(G.quiver).cotree:
        out.append(CohomologyElement("H1", "FundCycle", (arrows[a],)))
    if field.char == 2:
        out += [CohomologyElement("H1", "Char2Loop", (arrows[a],)) for a in G.loops()]
    return sorted(out)


def hh1_dual_basis(G: GentlePresentation, field: Field) -> list[CohomologyElement]:
    out = []
    arrows = G.arrow_paths
    for a, b in combinations(range(G.quiver.n_arrows), 2):
        if G.is_relation(a, b) and G.is_relation(b, a):
            out.append(CohomologyElement("H1Dual", "SkewPair", (arrows[a], arrows[b])))
    for a in G.loops():
        out.append(CohomologyElement("H1Dual", "LoopAtIdempotent", (arrows[a], vertex_path(arrows[a].source))))
    if field.char == 2:
        out += [CohomologyElement("H1Dual", "Char2LoopDual", (arrows[a],)) for a in G.loops()]
    return sorted(out)


def alt_basis(G: GentlePresentation, field: Field) -> list[CohomologyElement]:
    out = []
    B = [p for p in G.path_basis if not p.is_trivial()]
    for p, q in combinations(B, 2):
        if p.source != q.target or p.target != q.source:
            continue
        if G.valency(p.source) != 2 or G.valency(q.source) != 2:
            continue
        if G.multiply(p, q) is None and G.multiply(q, p) is None:
            out.append(CohomologyElement("Alt", "Phi", (p, q)))
    if field.char == 2:
        for p in B:
            if p.is_cycle() and G.valency(p.source) == 2:
                e = vertex_path(p.source)
                out.append(CohomologyElement("Alt", "Psi_eP", (e, p)))
                out.append(CohomologyElement("Alt", "Psi_PP", (p,)))
        if G.is_point():
            # A = K: the identity of DA = K is alternating in char 2
            out.append(CohomologyElement("Alt", "Psi_PP", (G.vertex_paths[0],)))
    return sorted(out)


def trivial_extension_hh1_basis(G: GentlePresentation, field: Field) -> list[CohomologyElement]:
    """Z(A) ⊕ HH_1(A)^* ⊕ HH^1(A) ⊕ Alt_A(DA), in that order."""
    return center_basis(G, field) + hh1_dual_basis(G, field) + hh1_basis(G, field) + alt_basis(G, field)


def summand_dims(G: GentlePresentation, field: Field) -> dict[str, int]:
    return {
        "Center": len(center_basis(G, field)),
        "H1Dual": len(hh1_dual_basis(G, field)),
        "H1": len(hh1_basis(G, field)),
        "Alt": len(alt_basis(G, field)),
    }


# --- the two degenerate algebras --------------------------------------------


@dataclass(frozen=True)
class SpecialCaseReport:
    name: str
    field: str
    dims: dict
    notes: tuple = dc_field(default_factory=tuple)

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def special_case_report(G: GentlePresentation, field: Field) -> SpecialCaseReport:
    """Tabulated answers for A = K and for K[x]/(x^2)."""
    two = field.char == 2
    if G.is_point():
        dims = {"Center": 1, "H1Dual": 0, "H1": 0, "Alt": 1 if two else 0}
        notes = (
            "TA = K[α]/(α²); Z(A) = K spans the Euler class",
            "in char 2 the identity of DA gives the extra class ψ_{e,e}",
        )
        return SpecialCaseReport("point", field.label(), dims, notes)
    if G.is_single_loop() and G.relations:
        n = 2 if two else 1
        dims = {"Center": 2, "H1Dual": n, "H1": n, "Alt": 2 if two else 0}
        notes = (
            "the centre of A is A",
            "d¹(x, e) = (x², 2x) vanishes only in char 2",
        )
        return SpecialCaseReport("loop", field.label(), dims, notes)
    raise NotSpecialCase("only A = K and K[x]/(x²) are special cases")
