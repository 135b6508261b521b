"""Marked ribbon graphs, Brauer graph algebras and admissible cuts.

A ribbon graph is stored as a rotation system.  Edge ``v`` owns the two
half-edges ``2v`` and ``2v + 1``; every ribbon vertex lists its half-edges in
cyclic order, rotated to start at the smallest id.  Angle ``i`` of a vertex
is the step from ``rotation[i]`` to ``rotation[(i + 1) % k]``; in the Brauer
quiver it is an arrow from the edge of the first half-edge to the edge of
the second.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterator, Sequence

from .linalg import Field
from .quiver import GentlePresentation, PresentationError, presentation


class NoAltFreeCut(RuntimeError):
    pass


@dataclass(frozen=True)
class RibbonVertex:
    label: str
    rotation: tuple[int, ...]
    marking: int | None = None  # angle index, or None when unmarked
    angle_labels: tuple[str, ...] = ()

    @property
    def valency(self) -> int:
        return len(self.rotation)


@dataclass(frozen=True)
class MarkedRibbonGraph:
    vertices: tuple[RibbonVertex, ...]
    edge_labels: tuple[str, ...]

    @property
    def n_edges(self) -> int:
        return len(self.edge_labels)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.n_edges

    def unmark(self) -> "MarkedRibbonGraph":
        return MarkedRibbonGraph(tuple(replace(v, marking=None) for v in self.vertices), self.edge_labels)

    def endpoints(self, edge: int) -> tuple[int, int]:
        """Ribbon vertices holding half-edges ``2 edge`` and ``2 edge + 1``."""
        where = {h: i for i, v in enumerate(self.vertices) for h in v.rotation}
        return where[2 * edge], where[2 * edge + 1]

    def canonical_form(self) -> tuple:
        """Label-level invariant: sorted minimal rotations of the edge-label cycles."""
        cycles = []
        for v in self.vertices:
            seq = [self.edge_labels[h // 2] for h in v.rotation]
            rots = [tuple(seq[i:] + seq[:i]) for i in range(len(seq))] or [()]
            cycles.append(min(rots))
        return tuple(sorted(cycles))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "edges": [{"label": lab, "half_edges": [2 * i, 2 * i + 1]} for i, lab in enumerate(self.edge_labels)],
            "vertices": [
                {
                    "label": v.label,
                    "rotation": list(v.rotation),
                    "marking": v.marking,
                    "angles": list(v.angle_labels),
                }
                for v in self.vertices
            ],
        }

    def to_json_string(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False, sort_keys=True)

    def to_dot(self, name: str = "ribbon") -> str:
        lines = [f"graph {name} {{", "  node [shape=record];"]
        for i, v in enumerate(self.vertices):
            ports = "|".join(f"<p{j}> {self.edge_labels[h // 2]}" for j, h in enumerate(v.rotation))
            lines.append(f'  v{i} [label="{{{v.label}|{{{ports}}}}}"];')
            if v.marking is not None and v.valency > 1:
                j = v.marking
                k = (j + 1) % v.valency
                lines.append(f"  // × v{i} between p{j} and p{k}")
        pos = {h: (i, j) for i, v in enumerate(self.vertices) for j, h in enumerate(v.rotation)}
        for e, lab in enumerate(self.edge_labels):
            (i, j), (k, m) = pos[2 * e], pos[2 * e + 1]
            lines.append(f'  v{i}:p{j} -- v{k}:p{m} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _rotate_canonical(rotation: list[int], labels: list[str], marking: int | None):
    k = rotation.index(min(rotation))
    rot = tuple(rotation[k:] + rotation[:k])
    labs = tuple(labels[k:] + labels[:k]) if labels else ()
    mk = None if marking is None else (marking - k) % len(rotation)
    return rot, labs, mk


def beta_name(G: GentlePresentation, m) -> str:
    return f"β[{G.fmt(m)}]"


def trivial_threads(G: GentlePresentation) -> list[int]:
    """The vertices V0 (listed twice for an isolated vertex)."""
    q = G.quiver
    out = []
    for v in range(q.n_vertices):
        ins, outs = q.in_arrows(v), q.out_arrows(v)
        if not ins and not outs:
            out += [v, v]
        elif (len(ins), len(outs)) in ((0, 1), (1, 0)):
            out.append(v)
        elif len(ins) == 1 and len(outs) == 1 and not G.is_relation(ins[0], outs[0]):
            out.append(v)
    return out


def ribbon_graph(G: GentlePresentation) -> MarkedRibbonGraph:
    q = G.quiver
    used = [0] * q.n_vertices
    verts = []

    def half_edge(v):
        h = 2 * v + used[v]
        used[v] += 1
        return h

    for m in G.maximal_paths:
        vs = [m.source] + [q.arrows[a].target for a in m.arrows]
        rot = [half_edge(v) for v in vs]
        labels = [q.arrows[a].name for a in m.arrows] + [beta_name(G, m)]
        r, labs, mk = _rotate_canonical(rot, labels, len(rot) - 1)
        verts.append(RibbonVertex(G.fmt(m), r, mk, labs))
    for v in trivial_threads(G):
        verts.append(RibbonVertex(q.vertices[v], (half_edge(v),), 0, ()))
    if any(u != 2 for u in used):  # pragma: no cover - guaranteed by gentleness
        raise AssertionError("a quiver vertex does not appear exactly twice")
    return MarkedRibbonGraph(tuple(verts), tuple(q.vertices))


def euler_report(G: GentlePresentation) -> tuple[int, int, int]:
    """``(χ(Q), χ(Γ_A), |M̄|)``; the two Euler characteristics must agree."""
    R = ribbon_graph(G)
    chi_q = G.quiver.euler_characteristic()
    chi_r = R.euler_characteristic()
    if chi_q != chi_r or len(R.vertices) != 2 * G.quiver.n_vertices - G.quiver.n_arrows:
        raise AssertionError(f"Euler identities fail: {chi_q}, {chi_r}, {len(R.vertices)}")
    return chi_q, chi_r, len(R.vertices)


# --- Brauer graph algebras ---------------------------------------------------


@dataclass(frozen=True)
class BrauerPresentation:
    """Quiver with commutativity relations and monomial zero relations.

    Paths are tuples of arrow indices in traversal order.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, int, int], ...]
    commutations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    zeros: tuple[tuple[int, ...], ...]

    def arrow_signature(self) -> tuple:
        return tuple(sorted((s, t) for _, s, t in self.arrows))

    def renamed(self, names: Sequence[str]) -> "BrauerPresentation":
        arrows = tuple((names[i], s, t) for i, (_, s, t) in enumerate(self.arrows))
        return replace(self, arrows=arrows)

    def fmt(self, path: Sequence[int]) -> str:
        return "·".join(self.arrows[a][0] for a in reversed(path))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "vertices": list(self.vertices),
            "arrows": [{"name": n, "source": self.vertices[s], "target": self.vertices[t]} for n, s, t in self.arrows],
            "commutations": [[self.fmt(p), self.fmt(q)] for p, q in self.commutations],
            "zeros": [self.fmt(p) for p in self.zeros],
        }


def _angle_arrows(R: MarkedRibbonGraph):
    """Brauer arrows, one per angle of each vertex of valency at least 2."""
    arrows = []
    index = {}
    for i, v in enumerate(R.vertices):
        k = v.valency
        if k < 2:
            continue
        for j in range(k):
            s, t = v.rotation[j] // 2, v.rotation[(j + 1) % k] // 2
            name = v.angle_labels[j] if v.angle_labels else f"α{i}_{j}"
            index[(i, j)] = len(arrows)
            arrows.append((name, s, t))
    return arrows, index


def brauer_algebra(R: MarkedRibbonGraph) -> BrauerPresentation:
    """Brauer graph algebra of ``R`` (markings ignored, multiplicity one)."""
    arrows, index = _angle_arrows(R)
    pos = {h: (i, j) for i, v in enumerate(R.vertices) for j, h in enumerate(v.rotation)}

    def cycle(h):
        i, j = pos[h]
        k = R.vertices[i].valency
        if k < 2:
            return None
        return tuple(index[(i, (j + r) % k)] for r in range(k))

    comms, zeros = [], []
    for e in range(R.n_edges):
        c1, c2 = cycle(2 * e), cycle(2 * e + 1)
        if c1 and c2:
            comms.append((c1, c2))
        for c in (c1, c2):
            if c:
                zeros.append(c + (c[0],))
    consecutive = set()
    for i, v in enumerate(R.vertices):
        k = v.valency
        if k >= 2:
            for j in range(k):
                consecutive.add((index[(i, j)], index[(i, (j + 1) % k)]))
    for x, (_, _, tx) in enumerate(arrows):
        for y, (_, sy, _) in enumerate(arrows):
            if tx == sy and (x, y) not in consecutive:
                zeros.append((x, y))
    return BrauerPresentation(tuple(R.edge_labels), tuple(arrows), tuple(comms), tuple(zeros))


def trivial_extension_quiver(G: GentlePresentation) -> BrauerPresentation:
    """Quiver ``Q ∪ {β_m}`` of TA with its Brauer relations.

    For A = K the quiver of TA = K[α]/(α²) is a single loop; this case does
    not come from a ribbon graph with multiplicity one and is built by hand.
    """
    q = G.quiver
    if G.is_point():
        return BrauerPresentation(tuple(q.vertices), (("α", 0, 0),), (), ((0, 0),))
    arrows = [(a.name, a.source, a.target) for a in q.arrows]
    arrows += [(beta_name(G, m), m.target, m.source) for m in G.maximal_paths]
    B = brauer_algebra(ribbon_graph(G))
    # relabel the angle arrows by the names of Q ∪ {β_m}
    pos = {name: i for i, (name, _, _) in enumerate(arrows)}
    perm = [pos[name] for name, _, _ in B.arrows]

    def re(path):
        return tuple(perm[a] for a in path)

    return BrauerPresentation(
        tuple(q.vertices),
        tuple(arrows),
        tuple((re(p), re(r)) for p, r in B.commutations),
        tuple(re(p) for p in B.zeros),
    )


def round_trip_ok(G: GentlePresentation) -> bool:
    """The Brauer algebra of the unmarked ribbon graph is ``Q ∪ {β_m}`` with matching endpoints."""
    R = ribbon_graph(G)
    B = brauer_algebra(R.unmark())
    if G.is_point():
        # single edge between two valency-1 vertices: both Brauer cycles are trivial
        return len(R.vertices) == 2 and not B.arrows
    q = G.quiver
    expected = {a.name: (a.source, a.target) for a in q.arrows}
    for m in G.maximal_paths:
        expected[beta_name(G, m)] = (m.target, m.source)
    got = {name: (s, t) for name, s, t in B.arrows}
    if len(got) != len(B.arrows) or got != expected:
        return False
    # dim TA = 2 dim A = 2|E| + Σ val(val - 1) over ribbon vertices
    dim = 2 * R.n_edges + sum(v.valency * (v.valency - 1) for v in R.vertices)
    return dim == 2 * G.dimension()


# --- admissible cuts ----------------------------------------------------------


@dataclass(frozen=True)
class Cut:
    """One removed angle per ribbon vertex of valency at least 2."""

    angles: tuple[tuple[int, int], ...]
    algebra: GentlePresentation

    def marked_graph(self, R: MarkedRibbonGraph) -> MarkedRibbonGraph:
        marks = dict(self.angles)
        verts = tuple(replace(v, marking=marks.get(i, 0 if v.valency == 1 else None)) for i, v in enumerate(R.vertices))
        return MarkedRibbonGraph(verts, R.edge_labels)


def admissible_cuts(R: MarkedRibbonGraph) -> Iterator[Cut]:
    """All cut algebras of ``R`` in lexicographic order of the removed angles."""
    arrows, index = _angle_arrows(R)
    big = [i for i, v in enumerate(R.vertices) if v.valency >= 2]
    consecutive = set()
    for i in big:
        k = R.vertices[i].valency
        for j in range(k):
            consecutive.add((index[(i, j)], index[(i, (j + 1) % k)]))
    for choice in product(*(range(R.vertices[i].valency) for i in big)):
        removed = {index[(i, j)] for i, j in zip(big, choice)}
        keep = [x for x in range(len(arrows)) if x not in removed]
        rels = []
        for x in keep:
            for y in keep:
                if arrows[x][2] == arrows[y][1] and (x, y) not in consecutive:
                    rels.append((arrows[x][0], arrows[y][0]))
        arrs = [(arrows[x][0], R.edge_labels[arrows[x][1]], R.edge_labels[arrows[x][2]]) for x in keep]
        try:
            G = presentation(list(R.edge_labels), arrs, rels)
        except PresentationError as exc:  # pragma: no cover - cuts of Brauer graphs are gentle
            raise AssertionError(f"cut {choice} is not gentle: {exc}") from exc
        yield Cut(tuple(zip(big, choice)), G)


def find_alt_free_cut(R: MarkedRibbonGraph, field: Field) -> Cut:
    from .bases import alt_basis

    for cut in admissible_cuts(R):
        if not alt_basis(cut.algebra, field):
            return cut
    raise NoAltFreeCut("no admissible cut has Alt_B(DB) = 0")


def star_graph(k: int) -> MarkedRibbonGraph:
    """Two vertices joined by ``k`` parallel edges, embedded in the plane."""
    left = tuple(2 * i for i in range(k))
    right_seq = [2 * i + 1 for i in reversed(range(k))]
    right, _, _ = _rotate_canonical(right_seq, [], None)
    return MarkedRibbonGraph(
        (RibbonVertex("m", left), RibbonVertex("n", right)),
        tuple(f"e{i + 1}" for i in range(k)),
    )
