"""Quivers with length-2 monomial relations and their path combinatorics.

Paths compose right to left: the path written ``b·a`` runs ``a`` first.
Internally a path stores its arrows in traversal order (first arrow first),
which is also the order used for the canonical sort key.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import Field, SparseVector, Q


class PresentationError(ValueError):
    """Base class for rejected presentations."""

    code = "PresentationError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), **{k: v for k, v in self.details.items()}}


class MalformedQuiver(PresentationError):
    code = "MalformedQuiver"


class NonComposableRelation(PresentationError):
    code = "NonComposableRelation"


class DuplicateRelation(PresentationError):
    code = "DuplicateRelation"


class TooManyArrowsAtVertex(PresentationError):
    code = "TooManyArrowsAtVertex"


class AmbiguousContinuation(PresentationError):
    code = "AmbiguousContinuation"


class InfinitePathBasis(PresentationError):
    code = "InfinitePathBasis"


class DisconnectedQuiver(PresentationError):
    code = "DisconnectedQuiver"


class NotParallel(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @classmethod
    def build(cls, vertices: Sequence[str], arrows: Iterable) -> "Quiver":
        """Build from vertex names and ``(name, source, target)`` triples of names."""
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise MalformedQuiver("vertex names are not unique")
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for item in arrows:
            if isinstance(item, Arrow):
                out.append(item)
                continue
            if isinstance(item, dict):
                name, s, t = item["name"], item["source"], item["target"]
            else:
                name, s, t = item
            if s not in index or t not in index:
                raise MalformedQuiver(f"arrow {name!r} references an undeclared vertex", arrow=name)
            out.append(Arrow(str(name), index[s], index[t]))
        names = [a.name for a in out]
        if len(set(names)) != len(names):
            raise MalformedQuiver("arrow names are not unique")
        if set(names) & set(vertices):
            raise MalformedQuiver("arrow and vertex names overlap")
        return cls(vertices, tuple(out))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def valency(self, v: int) -> int:
        """Number of arrow ends at ``v`` (a loop counts twice)."""
        return sum((a.source == v) + (a.target == v) for a in self.arrows)

    def out_arrows(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def in_arrows(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for a in self.arrows:
                for x, y in ((a.source, a.target), (a.target, a.source)):
                    if x == v and y not in seen:
                        seen.add(y)
                        todo.append(y)
        return len(seen) == len(self.vertices)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_arrows


@dataclass(frozen=True, order=False)
class Path:
    """A path in a quiver; ``arrows`` in traversal order, possibly empty."""

    arrows: tuple[int, ...]
    source: int
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __lt__(self, other: "Path"):
        return self.sort_key() < other.sort_key()

    def is_cycle(self) -> bool:
        return self.source == self.target

    def contains_arrow(self, a: int) -> bool:
        return a in self.arrows

    def count(self, a: int) -> int:
        return self.arrows.count(a)

    def then(self, other: "Path") -> "Path":
        """Concatenation ``other · self`` (self first); assumes composable."""
        if self.target != other.source:
            raise ValueError("paths do not compose")
        return Path(self.arrows + other.arrows, self.source, other.target)


def vertex_path(v: int) -> Path:
    return Path((), v, v)


def arrow_path(quiver: Quiver, a: int) -> Path:
    arr = quiver.arrows[a]
    return Path((a,), arr.source, arr.target)


@dataclass(frozen=True)
class GentlePresentation:
    """A validated gentle presentation ``KQ/I`` with its path basis.

    ``relations`` holds pairs ``(first, second)`` of arrow indices: the zero
    path ``second · first``.
    """

    quiver: Quiver
    relations: frozenset
    path_basis: tuple[Path, ...]
    maximal_paths: tuple[Path, ...]

    # --- relation helpers -------------------------------------------------
    @cached_property
    def relation_paths(self) -> tuple[Path, ...]:
        q = self.quiver
        out = [Path((a, b), q.arrows[a].source, q.arrows[b].target) for a, b in self.relations]
        return tuple(sorted(out))

    @cached_property
    def arrows_in_relations(self) -> frozenset:
        return frozenset(x for r in self.relations for x in r)

    def is_relation(self, first: int, second: int) -> bool:
        return (first, second) in self.relations

    @cached_property
    def basis_set(self) -> frozenset:
        return frozenset(self.path_basis)

    def in_basis(self, p: Path) -> bool:
        return p in self.basis_set

    def is_allowed(self, arrows: Sequence[int]) -> bool:
        """True if the arrow sequence composes and avoids every relation."""
        q = self.quiver
        for x, y in zip(arrows, arrows[1:]):
            if q.arrows[x].target != q.arrows[y].source or (x, y) in self.relations:
                return False
        return True

    def path(self, arrows: Sequence[int], vertex: int | None = None) -> Path:
        q = self.quiver
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None:
                raise ValueError("trivial path needs a vertex")
            return vertex_path(vertex)
        return Path(arrows, q.arrows[arrows[0]].source, q.arrows[arrows[-1]].target)

    def multiply(self, second: Path, first: Path) -> Path | None:
        """The product ``second · first`` in A as a basis path, or None if zero."""
        if first.target != second.source:
            return None
        if first.arrows and second.arrows and (first.arrows[-1], second.arrows[0]) in self.relations:
            return None
        return Path(first.arrows + second.arrows, first.source, second.target)

    @property
    def vertex_paths(self) -> tuple[Path, ...]:
        return tuple(vertex_path(v) for v in range(self.quiver.n_vertices))

    @property
    def arrow_paths(self) -> tuple[Path, ...]:
        return tuple(arrow_path(self.quiver, a) for a in range(self.quiver.n_arrows))

    def valency(self, v: int) -> int:
        return self.quiver.valency(v)

    def loops(self) -> list[int]:
        return [i for i, a in enumerate(self.quiver.arrows) if a.source == a.target]

    # --- rendering ----------------------------------------------------------
    def fmt(self, p: Path) -> str:
        if p.is_trivial():
            return self.quiver.vertices[p.source]
        return "·".join(self.quiver.arrows[a].name for a in reversed(p.arrows))

    def dimension(self) -> int:
        return len(self.path_basis)

    def is_kronecker(self) -> bool:
        q = self.quiver
        return (
            q.n_vertices == 2
            and q.n_arrows == 2
            and not self.relations
            and q.arrows[0].source == q.arrows[1].source
            and q.arrows[0].target == q.arrows[1].target
            and q.arrows[0].source != q.arrows[0].target
        )

    def is_nakayama_two_cycle(self) -> bool:
        q = self.quiver
        if q.n_vertices != 2 or q.n_arrows != 2 or len(self.relations) != 2:
            return False
        a, b = q.arrows
        return a.source == b.target and a.target == b.source and a.source != a.target

    def is_point(self) -> bool:
        return self.quiver.n_vertices == 1 and self.quiver.n_arrows == 0

    def is_single_loop(self) -> bool:
        return self.quiver.n_vertices == 1 and self.quiver.n_arrows == 1


def _enumerate_paths(quiver: Quiver, relations: frozenset, limit: int) -> list[Path]:
    paths = [vertex_path(v) for v in range(quiver.n_vertices)]
    frontier = [Path((a,), arr.source, arr.target) for a, arr in enumerate(quiver.arrows)]
    while frontier:
        paths.extend(frontier)
        if len(paths) > limit:  # pragma: no cover - finiteness is checked first
            raise InfinitePathBasis("path basis exceeds enumeration limit")
        nxt = []
        for p in frontier:
            last = p.arrows[-1]
            for b in quiver.out_arrows(p.target):
                if (last, b) not in relations:
                    nxt.append(Path(p.arrows + (b,), p.source, quiver.arrows[b].target))
        frontier = nxt
    return sorted(paths)


def _has_free_cycle(quiver: Quiver, relations: frozenset) -> list[int] | None:
    """Return arrows of an oriented cycle with no relation on it, if any."""
    succ = {
        a: [b for b in quiver.out_arrows(arr.target) if (a, b) not in relations]
        for a, arr in enumerate(quiver.arrows)
    }
    color = {}
    stack_path: list[int] = []

    def dfs(a):
        color[a] = 1
        stack_path.append(a)
        for b in succ[a]:
            if color.get(b) == 1:
                return stack_path[stack_path.index(b):]
            if b not in color:
                res = dfs(b)
                if res:
                    return res
        stack_path.pop()
        color[a] = 2
        return None

    for a in range(quiver.n_arrows):
        if a not in color:
            res = dfs(a)
            if res:
                return res
    return None


def validate_gentle(quiver: Quiver, relations: Iterable) -> GentlePresentation:
    """Check the gentle axioms and compute the path basis and maximal paths.

    ``relations`` are pairs ``(first, second)`` given as arrow names or
    indices, each standing for the zero path ``second · first``.
    """
    names = {a.name: i for i, a in enumerate(quiver.arrows)}

    def idx(x):
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < quiver.n_arrows:
                return x
        elif x in names:
            return names[x]
        raise MalformedQuiver(f"relation names unknown arrow {x!r}", arrow=str(x))

    rels = []
    for r in relations:
        r = tuple(r)
        if len(r) != 2:
            raise MalformedQuiver(f"relation {r!r} is not a length-2 path")
        a, b = idx(r[0]), idx(r[1])
        if quiver.arrows[a].target != quiver.arrows[b].source:
            raise NonComposableRelation(
                f"relation {quiver.arrows[b].name}·{quiver.arrows[a].name} is not a path",
                relation=[quiver.arrows[a].name, quiver.arrows[b].name],
            )
        rels.append((a, b))
    if len(set(rels)) != len(rels):
        raise DuplicateRelation("relations are not pairwise distinct")
    relset = frozenset(rels)

    if not quiver.is_connected():
        raise DisconnectedQuiver("the underlying graph of the quiver is not connected")

    for v, name in enumerate(quiver.vertices):
        if len(quiver.out_arrows(v)) > 2 or len(quiver.in_arrows(v)) > 2:
            raise TooManyArrowsAtVertex(f"more than two arrows start or end at {name}", vertex=name)

    for a, arr in enumerate(quiver.arrows):
        after = quiver.out_arrows(arr.target)
        before = quiver.in_arrows(arr.source)
        free_after = [b for b in after if (a, b) not in relset]
        zero_after = [b for b in after if (a, b) in relset]
        free_before = [c for c in before if (c, a) not in relset]
        zero_before = [c for c in before if (c, a) in relset]
        for group, what in (
            (free_after, "nonzero continuations after"),
            (zero_after, "zero continuations after"),
            (free_before, "nonzero continuations before"),
            (zero_before, "zero continuations before"),
        ):
            if len(group) > 1:
                raise AmbiguousContinuation(
                    f"arrow {arr.name} has {len(group)} {what} it",
                    arrow=arr.name,
                    others=[quiver.arrows[b].name for b in group],
                )

    cyc = _has_free_cycle(quiver, relset)
    if cyc:
        raise InfinitePathBasis(
            "oriented cycle without relations: " + "·".join(quiver.arrows[a].name for a in reversed(cyc)),
            cycle=[quiver.arrows[a].name for a in cyc],
        )

    basis = _enumerate_paths(quiver, relset, limit=10_000)
    maximal = []
    for p in basis:
        if p.is_trivial():
            continue
        if any((p.arrows[-1], b) not in relset for b in quiver.out_arrows(p.target)):
            continue
        if any((c, p.arrows[0]) not in relset for c in quiver.in_arrows(p.source)):
            continue
        maximal.append(p)
    return GentlePresentation(quiver, relset, tuple(basis), tuple(maximal))


def presentation(vertices, arrows, relations) -> GentlePresentation:
    """Shorthand: ``presentation(["e1","e2"], [("b1","e1","e2")], [("a","b")])``."""
    return validate_gentle(Quiver.build(vertices, arrows), relations)


# --- substitution and pair enumeration -------------------------------------


def substitute(G: GentlePresentation, p: Path, a: int, q: Path, field: Field = Q) -> SparseVector:
    """``p^{(a,q)}``: replace one occurrence of arrow ``a`` in ``p`` by ``q``.

    Terms that leave the path basis are dropped.  ``p`` may be any path
    (relation paths included).
    """
    arr = G.quiver.arrows[a]
    if arr.source != q.source or arr.target != q.target:
        raise NotParallel(f"{arr.name} and {G.fmt(q)} are not parallel")
    terms: dict = {}
    for i, x in enumerate(p.arrows):
        if x != a:
            continue
        new = p.arrows[:i] + q.arrows + p.arrows[i + 1:]
        if not G.is_allowed(new):
            continue
        r = Path(new, p.source, p.target)
        terms[r] = terms.get(r, 0) + 1
    return SparseVector(terms, field)


def parallel_pairs(X: Iterable[Path], Y: Iterable[Path]) -> list[tuple[Path, Path]]:
    Y = sorted(Y)
    return [(x, y) for x in sorted(X) for y in Y if x.source == y.source and x.target == y.target]


def cyclic_pairs(X: Iterable[Path], Y: Iterable[Path]) -> list[tuple[Path, Path]]:
    Y = sorted(Y)
    return [(x, y) for x in sorted(X) for y in Y if x.source == y.target and x.target == y.source]


# --- fundamental cycles ------------------------------------------------------


@dataclass(frozen=True)
class CycleBasis:
    spanning_tree: frozenset
    cotree: tuple[int, ...]

    @property
    def cycle_count(self) -> int:
        return len(self.cotree)


def fundamental_cycles(quiver: Quiver) -> CycleBasis:
    """Breadth-first spanning tree from vertex 0; arrows scanned in declaration order."""
    if not quiver.is_connected():
        raise DisconnectedQuiver("the underlying graph of the quiver is not connected")
    seen = {0}
    tree = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i, a in enumerate(quiver.arrows):
            if a.source == a.target:
                continue
            if a.source == v:
                other = a.target
            elif a.target == v:
                other = a.source
            else:
                continue
            if other not in seen:
                seen.add(other)
                tree.add(i)
                queue.append(other)
    cotree = tuple(i for i in range(quiver.n_arrows) if i not in tree)
    return CycleBasis(frozenset(tree), cotree)
