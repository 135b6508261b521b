"""Exhaustive enumeration of small gentle presentations.

Quivers are enumerated up to reordering of arrows (arrow list is a sorted
multiset of (source, target) pairs); vertices are labelled, so e.g. both
orientations of the Kronecker quiver occur.  Relation sets are built vertex
by vertex from the locally admissible choices, then validated globally.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement, product
from typing import Iterator

from .quiver import GentlePresentation, PresentationError, presentation

ARROW_NAMES = "abcdfghijk"


def _vertex_names(n: int) -> list[str]:
    return [f"e{i + 1}" for i in range(n)]


def _connected(n: int, pairs) -> bool:
    adj = {v: set() for v in range(n)}
    for s, t in pairs:
        adj[s].add(t)
        adj[t].add(s)
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def _local_relation_sets(v: int, pairs) -> list[list[tuple[int, int]]]:
    ins = [i for i, (s, t) in enumerate(pairs) if t == v]
    outs = [i for i, (s, t) in enumerate(pairs) if s == v]
    comp = [(x, y) for x in ins for y in outs]
    choices = []
    for mask in range(1 << len(comp)):
        rel = {comp[k] for k in range(len(comp)) if mask >> k & 1}
        ok = True
        for x in ins:
            zero = sum((x, y) in rel for y in outs)
            free = len(outs) - zero
            if zero > 1 or free > 1:
                ok = False
        for y in outs:
            zero = sum((x, y) in rel for x in ins)
            free = len(ins) - zero
            if zero > 1 or free > 1:
                ok = False
        if ok:
            choices.append(sorted(rel))
    return choices


def enumerate_corpus(max_vertices: int = 3, max_arrows: int = 4) -> Iterator[tuple[str, GentlePresentation]]:
    """Yield ``(name, presentation)`` for every connected gentle presentation in bounds."""
    for n in range(1, max_vertices + 1):
        verts = _vertex_names(n)
        all_pairs = [(s, t) for s in range(n) for t in range(n)]
        for m in range(0, max_arrows + 1):
            for pairs in combinations_with_replacement(all_pairs, m):
                if not _connected(n, pairs):
                    continue
                ins = [0] * n
                outs = [0] * n
                for s, t in pairs:
                    outs[s] += 1
                    ins[t] += 1
                if max(ins + outs, default=0) > 2:
                    continue
                locals_ = [_local_relation_sets(v, pairs) for v in range(n)]
                arrows = [(ARROW_NAMES[i], verts[s], verts[t]) for i, (s, t) in enumerate(pairs)]
                for combo in product(*locals_):
                    rel = [r for part in combo for r in part]
                    named = [(ARROW_NAMES[x], ARROW_NAMES[y]) for x, y in rel]
                    try:
                        G = presentation(verts, arrows, named)
                    except PresentationError:
                        continue
                    yield _name(n, pairs, rel), G


def _name(n: int, pairs, rel) -> str:
    q = ",".join(f"{ARROW_NAMES[i]}:{s + 1}>{t + 1}" for i, (s, t) in enumerate(pairs))
    r = ",".join(f"{ARROW_NAMES[y]}{ARROW_NAMES[x]}" for x, y in rel)
    return f"n{n}[{q}]I{{{r}}}"


def corpus(max_vertices: int = 3, max_arrows: int = 4) -> list[tuple[str, GentlePresentation]]:
    return list(enumerate_corpus(max_vertices, max_arrows))


_NAME = re.compile(r"^n(\d+)\[(.*)\]I\{(.*)\}$")


def from_name(name: str) -> GentlePresentation:
    """Rebuild a presentation from its corpus name, e.g. ``n2[a:1>2,b:2>1]I{ba,ab}``.

    A relation ``yx`` is the zero path ``y·x``.
    """
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"not a corpus name: {name!r}")
    n, q, r = int(m.group(1)), m.group(2), m.group(3)
    verts = _vertex_names(n)
    arrows = []
    for item in filter(None, q.split(",")):
        a, st = item.split(":")
        s, t = st.split(">")
        arrows.append((a, verts[int(s) - 1], verts[int(t) - 1]))
    rels = [(x[1], x[0]) for x in filter(None, r.split(","))]
    return presentation(verts, arrows, rels)
