"""Multiplication in A = KQ/I and the A-bimodule structure of DA.

Elements of A are dicts ``Path -> scalar`` over the path basis; elements of
DA are dicts over the same keys read as dual basis vectors ``p*``.
"""

from __future__ import annotations

from typing import Mapping

from .linalg import Field, add_into
from .quiver import GentlePresentation, Path


def mul(G: GentlePresentation, second: Path, first: Path) -> Path | None:
    """Basis path ``second · first`` (first runs first) or None if zero."""
    return G.multiply(second, first)


def left_act(x: Path, q: Path) -> Path | None:
    """``x · q*`` as a dual basis vector: ``y*`` with ``q = y · x``."""
    n = len(x.arrows)
    if q.source != x.source:
        return None
    if n == 0:
        return q
    if q.arrows[:n] != x.arrows:
        return None
    rest = q.arrows[n:]
    return Path(rest, x.target, q.target)


def right_act(q: Path, x: Path) -> Path | None:
    """``q* · x`` as a dual basis vector: ``y*`` with ``q = x · y``."""
    n = len(x.arrows)
    if q.target != x.target:
        return None
    if n == 0:
        return q
    if len(q.arrows) < n or q.arrows[len(q.arrows) - n:] != x.arrows:
        return None
    rest = q.arrows[: len(q.arrows) - n]
    return Path(rest, q.source, x.source)


def elem_mul(G: GentlePresentation, u: Mapping, v: Mapping, field: Field) -> dict:
    """Product ``u · v`` of two elements of A (v runs first)."""
    out: dict = {}
    for p, c in u.items():
        for q, d in v.items():
            r = G.multiply(p, q)
            if r is not None:
                add_into(out, r, c * d, field)
    return out


def elem_left_act(u: Mapping, f: Mapping, field: Field) -> dict:
    """``u · f`` for u in A and f in DA."""
    out: dict = {}
    for x, c in u.items():
        for q, d in f.items():
            y = left_act(x, q)
            if y is not None:
                add_into(out, y, c * d, field)
    return out


def elem_right_act(f: Mapping, u: Mapping, field: Field) -> dict:
    """``f · u`` for f in DA and u in A."""
    out: dict = {}
    for q, d in f.items():
        for x, c in u.items():
            y = right_act(q, x)
            if y is not None:
                add_into(out, y, c * d, field)
    return out


def sandwich(theta: Path, q: Path, nu: Path) -> Path | None:
    """``θ · q* · ν`` as a dual basis vector, i.e. ``x*`` with ``q = ν · x · θ``."""
    y = left_act(theta, q)
    if y is None:
        return None
    return right_act(y, nu)
