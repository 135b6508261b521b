"""Derivations of A and of the trivial extension TA = A ⋉ DA.

This is the bracket oracle: basis classes are realised as honest
derivations through the comparison maps, brackets are commutators of
linear maps, and the results are read back through the decomposition of
HH^1(TA) into its four summands.  Nothing here consults the bracket tables.

Linear maps are dicts ``key -> {key: coeff}``.  Keys of TA are ``("A", p)``
for ``p`` in B and ``("D", q)`` for the dual basis vector ``q*``.
"""

from __future__ import annotations

from .algebra import elem_left_act, left_act, right_act, sandwich
from .coords import TAVector
from .linalg import Field, add_into
from .quiver import GentlePresentation, Path, substitute


class NotADerivation(ArithmeticError):
    pass


# --- comparison maps ------------------------------------------------------------


def omega(G: GentlePresentation, v, field: Field) -> dict:
    """``ε -> Σ λ ε^{(a,α)}`` on every basis path; ``v`` lives in K(Q1||B)."""
    out = {}
    for p in G.path_basis:
        img: dict = {}
        for (a, alpha), c in v.items():
            for r, d in substitute(G, p, a.arrows[0], alpha, field).items():
                add_into(img, r, c * d, field)
        out[p] = img
    return out


def omega_dual(G: GentlePresentation, v, field: Field) -> dict:
    """``ε = a_n…a_1 -> Σ_i a*(a_i) a_n…a_{i+1} α* a_{i-1}…a_1``, a map A -> DA."""
    arrows = G.quiver.arrows
    out = {}
    for p in G.path_basis:
        vs = [p.source] + [arrows[x].target for x in p.arrows]
        img: dict = {}
        for (a, alpha), c in v.items():
            ai = a.arrows[0]
            for j, x in enumerate(p.arrows):
                if x != ai:
                    continue
                right = Path(p.arrows[:j], p.source, vs[j])
                left = Path(p.arrows[j + 1:], vs[j + 1], p.target)
                y = sandwich(left, alpha, right)
                if y is not None:
                    add_into(img, y, c, field)
        out[p] = img
    return out


def varsigma(G: GentlePresentation, fmap: dict, field: Field) -> dict:
    """Read off coefficients on arrows: ``(a, α) -> λ`` when ``a -> λ α + …``."""
    out: dict = {}
    for a in G.arrow_paths:
        for alpha, c in fmap.get(a, {}).items():
            add_into(out, (a, alpha), c, field)
    return out


def dual_of(G: GentlePresentation, phi: dict, field: Field) -> dict:
    """``D(φ): q* -> q* ∘ φ`` for a linear map φ on A."""
    out: dict = {q: {} for q in G.path_basis}
    for y, img in phi.items():
        for q, c in img.items():
            add_into(out[q], y, c, field)
    return out


# --- derivations of A -----------------------------------------------------------


def compose(outer: dict, inner: dict, field: Field) -> dict:
    out = {}
    for k, img in inner.items():
        acc: dict = {}
        for k2, c in img.items():
            for k3, d in outer.get(k2, {}).items():
                add_into(acc, k3, c * d, field)
        out[k] = acc
    return out


def commutator(x: dict, y: dict, field: Field) -> dict:
    xy = compose(x, y, field)
    yx = compose(y, x, field)
    out = {}
    for k in set(xy) | set(yx):
        acc = dict(xy.get(k, {}))
        for k2, c in yx.get(k, {}).items():
            add_into(acc, k2, -c, field)
        out[k] = acc
    return out


def check_derivation_A(G: GentlePresentation, phi: dict, field: Field) -> None:
    """Leibniz rule ``φ(pq) = φ(p) q + p φ(q)`` on all basis products."""
    B = G.path_basis
    for p in B:
        for q in B:
            pq = G.multiply(p, q)
            lhs = dict(phi.get(pq, {})) if pq is not None else {}
            rhs: dict = {}
            for r, c in phi.get(p, {}).items():
                s = G.multiply(r, q)
                if s is not None:
                    add_into(rhs, s, c, field)
            for r, c in phi.get(q, {}).items():
                s = G.multiply(p, r)
                if s is not None:
                    add_into(rhs, s, c, field)
            if lhs != rhs:
                raise NotADerivation(f"Leibniz fails on {G.fmt(p)} · {G.fmt(q)}")


# --- derivations of TA ------------------------------------------------------------


def _ta_keys(G: GentlePresentation):
    return [("A", p) for p in G.path_basis] + [("D", q) for q in G.path_basis]


def _ta_product(G: GentlePresentation, x, y):
    """Product of two TA basis vectors, as a key or None."""
    (sx, p), (sy, q) = x, y
    if sx == "A" and sy == "A":
        r = G.multiply(p, q)
        return None if r is None else ("A", r)
    if sx == "A" and sy == "D":
        r = left_act(p, q)
        return None if r is None else ("D", r)
    if sx == "D" and sy == "A":
        r = right_act(p, q)
        return None if r is None else ("D", r)
    return None


def check_derivation_TA(G: GentlePresentation, delta: dict, field: Field) -> None:
    keys = _ta_keys(G)
    for x in keys:
        for y in keys:
            xy = _ta_product(G, x, y)
            lhs = dict(delta.get(xy, {})) if xy is not None else {}
            rhs: dict = {}
            for k, c in delta.get(x, {}).items():
                r = _ta_product(G, k, y)
                if r is not None:
                    add_into(rhs, r, c, field)
            for k, c in delta.get(y, {}).items():
                r = _ta_product(G, x, k)
                if r is not None:
                    add_into(rhs, r, c, field)
            if lhs != rhs:
                raise NotADerivation(f"Leibniz fails on {x} · {y}")


def realize(G: GentlePresentation, x: TAVector, field: Field) -> dict:
    """The derivation of TA representing a quadruple (sum of the four blocks)."""
    delta: dict = {k: {} for k in _ta_keys(G)}
    B = G.path_basis
    if x.center:
        for q in B:
            for y, c in elem_left_act(x.center, {q: 1}, field).items():
                add_into(delta[("D", q)], ("D", y), c, field)
    if x.h1:
        phi = omega(G, x.h1, field)
        for p, img in phi.items():
            for r, c in img.items():
                add_into(delta[("A", p)], ("A", r), c, field)
        for q, img in dual_of(G, phi, field).items():
            for y, c in img.items():
                add_into(delta[("D", q)], ("D", y), -c, field)
    if x.h1dual:
        for p, img in omega_dual(G, x.h1dual, field).items():
            for y, c in img.items():
                add_into(delta[("A", p)], ("D", y), c, field)
    if x.alt:
        for (q, r), c in x.alt.items():
            add_into(delta[("D", q)], ("A", r), c, field)
    return delta


def decompose(G: GentlePresentation, delta: dict, field: Field) -> TAVector:
    """Split a derivation of TA into its Z, HH_1^*, HH^1 and Alt components."""
    B = G.path_basis
    aa = {p: {} for p in B}
    ad = {p: {} for p in B}
    da: dict = {}
    dd = {q: {} for q in B}
    for (s, p), img in delta.items():
        for (t, r), c in img.items():
            if s == "A" and t == "A":
                add_into(aa[p], r, c, field)
            elif s == "A":
                add_into(ad[p], r, c, field)
            elif t == "A":
                add_into(da, (p, r), c, field)
            else:
                add_into(dd[p], r, c, field)
    # ζ = D_{DA,DA} + D(D_{A,A}) is multiplication by a central element
    zeta = dual_of(G, aa, field)
    for q, img in dd.items():
        for y, c in img.items():
            add_into(zeta[q], y, c, field)
    z = _central_from_module_map(G, zeta, field)
    return TAVector(center=z, h1dual=varsigma(G, ad, field), h1=varsigma(G, aa, field), alt=da)


def _central_from_module_map(G: GentlePresentation, zeta: dict, field: Field) -> dict:
    """Find z with ζ(f) = z·f for all f; raise if ζ is not of that form."""
    B = G.path_basis
    z: dict = {}
    for r in B:
        # (z·r*)(e) = r*(e z) = coefficient of r in e·z for e = t(r)
        c = zeta[r].get(Path((), r.target, r.target), 0)
        if c:
            add_into(z, r, c, field)
    for q in B:
        expect = elem_left_act(z, {q: 1}, field)
        if expect != {k: v for k, v in zeta[q].items() if v}:
            raise NotADerivation("DA-block is not multiplication by a central element")
    return z
