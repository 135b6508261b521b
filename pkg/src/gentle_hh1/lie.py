"""Lie structure of HH^1(A) and HH^1(TA).

``bracket_hh1`` is the substitution bracket on K(Q1||B).  ``bracket_tga``
evaluates brackets of basis elements of HH^1(TA) from a rule list that
mirrors the bracket tables cell by cell.  ``bracket_oracle`` and
``bracket_tga_oracle`` recompute the same brackets as commutators of
derivations.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping, Sequence

from .bases import CohomologyElement, summand_dims
from .coords import TAVector, coordinates
from .derivations import (
    check_derivation_A,
    check_derivation_TA,
    commutator,
    decompose,
    omega,
    realize,
    varsigma,
)
from .linalg import Echelon, Field, SparseVector, add_into
from .oracle import d1_matrix, reduce_mod_coboundaries
from .quiver import GentlePresentation, Path, substitute, vertex_path


class NotACocycle(ValueError):
    pass


class JacobiViolation(ArithmeticError):
    pass


class UnknownTagPair(KeyError):
    pass


# --- HH^1(A) -----------------------------------------------------------------------


def _check_cocycle(G: GentlePresentation, x: Mapping, field: Field) -> None:
    if d1_matrix(G, field).apply(x):
        raise NotACocycle("vector is not in ker d¹")


def raw_bracket(G: GentlePresentation, x: Mapping, y: Mapping, field: Field) -> dict:
    """``[(a,p),(b,q)] = (b, q^{(a,p)}) - (a, p^{(b,q)})`` extended bilinearly, unreduced."""
    out: dict = {}
    for (a, p), c in x.items():
        for (b, q), d in y.items():
            cd = c * d
            for r, e in substitute(G, q, a.arrows[0], p, field).items():
                add_into(out, (b, r), cd * e, field)
            for r, e in substitute(G, p, b.arrows[0], q, field).items():
                add_into(out, (a, r), -cd * e, field)
    return out


def bracket_hh1(x: Mapping, y: Mapping, G: GentlePresentation, field: Field) -> SparseVector:
    """Bracket of two cocycles, as the canonical representative modulo Im d⁰."""
    _check_cocycle(G, x, field)
    _check_cocycle(G, y, field)
    return reduce_mod_coboundaries(raw_bracket(G, x, y, field), G, field)


def bracket_oracle(x: Mapping, y: Mapping, G: GentlePresentation, field: Field, check: bool = True) -> SparseVector:
    """Commutator of the derivations ω₁(x), ω₁(y), read back through ς₁."""
    _check_cocycle(G, x, field)
    _check_cocycle(G, y, field)
    fx, fy = omega(G, x, field), omega(G, y, field)
    if check:
        check_derivation_A(G, fx, field)
        check_derivation_A(G, fy, field)
    c = commutator(fx, fy, field)
    if check:
        check_derivation_A(G, c, field)
    return reduce_mod_coboundaries(varsigma(G, c, field), G, field)


# --- the bracket tables as rules ------------------------------------------------------

RANK = {"Center": 0, "H1": 1, "H1Dual": 2, "Alt": 3}


@dataclass(frozen=True)
class Rule:
    group: str
    row: str
    col: str
    formula: str
    fn: Callable


def _arrow(x: CohomologyElement) -> int:
    return x.payload[0].arrows[0]


def _in(a: int, p: Path) -> bool:
    return a in p.arrows


def _zero(G, f, x, y):
    return None


def _zh_cycle(G, f, x, y):
    # -(e_i, p^{(a',q')})
    p = x.payload[0]
    a = y.payload[0]
    q = a if y.kind == "FundCycle" else vertex_path(a.source)
    z = {r: f(-c) for r, c in substitute(G, p, a.arrows[0], q, f).items()}
    return TAVector(center=z)


def _identity_keeps(G, f, x, y):
    return coordinates(G, f).element(y)


def _identity_negates(G, f, x, y):
    v = coordinates(G, f).element(y)
    v.alt = {k: f(-c) for k, c in v.alt.items()}
    return v


def _du_cycle_c2dual(G, f, x, y):
    p = x.payload[0]
    a = y.payload[0]
    if p == a:
        return TAVector(h1dual={(a, vertex_path(a.source)): f(1)})
    return None


def _du_fund_loopidem(G, f, x, y):
    a, (a2, e) = x.payload[0], y.payload
    if a == a2:
        return TAVector(h1dual={(a, e): f(-1)})
    return None


def _du_fund_skew(G, f, x, y):
    a = x.payload[0]
    if a in y.payload:
        v = y.vector(G, f)
        return TAVector(h1dual={k: f(-c) for k, c in v.items()})
    return None


def _du_c2loop_loopidem(G, f, x, y):
    a, a2 = x.payload[0], y.payload[0]
    if a == a2:
        return TAVector(h1dual={(a, a): f(-1)})
    return None


def _al_cycle_psiep(G, f, x, y):
    p = x.payload[0]
    if y.payload[1] == p:
        return TAVector(alt={(p, p): f(-1)})
    return None


def _al_fund_phi(G, f, x, y):
    a = _arrow(x)
    p, q = y.payload
    if _in(a, p) or _in(a, q):
        return TAVector(alt=dict(y.vector(G, f)))
    return None


def _al_fund_psiep(G, f, x, y):
    if _in(_arrow(x), y.payload[1]):
        return TAVector(alt=dict(y.vector(G, f)))
    return None


def _al_c2loop_psipp(G, f, x, y):
    a = x.payload[0]
    if y.payload[0] == a:
        return coordinates(G, f).element(CohomologyElement("Alt", "Psi_eP", (vertex_path(a.source), a)))
    return None


def _al_skew_phi(G, f, x, y):
    a, b = x.payload
    p, q = y.payload
    if (a, b) == (p, q):
        return TAVector(h1={(a, a): f(2)})
    if (a, b) == (q, p):
        return TAVector(h1={(b, b): f(-2)})
    return None


def _al_loopidem_psipp(G, f, x, y):
    a, e = x.payload
    if y.payload[0] == a:
        return TAVector(center={a: f(1)})
    return None


def _al_loopidem_psiep(G, f, x, y):
    a, e = x.payload
    if y.payload[1] == a:
        return TAVector(center={e: f(1)}, h1={(a, a): f(-1)})
    return None


def _al_c2dual_psipp(G, f, x, y):
    a = x.payload[0]
    if y.payload[0] == a:
        return TAVector(h1={(a, a): f(-1)})
    return None


def _al_c2dual_psiep(G, f, x, y):
    a = x.payload[0]
    if y.payload[1] == a:
        return TAVector(h1={(a, vertex_path(a.source)): f(-1)})
    return None


H1_KINDS = ("Char2Loop", "FundCycle", "Deviation", "Shortcut")
DUAL_KINDS = ("Char2LoopDual", "LoopAtIdempotent", "SkewPair")
ALT_KINDS = ("Phi", "Psi_PP", "Psi_eP")

RULES: list[Rule] = []


def _rule(group, row, col, formula, fn=_zero):
    RULES.append(Rule(group, row, col, formula, fn))


# bracket between Z(A) and HH^1(A)
_rule("center-h1", "CentralCycle", "Char2Loop", "-(e_i, p^(a',e_j))", _zh_cycle)
_rule("center-h1", "CentralCycle", "FundCycle", "-(e_i, p^(a',a'))", _zh_cycle)
_rule("center-h1", "CentralCycle", "Deviation", "0")
_rule("center-h1", "CentralCycle", "Shortcut", "0")
for _k in H1_KINDS:
    _rule("center-h1", "Identity", _k, "0")

# brackets with HH_1(A)^*
_rule("dual", "CentralCycle", "Char2LoopDual", "(p, e_i*) if p = a'", _du_cycle_c2dual)
_rule("dual", "CentralCycle", "LoopAtIdempotent", "0")
_rule("dual", "CentralCycle", "SkewPair", "0")
for _k in DUAL_KINDS:
    _rule("dual", "Identity", _k, "x", _identity_keeps)
    _rule("dual", "Shortcut", _k, "0")
    _rule("dual", "Deviation", _k, "0")
_rule("dual", "FundCycle", "Char2LoopDual", "0")
_rule("dual", "FundCycle", "LoopAtIdempotent", "-(a, e_j*) if a = a'", _du_fund_loopidem)
_rule("dual", "FundCycle", "SkewPair", "-(a',b'*) + (b',a'*) if a in {a',b'}", _du_fund_skew)
_rule("dual", "Char2Loop", "Char2LoopDual", "0")
_rule("dual", "Char2Loop", "LoopAtIdempotent", "-(a, a*) if a = a'", _du_c2loop_loopidem)
_rule("dual", "Char2Loop", "SkewPair", "0")

# brackets with Alt_A(DA)
_rule("alt", "CentralCycle", "Phi", "0")
_rule("alt", "CentralCycle", "Psi_PP", "0")
_rule("alt", "CentralCycle", "Psi_eP", "-psi_{p,p} if p = p'", _al_cycle_psiep)
for _k in ALT_KINDS:
    _rule("alt", "Identity", _k, "-psi", _identity_negates)
    _rule("alt", "Shortcut", _k, "0")
    _rule("alt", "Deviation", _k, "0")
_rule("alt", "FundCycle", "Phi", "phi if a in p' or q'", _al_fund_phi)
_rule("alt", "FundCycle", "Psi_PP", "0")
_rule("alt", "FundCycle", "Psi_eP", "psi_{e,p'} if a in p'", _al_fund_psiep)
_rule("alt", "Char2Loop", "Phi", "0")
_rule("alt", "Char2Loop", "Psi_PP", "psi_{e_i,a} if a = p'", _al_c2loop_psipp)
_rule("alt", "Char2Loop", "Psi_eP", "0")
_rule("alt", "SkewPair", "Phi", "2(a,a) if (a,b) = (p',q'); -2(b,b) if (a,b) = (q',p')", _al_skew_phi)
_rule("alt", "SkewPair", "Psi_PP", "0")
_rule("alt", "SkewPair", "Psi_eP", "0")
_rule("alt", "LoopAtIdempotent", "Phi", "0")
_rule("alt", "LoopAtIdempotent", "Psi_PP", "(e_i, a) if a = p'", _al_loopidem_psipp)
_rule("alt", "LoopAtIdempotent", "Psi_eP", "(e_i,e_i) - (a,a) if a = p'", _al_loopidem_psiep)
_rule("alt", "Char2LoopDual", "Phi", "0")
_rule("alt", "Char2LoopDual", "Psi_PP", "-(a,a) if a = p'", _al_c2dual_psipp)
_rule("alt", "Char2LoopDual", "Psi_eP", "-(a, e_j) if a = p'", _al_c2dual_psiep)

RULE_INDEX: dict = {(r.row, r.col): r for r in RULES}


def bracket_tga(x: CohomologyElement, y: CohomologyElement, G: GentlePresentation, field: Field) -> SparseVector:
    """Bracket of two basis elements of HH^1(TA), in the canonical TA basis."""
    co = coordinates(G, field)
    if RANK[x.summand] > RANK[y.summand]:
        return bracket_tga(y, x, G, field).scale(-1)
    if x.summand == y.summand:
        if x.summand != "H1":
            return SparseVector({}, field)
        raw = raw_bracket(G, x.vector(G, field), y.vector(G, field), field)
        return co.h1(raw)
    rule = RULE_INDEX.get((x.kind, y.kind))
    if rule is None:
        raise UnknownTagPair((x.kind, y.kind))
    out = rule.fn(G, field, x, y)
    return SparseVector({}, field) if out is None else co.ta(out)


def bracket_tga_oracle(
    x: CohomologyElement, y: CohomologyElement, G: GentlePresentation, field: Field, check: bool = True
) -> SparseVector:
    """Commutator of the TA derivations realising ``x`` and ``y``."""
    co = coordinates(G, field)
    dx = realize(G, co.element(x), field)
    dy = realize(G, co.element(y), field)
    if check:
        check_derivation_TA(G, dx, field)
        check_derivation_TA(G, dy, field)
    c = commutator(dx, dy, field)
    if check:
        check_derivation_TA(G, c, field)
    return co.ta(decompose(G, c, field))


# --- Lie algebras --------------------------------------------------------------------


@dataclass
class SeriesReport:
    kind: str
    dims: list[int]

    @property
    def terminated(self) -> bool:
        return self.dims[-1] == 0

    @property
    def depth(self) -> int:
        return len(self.dims) - 1

    def to_json(self) -> dict:
        return {"type": self.kind, "dims": self.dims, "terminated": self.terminated, "depth": self.depth}


@dataclass
class LieAlgebra:
    """Structure constants over an ordered basis; ``table[(i, j)] = {k: c}``."""

    labels: list[str]
    field: Field
    table: dict = dc_field(default_factory=dict)
    basis: list = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, u: Mapping[int, object], v: Mapping[int, object]) -> dict:
        f = self.field
        out: dict = {}
        for i, c in u.items():
            for j, d in v.items():
                for k, e in self.table.get((i, j), {}).items():
                    add_into(out, k, c * d * e, f)
        return out

    def verify(self) -> None:
        f = self.field
        n = self.dim
        for i in range(n):
            if self.table.get((i, i)):
                raise JacobiViolation(f"[x{i}, x{i}] != 0")
            for j in range(n):
                a = self.table.get((i, j), {})
                b = self.table.get((j, i), {})
                s = dict(a)
                for k, c in b.items():
                    add_into(s, k, c, f)
                if s:
                    raise JacobiViolation(f"antisymmetry fails at ({i},{j})")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    x, y, z = {i: 1}, {j: 1}, {k: 1}
                    tot: dict = {}
                    for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                        for kk, c in self.bracket(p, self.bracket(q, r)).items():
                            add_into(tot, kk, c, f)
                    if tot:
                        raise JacobiViolation(f"Jacobi fails on ({i},{j},{k})")

    def _span(self, vectors) -> Echelon:
        ech = Echelon(self.field, {i: i for i in range(self.dim)})
        for v in vectors:
            ech.insert(v)
        return ech

    def _bracket_span(self, U: Sequence[dict], V: Sequence[dict]) -> list[dict]:
        return self._span(self.bracket(u, v) for u in U for v in V).sorted_rows()

    def derived_series(self) -> SeriesReport:
        cur = [{i: self.field(1)} for i in range(self.dim)]
        dims = [len(cur)]
        while dims[-1]:
            cur = self._bracket_span(cur, cur)
            dims.append(len(cur))
            if dims[-1] == dims[-2]:
                break
        return SeriesReport("derived", dims)

    def lower_central_series(self) -> SeriesReport:
        full = [{i: self.field(1)} for i in range(self.dim)]
        cur = full
        dims = [len(cur)]
        while dims[-1]:
            cur = self._bracket_span(full, cur)
            dims.append(len(cur))
            if dims[-1] == dims[-2]:
                break
        return SeriesReport("lower-central", dims)

    def is_abelian(self) -> bool:
        return not any(self.table.values())

    def center_dim(self) -> int:
        # x in the centre iff [x, b_j] = 0 for all j: kernel of a linear map
        n = self.dim
        eqs: dict = {}
        for i in range(n):
            for j in range(n):
                for k, c in self.table.get((i, j), {}).items():
                    eqs.setdefault((j, k), {})[i] = c
        return n - self._span(eqs.values()).rank

    def change_basis(self, new: Sequence[Mapping[int, object]], labels: Sequence[str] | None = None) -> "LieAlgebra":
        """Structure constants with respect to the vectors ``new`` (old coordinates)."""
        f = self.field
        ech = Echelon(f, {i: i for i in range(self.dim)}, track=True)
        for v in new:
            if not ech.insert(v):
                raise ValueError("new basis is not independent")
        if ech.rank != self.dim:
            raise ValueError("new basis does not span")
        table = {}
        for i, u in enumerate(new):
            for j, v in enumerate(new):
                w = ech.express(self.bracket(u, v))
                if w:
                    table[(i, j)] = w
        return LieAlgebra(list(labels or [f"y{i}" for i in range(len(new))]), f, table)

    def dense_table(self) -> list[list[dict]]:
        return [[self.table.get((i, j), {}) for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self) -> dict:
        rows = []
        for (i, j), vec in sorted(self.table.items()):
            for k, c in sorted(vec.items()):
                rows.append([i, j, k, str(c)])
        return {"basis": self.labels, "field": self.field.to_json(), "constants": rows}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "k", "coefficient"])
        for (i, j), vec in sorted(self.table.items()):
            for k, c in sorted(vec.items()):
                w.writerow([i, j, k, c])
        return buf.getvalue()


def _table_from(basis, bracket, field: Field) -> dict:
    index = {b: i for i, b in enumerate(basis)}
    table = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if i == j:
                continue
            if j < i:
                if (j, i) in table:
                    table[(i, j)] = {k: field(-c) for k, c in table[(j, i)].items()}
                continue
            v = bracket(x, y)
            if v:
                table[(i, j)] = {index[k]: c for k, c in v.items()}
    return table


def structure_constants(G: GentlePresentation, field: Field, which: str = "A", oracle: bool = False) -> LieAlgebra:
    """Tabulate the bracket on the canonical basis of HH^1(A) or HH^1(TA); Jacobi is verified."""
    co = coordinates(G, field)
    if which == "A":
        basis = co.h1_basis

        def br(x, y):
            u, v = x.vector(G, field), y.vector(G, field)
            raw = bracket_oracle(u, v, G, field) if oracle else raw_bracket(G, u, v, field)
            return co.h1(raw)

    elif which == "TA":
        basis = co.ta_basis

        def br(x, y):
            if oracle:
                return bracket_tga_oracle(x, y, G, field)
            return bracket_tga(x, y, G, field)

    else:
        raise ValueError("which must be 'A' or 'TA'")
    L = LieAlgebra([b.label(G) for b in basis], field, _table_from(basis, br, field), list(basis))
    L.verify()
    return L


# --- classification ------------------------------------------------------------------------


@dataclass
class Classification:
    field: str
    dims: dict
    solvable_A: bool
    solvable_TA: bool
    nilpotent_TA: bool
    abelian_TA: bool
    gl2_flag: bool
    conditions: dict
    conditions_hold: bool
    series: dict

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "dims": self.dims,
            "solvable_A": self.solvable_A,
            "solvable_TA": self.solvable_TA,
            "nilpotent_TA": self.nilpotent_TA,
            "abelian_TA": self.abelian_TA,
            "gl2_flag": self.gl2_flag,
            "nilpotency_conditions": self.conditions,
            "nilpotency_conditions_hold": self.conditions_hold,
            "series": {k: v.to_json() for k, v in self.series.items()},
        }


def nilpotency_conditions(G: GentlePresentation, field: Field) -> dict:
    co = coordinates(G, field)
    return {
        "center_is_K": len(co.center_basis) == 1,
        "hh1_dual_zero": not co.h1dual_basis,
        "alt_zero": not co.alt_basis,
        "hh1_diagonal": all(x.kind == "FundCycle" for x in co.h1_basis),
    }


def classify(G: GentlePresentation, field: Field) -> Classification:
    LA = structure_constants(G, field, "A")
    LT = structure_constants(G, field, "TA")
    dA, dT, lT = LA.derived_series(), LT.derived_series(), LT.lower_central_series()
    solvable_TA = dT.terminated
    gl2 = (not solvable_TA) and LT.dim == 4 and dT.dims[1] == 3 and LT.center_dim() == 1
    cond = nilpotency_conditions(G, field)
    return Classification(
        field=field.label(),
        dims=summand_dims(G, field),
        solvable_A=dA.terminated,
        solvable_TA=solvable_TA,
        nilpotent_TA=lT.terminated,
        abelian_TA=LT.is_abelian(),
        gl2_flag=gl2,
        conditions=cond,
        conditions_hold=all(cond.values()),
        series={"derived_A": dA, "derived_TA": dT, "lower_central_TA": lT},
    )
