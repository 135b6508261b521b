"""Exact linear algebra over Q and F_p.

Vectors are sparse dicts keyed by arbitrary hashable coordinates; matrices
are stored column-wise (the image of each domain basis element).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping, Sequence


class ComplexNotExact(ValueError):
    """Raised when a pair of composable maps does not compose to zero."""


class NotInSpan(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p == 0``) or the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, spec) -> "Field":
        """Accept ``"Q"``, ``"F2"``, ``"Fp:5"``, ``{"Fp": 3}`` or a Field."""
        if isinstance(spec, Field):
            return spec
        if isinstance(spec, Mapping):
            if set(spec) != {"Fp"}:
                raise ValueError(f"bad field spec {spec!r}")
            return cls(int(spec["Fp"]))
        s = str(spec).strip()
        if s.upper() in ("Q", "QQ"):
            return cls(0)
        s = s.upper().replace("FP:", "F").replace("GF", "F")
        if s.startswith("F") and s[1:].isdigit():
            return cls(int(s[1:]))
        raise ValueError(f"bad field spec {spec!r}")

    @property
    def char(self) -> int:
        return self.p

    def __call__(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if self.p:
            return pow(x, -1, self.p)
        return 1 / x

    def label(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def to_json(self):
        return {"Fp": self.p} if self.p else "Q"

    def fmt(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"Field({self.label()})"


Q = Field(0)
F2 = Field(2)
F3 = Field(3)


class SparseVector(Mapping):
    """Finite formal sum of coordinates with nonzero scalar coefficients."""

    __slots__ = ("_terms", "field")

    def __init__(self, terms=None, field: Field = Q):
        self.field = field
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = field(c) + clean.get(k, 0)
                c = field(c)
                if c:
                    clean[k] = c
                else:
                    clean.pop(k, None)
        self._terms = clean

    @classmethod
    def basis(cls, key, field: Field = Q) -> "SparseVector":
        return cls({key: 1}, field)

    def __getitem__(self, k):
        return self._terms[k]

    def get(self, k, default=0):
        return self._terms.get(k, default)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def __add__(self, other: "SparseVector") -> "SparseVector":
        out = dict(self._terms)
        f = self.field
        for k, c in other.items():
            v = f(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SparseVector._raw(out, f)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SparseVector":
        c = self.field(c)
        if not c:
            return SparseVector._raw({}, self.field)
        return SparseVector._raw({k: self.field(v * c) for k, v in self._terms.items()}, self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, SparseVector):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == dict(other)
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{k!r}" for k, c in self._terms.items())

    @classmethod
    def _raw(cls, terms: dict, field: Field) -> "SparseVector":
        v = cls.__new__(cls)
        v._terms = terms
        v.field = field
        return v


def add_into(target: dict, key, c, field: Field) -> None:
    v = field(target.get(key, 0) + c)
    if v:
        target[key] = v
    else:
        target.pop(key, None)


@dataclass
class Echelon:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    Rows are dicts ``column -> scalar``; ``order`` fixes the column order so
    pivots are leftmost nonzero entries.  Optionally tracks, for each row,
    the combination of inserted vectors it came from.
    """

    field: Field
    order: Mapping[Hashable, int]
    track: bool = False
    rows: dict = dc_field(default_factory=dict)  # pivot -> row
    combos: dict = dc_field(default_factory=dict)  # pivot -> {input index: coeff}
    n_inputs: int = 0

    def _pivot(self, row: dict):
        return min(row, key=self.order.__getitem__)

    def reduce(self, vec: Mapping, combo: dict | None = None):
        """Return ``vec`` reduced against the current rows (and the combo)."""
        f = self.field
        row = {k: f(c) for k, c in vec.items() if f(c)}
        # rows are fully reduced, so clearing one pivot never creates another
        for k in [k for k in row if k in self.rows]:
            c = row.get(k)
            if not c:
                continue
            for kk, vv in self.rows[k].items():
                add_into(row, kk, -c * vv, f)
            if combo is not None:
                for ii, vv in self.combos[k].items():
                    add_into(combo, ii, -c * vv, f)
        return row

    def insert(self, vec: Mapping) -> bool:
        """Add ``vec`` to the spanning set; return True if it raised the rank."""
        f = self.field
        idx = self.n_inputs
        self.n_inputs += 1
        combo = {idx: f(1)} if self.track else None
        row = self.reduce(vec, combo)
        if not row:
            return False
        piv = self._pivot(row)
        inv = f.inv(row[piv])
        row = {k: f(v * inv) for k, v in row.items()}
        if combo is not None:
            combo = {k: f(v * inv) for k, v in combo.items()}
        # keep the basis fully reduced
        for p2, r2 in self.rows.items():
            c = r2.get(piv)
            if c:
                for kk, vv in row.items():
                    add_into(r2, kk, -c * vv, f)
                if self.track:
                    for kk, vv in combo.items():
                        add_into(self.combos[p2], kk, -c * vv, f)
        self.rows[piv] = row
        if self.track:
            self.combos[piv] = combo
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def sorted_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows, key=self.order.__getitem__)]

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def express(self, vec: Mapping) -> dict:
        """Coefficients of ``vec`` in terms of the inserted vectors.

        Requires ``track=True`` and every inserted vector independent.
        """
        combo: dict = {}
        row = self.reduce(vec, combo)
        if row:
            raise NotInSpan(f"vector not in span: {row}")
        return {k: self.field(-v) for k, v in combo.items() if v}


@dataclass(frozen=True)
class ExactMatrix:
    """Matrix of a linear map between spaces with ordered coordinate bases.

    ``columns[j]`` is the image of ``domain[j]`` as a dict ``codomain key -> scalar``.
    """

    domain: tuple
    codomain: tuple
    columns: tuple
    field: Field

    @classmethod
    def from_function(cls, domain: Sequence, codomain: Sequence, fn, field: Field) -> "ExactMatrix":
        cod = tuple(codomain)
        codset = set(cod)
        cols = []
        for x in domain:
            img = fn(x)
            col = {}
            for k, c in img.items():
                if k not in codset:
                    raise KeyError(f"image coordinate {k!r} not in codomain")
                add_into(col, k, c, field)
            cols.append(col)
        return cls(tuple(domain), cod, tuple(cols), field)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.codomain), len(self.domain))

    def apply(self, vec: Mapping) -> SparseVector:
        index = {k: i for i, k in enumerate(self.domain)}
        out: dict = {}
        for k, c in vec.items():
            for kk, vv in self.columns[index[k]].items():
                add_into(out, kk, c * vv, self.field)
        return SparseVector._raw(out, self.field)

    def compose(self, inner: "ExactMatrix") -> "ExactMatrix":
        """Return ``self ∘ inner``."""
        return ExactMatrix(
            inner.domain,
            self.codomain,
            tuple(dict(self.apply(col).items()) for col in inner.columns),
            self.field,
        )

    def is_zero(self) -> bool:
        return not any(self.columns)

    def dense(self) -> list[list]:
        ri = {k: i for i, k in enumerate(self.codomain)}
        m = [[self.field(0)] * len(self.domain) for _ in self.codomain]
        for j, col in enumerate(self.columns):
            for k, c in col.items():
                m[ri[k]][j] = c
        return m

    def image_echelon(self) -> Echelon:
        ech = Echelon(self.field, {k: i for i, k in enumerate(self.codomain)})
        for col in self.columns:
            ech.insert(col)
        return ech

    def rank(self) -> int:
        return self.image_echelon().rank

    def kernel_basis(self) -> list[dict]:
        """Kernel vectors (dicts over domain keys) from the RREF of the matrix."""
        f = self.field
        # rows of the matrix as equations over the domain coordinates
        eqs: dict = {}
        for j, col in enumerate(self.columns):
            for k, c in col.items():
                eqs.setdefault(k, {})[self.domain[j]] = c
        ech = Echelon(f, {k: i for i, k in enumerate(self.domain)})
        for k in self.codomain:
            if k in eqs:
                ech.insert(eqs[k])
        free = [x for x in self.domain if x not in ech.rows]
        basis = []
        for x in free:
            v = {x: f(1)}
            for piv, row in ech.rows.items():
                c = row.get(x)
                if c:
                    v[piv] = f(-c)
            basis.append(v)
        # canonical echelon form of the kernel itself
        kech = Echelon(f, {k: i for i, k in enumerate(self.domain)})
        for v in basis:
            kech.insert(v)
        return kech.sorted_rows()


@dataclass(frozen=True)
class QuotientSpace:
    """``ker(ker_of) / im(im_of)`` with echelonized bases."""

    ambient: tuple
    kernel: tuple
    image: tuple
    field: Field

    @property
    def dimension(self) -> int:
        return len(self.kernel) - len(self.image)

    def __len__(self):
        return self.dimension


def quotient(ker_of: ExactMatrix, im_of: ExactMatrix) -> QuotientSpace:
    if tuple(im_of.codomain) != tuple(ker_of.domain):
        raise ValueError("maps are not composable")
    if not ker_of.compose(im_of).is_zero():
        raise ComplexNotExact("composition of the differentials is nonzero")
    ker = ker_of.kernel_basis()
    img = im_of.image_echelon().sorted_rows()
    order = {k: i for i, k in enumerate(ker_of.domain)}
    kech = Echelon(ker_of.field, order)
    for v in ker:
        kech.insert(v)
    for v in img:
        if not kech.contains(v):  # pragma: no cover - guarded by the exactness check
            raise ComplexNotExact("image not contained in kernel")
    return QuotientSpace(tuple(ker_of.domain), tuple(ker), tuple(img), ker_of.field)


def span_rank(vectors: Iterable[Mapping], order: Mapping, field: Field) -> int:
    ech = Echelon(field, order)
    for v in vectors:
        ech.insert(v)
    return ech.rank
