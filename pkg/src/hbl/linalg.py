"""Exact linear algebra for the strict symmetric monoidal category of
finite-dimensional vector spaces.

A :class:`Morphism` is a ``cod.dim x dom.dim`` matrix whose column ``j`` is
the image of basis vector ``j`` of the domain.  Entries live in an exact
field: the rationals (backed by ``gmpy2.mpq``) or a prime field GF(p)
(plain Python ints kept in ``[0, p)``).

Tensor products are left-major: basis vector ``(i, j)`` of ``A (x) B`` has
flat index ``i * dim(B) + j``.  Every other module relies on this.

Storage is column-sparse (one ``{row: value}`` dict per column, zeros never
stored) but the semantics are those of a dense matrix: equality is exact
entrywise equality and :attr:`Morphism.mat` returns the full matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq

from .errors import DimensionMismatch, ParseError

__all__ = [
    "Field", "Rationals", "PrimeField", "QQ", "GF", "field_from_name",
    "Space", "K", "as_space", "tensor_spaces",
    "Morphism", "matrix", "from_columns", "identity", "zero", "permutation",
    "compose", "tensor", "swap", "dual_pair", "random_morphism",
    "row_reduce", "solve", "nullspace", "rank", "inverse",
]


# ---------------------------------------------------------------- fields


class Field:
    name: str = "?"
    modulus: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        raise NotImplementedError

    def reduce(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, s: str):
        return self(s)


@dataclass(frozen=True)
class Rationals(Field):
    name: str = "q"
    modulus: int = 0

    def __call__(self, x):
        if isinstance(x, str):
            try:
                return mpq(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a rational: {x!r}") from exc
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x


@dataclass(frozen=True)
class PrimeField(Field):
    p: int = 2
    name: str = field(init=False, default="")
    modulus: int = field(init=False, default=0)

    def __post_init__(self):
        if self.p < 2 or not gmpy2.is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime, got {self.p}")
        object.__setattr__(self, "name", f"gf:{self.p}")
        object.__setattr__(self, "modulus", self.p)

    def __call__(self, x):
        p = self.p
        if isinstance(x, str):
            try:
                q = mpq(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a residue: {x!r}") from exc
            x = q
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return num * pow(den, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), -1, self.p)

    def reduce(self, x):
        return x % self.p


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Parse ``"q"`` or ``"gf:<p>"``."""
    name = name.strip().lower()
    if name in ("q", "qq", "rationals"):
        return QQ
    if name.startswith("gf:"):
        try:
            return GF(int(name[3:]))
        except ValueError as exc:
            raise ParseError(f"bad field {name!r}: {exc}") from exc
    raise ParseError(f"unknown field {name!r}")


# ---------------------------------------------------------------- spaces


@dataclass(frozen=True)
class Space:
    """A finite-dimensional space with an optional list of basis names.

    Basis names are cosmetic; two spaces are equal iff their dimensions are.
    """

    dim: int
    basis: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        if self.basis is not None:
            b = tuple(str(x) for x in self.basis)
            if len(b) != self.dim:
                raise ValueError(f"{len(b)} basis names for dim {self.dim}")
            object.__setattr__(self, "basis", b)

    def label(self, i: int) -> str:
        return self.basis[i] if self.basis is not None else f"v{i}"

    def labels(self) -> tuple:
        return tuple(self.label(i) for i in range(self.dim))

    def dual(self) -> "Space":
        if self.basis is None:
            return Space(self.dim)
        # the double dual is identified with the space itself
        return Space(self.dim, tuple(b[:-1] if b.endswith("^") else f"{b}^" for b in self.basis))

    def __repr__(self):
        return f"Space({self.dim})"


K = Space(1, ("1",))


def as_space(x) -> Space:
    if isinstance(x, Space):
        return x
    if isinstance(x, int):
        return Space(x)
    raise TypeError(f"expected Space or int, got {type(x).__name__}")


def tensor_spaces(*spaces) -> Space:
    spaces = [as_space(s) for s in spaces]
    out = K
    for s in spaces:
        if out.dim == 1 and out.basis in (None, ("1",)):
            out = s
            continue
        if s.dim == 1 and s.basis in (None, ("1",)):
            continue
        if out.basis is not None and s.basis is not None and out.dim * s.dim <= 4096:
            basis = tuple(f"{a}⊗{b}" for a in out.basis for b in s.basis)
        else:
            basis = None
        out = Space(out.dim * s.dim, basis)
    return out


# ---------------------------------------------------------------- morphisms


class Morphism:
    """An exact linear map ``dom -> cod``.  Immutable."""

    __slots__ = ("dom", "cod", "field", "_cols")

    def __init__(self, dom: Space, cod: Space, cols: Sequence[dict], field: Field = QQ):
        # Internal constructor: ``cols`` must already hold reduced, nonzero
        # field elements.  Public code goes through matrix()/from_columns().
        self.dom = dom
        self.cod = cod
        self.field = field
        self._cols = tuple(cols)

    # -- inspection

    @property
    def shape(self) -> tuple:
        return (self.cod.dim, self.dom.dim)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def entry(self, i: int, j: int):
        return self._cols[j].get(i, self.field.zero)

    def column(self, j: int) -> dict:
        return dict(self._cols[j])

    def columns(self):
        for c in self._cols:
            yield dict(c)

    def rows(self) -> list:
        z = self.field.zero
        out = [[z] * self.dom.dim for _ in range(self.cod.dim)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    @property
    def mat(self) -> tuple:
        return tuple(tuple(r) for r in self.rows())

    def is_zero(self) -> bool:
        return not any(self._cols)

    def is_identity(self) -> bool:
        if self.dom.dim != self.cod.dim:
            return False
        return all(col == {j: 1} for j, col in enumerate(self._cols))

    def first_difference(self, other: "Morphism"):
        """First ``(row, col)`` where the two matrices differ, or None."""
        if self.shape != other.shape:
            return (-1, -1)
        for j, (a, b) in enumerate(zip(self._cols, other._cols)):
            if a != b:
                rows = sorted(set(a) | set(b))
                for i in rows:
                    if a.get(i, 0) != b.get(i, 0):
                        return (i, j)
        return None

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.field == other.field and self._cols == other._cols)

    def __hash__(self):
        return hash((self.dom.dim, self.cod.dim, self.nnz))

    def __repr__(self):
        return f"Morphism({self.dom.dim} -> {self.cod.dim}, nnz={self.nnz}, field={self.field.name})"

    # -- linear structure

    def _check_same(self, other):
        if self.shape != other.shape or self.field != other.field:
            raise DimensionMismatch(f"cannot combine {self!r} and {other!r}")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_same(other)
        red = self.field.reduce
        cols = []
        for a, b in zip(self._cols, other._cols):
            c = dict(a)
            for i, v in b.items():
                c[i] = red(c.get(i, 0) + v)
            cols.append({i: v for i, v in c.items() if v})
        return Morphism(self.dom, self.cod, cols, self.field)

    def __neg__(self) -> "Morphism":
        return self.scaled(-1)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scaled(self, c) -> "Morphism":
        c = self.field(c)
        if not c:
            return zero(self.dom, self.cod, self.field)
        red = self.field.reduce
        cols = [{i: red(v * c) for i, v in col.items()} for col in self._cols]
        return Morphism(self.dom, self.cod, cols, self.field)

    def transpose(self) -> "Morphism":
        cols = [dict() for _ in range(self.cod.dim)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                cols[i][j] = v
        return Morphism(self.cod, self.dom, cols, self.field)

    def with_entry(self, i: int, j: int, value) -> "Morphism":
        """Copy with entry ``(i, j)`` replaced; used to build mutants."""
        value = self.field(value)
        cols = list(self._cols)
        col = dict(cols[j])
        if value:
            col[i] = value
        else:
            col.pop(i, None)
        cols[j] = col
        return Morphism(self.dom, self.cod, cols, self.field)

    def with_spaces(self, dom: Space | None = None, cod: Space | None = None) -> "Morphism":
        dom = dom or self.dom
        cod = cod or self.cod
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise DimensionMismatch("relabelling must keep dimensions")
        return Morphism(dom, cod, self._cols, self.field)

    def apply(self, vec: dict) -> dict:
        """Image of a sparse vector ``{index: coefficient}``."""
        red = self.field.reduce
        acc: dict = {}
        for k, a in vec.items():
            for i, b in self._cols[k].items():
                acc[i] = acc.get(i, 0) + b * a
        return {i: red(v) for i, v in acc.items() if red(v)}

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)


# ---------------------------------------------------------------- builders


def matrix(rows, dom=None, cod=None, field: Field = QQ) -> Morphism:
    """Build from a dense row-major nested list (``cod.dim`` rows)."""
    rows = [list(r) for r in rows]
    ncod = len(rows)
    ndom = len(rows[0]) if rows else (as_space(dom).dim if dom is not None else 0)
    if any(len(r) != ndom for r in rows):
        raise DimensionMismatch("ragged matrix")
    dom = as_space(dom) if dom is not None else Space(ndom)
    cod = as_space(cod) if cod is not None else Space(ncod)
    if dom.dim != ndom or cod.dim != ncod:
        raise DimensionMismatch(f"matrix is {ncod}x{ndom}, spaces are {cod.dim}x{dom.dim}")
    cols = [dict() for _ in range(ndom)]
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            v = field(x)
            if v:
                cols[j][i] = v
    return Morphism(dom, cod, cols, field)


def from_columns(cols: Iterable[dict], dom, cod, field: Field = QQ) -> Morphism:
    """Build from sparse columns ``{row: value}``; values are coerced."""
    dom, cod = as_space(dom), as_space(cod)
    out = []
    for col in cols:
        c = {}
        for i, x in col.items():
            if not 0 <= i < cod.dim:
                raise DimensionMismatch(f"row {i} outside codomain of dim {cod.dim}")
            v = field(x)
            if v:
                c[i] = v
        out.append(c)
    if len(out) != dom.dim:
        raise DimensionMismatch(f"{len(out)} columns for domain of dim {dom.dim}")
    return Morphism(dom, cod, out, field)


def identity(space, field: Field = QQ) -> Morphism:
    space = as_space(space)
    one = field.one
    return Morphism(space, space, [{j: one} for j in range(space.dim)], field)


def zero(dom, cod, field: Field = QQ) -> Morphism:
    dom, cod = as_space(dom), as_space(cod)
    return Morphism(dom, cod, [{} for _ in range(dom.dim)], field)


def permutation(images: Sequence[int], dom=None, cod=None, field: Field = QQ) -> Morphism:
    """Permutation-type map sending basis vector ``j`` to ``images[j]``.

    ``images`` need not be injective, so this also builds set maps.
    """
    n = len(images)
    dom = as_space(dom) if dom is not None else Space(n)
    cod = as_space(cod) if cod is not None else Space(n)
    one = field.one
    return from_columns([{images[j]: one} for j in range(n)], dom, cod, field)


# ---------------------------------------------------------------- monoidal structure


def _field_of(args, field):
    for a in args:
        if isinstance(a, Morphism):
            if field is not None and a.field != field:
                raise DimensionMismatch(f"mixed fields {a.field.name} and {field.name}")
            field = a.field
    return field or QQ


def _compose2(g: Morphism, f: Morphism) -> Morphism:
    if f.cod != g.dom:
        raise DimensionMismatch(f"cannot compose {g!r} after {f!r}")
    if f.field != g.field:
        raise DimensionMismatch(f"mixed fields {f.field.name} and {g.field.name}")
    gcols = g._cols
    p = g.field.modulus
    out = []
    for col in f._cols:
        if not col:
            out.append({})
        elif len(col) == 1:
            ((k, a),) = col.items()
            gc = gcols[k]
            if a == 1:
                out.append(gc)
            elif p:
                out.append({i: b * a % p for i, b in gc.items()})
            else:
                out.append({i: b * a for i, b in gc.items()})
        else:
            acc: dict = {}
            get = acc.get
            for k, a in col.items():
                for i, b in gcols[k].items():
                    acc[i] = get(i, 0) + b * a
            if p:
                out.append({i: v % p for i, v in acc.items() if v % p})
            else:
                out.append({i: v for i, v in acc.items() if v})
    return Morphism(f.dom, g.cod, out, g.field)


def compose(*fs: Morphism) -> Morphism:
    """``compose(h, g, f) = h o g o f`` (rightmost applied first)."""
    if not fs:
        raise ValueError("compose needs at least one morphism")
    return reduce(lambda acc, g: _compose2(g, acc), reversed(fs[:-1]), fs[-1])


def _tensor2(f: Morphism, g: Morphism) -> Morphism:
    c2 = g.cod.dim
    p = f.field.modulus
    gcols = g._cols
    out = []
    for col1 in f._cols:
        items1 = list(col1.items())
        for col2 in gcols:
            if not items1 or not col2:
                out.append({})
                continue
            new = {}
            for i1, a in items1:
                base = i1 * c2
                if a == 1:
                    for i2, b in col2.items():
                        new[base + i2] = b
                elif p:
                    for i2, b in col2.items():
                        new[base + i2] = a * b % p
                else:
                    for i2, b in col2.items():
                        new[base + i2] = a * b
            out.append(new)
    return Morphism(tensor_spaces(f.dom, g.dom), tensor_spaces(f.cod, g.cod), out, f.field)


def tensor(*args, field: Field | None = None) -> Morphism:
    """Kronecker product, left factor major.

    Spaces (or ints) among the arguments stand for their identity maps, so
    ``tensor(H, phi)`` reads like ``H (x) phi``.
    """
    fld = _field_of(args, field)
    ms = [a if isinstance(a, Morphism) else identity(as_space(a), fld) for a in args]
    if not ms:
        return identity(K, fld)
    # Dimension-1 identities are strict units.
    ms = [m for m in ms if not (m.dom.dim == 1 and m.cod.dim == 1 and m.is_identity())] or ms[:1]
    return reduce(_tensor2, ms)


def swap(a, b, field: Field = QQ) -> Morphism:
    """The symmetry ``c_{a,b}: a (x) b -> b (x) a``."""
    a, b = as_space(a), as_space(b)
    images = [j * a.dim + i for i in range(a.dim) for j in range(b.dim)]
    return permutation(images, tensor_spaces(a, b), tensor_spaces(b, a), field)


def dual_pair(p, field: Field = QQ) -> tuple:
    """Coevaluation ``K -> P (x) P*`` and evaluation ``P* (x) P -> K``.

    Built from the dual basis, so both carry the pattern ``sum_i e_i (x) e^i``.
    """
    p = as_space(p)
    pd = p.dual()
    n = p.dim
    one = field.one
    coev = Morphism(K, tensor_spaces(p, pd), [{i * n + i: one for i in range(n)}], field)
    ev = Morphism(tensor_spaces(pd, p), K,
                  [({0: one} if j // n == j % n else {}) for j in range(n * n)], field)
    return coev, ev


def random_morphism(dom, cod, rng: random.Random, field: Field = QQ,
                    density: float = 0.5, bound: int = 5) -> Morphism:
    """Random exact matrix with small numerators/denominators."""
    dom, cod = as_space(dom), as_space(cod)
    cols = []
    for _ in range(dom.dim):
        col = {}
        for i in range(cod.dim):
            if rng.random() < density:
                if field.modulus:
                    v = field(rng.randint(-bound, bound))
                else:
                    v = field(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
                if v:
                    col[i] = v
        cols.append(col)
    return Morphism(dom, cod, cols, field)


# ---------------------------------------------------------------- elimination


def row_reduce(rows: list, field: Field, pivot_order: Iterable[int]) -> tuple:
    """Gauss-Jordan elimination on sparse rows, pivoting only on the listed
    columns in the given order.  Returns ``(rows, pivots)`` where ``pivots[k]``
    is the pivot column of ``rows[k]``; rows past ``len(pivots)`` carry no
    pivot column.
    """
    red = field.reduce
    rows = [dict(r) for r in rows]
    pivots = []
    r = 0
    for c in pivot_order:
        piv = next((i for i in range(r, len(rows)) if rows[i].get(c)), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        prow = {k: red(v * inv) for k, v in rows[r].items()}
        rows[r] = prow
        for i in range(len(rows)):
            if i != r:
                f = rows[i].get(c)
                if f:
                    row = rows[i]
                    for k, v in prow.items():
                        nv = red(row.get(k, 0) - f * v)
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
        pivots.append(c)
        r += 1
    return rows, pivots


def _rows_of(m: Morphism) -> list:
    rows = [dict() for _ in range(m.cod.dim)]
    for j, col in enumerate(m._cols):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def solve(a: Morphism, b: Morphism, pivot_order: Sequence[int] | None = None):
    """Some ``x`` with ``a o x = b``, or None when the system is inconsistent.

    Free variables are set to zero; ``pivot_order`` permutes the column
    search order of the elimination.
    """
    if a.cod != b.cod or a.field != b.field:
        raise DimensionMismatch("solve: codomains differ")
    n = a.dom.dim
    rows = _rows_of(a)
    for i, r in enumerate(_rows_of(b)):
        for j, v in r.items():
            rows[i][n + j] = v
    order = list(pivot_order) if pivot_order is not None else list(range(n))
    reduced, pivots = row_reduce(rows, a.field, order)
    for row in reduced[len(pivots):]:
        if row:
            return None
    cols = [dict() for _ in range(b.dom.dim)]
    for row, pc in zip(reduced, pivots):
        for k, v in row.items():
            if k >= n:
                cols[k - n][pc] = v
    return Morphism(b.dom, a.dom, cols, a.field)


def nullspace(a: Morphism) -> Morphism:
    """A basis of ``ker a`` as the columns of a map ``Space(k) -> a.dom``."""
    n = a.dom.dim
    reduced, pivots = row_reduce(_rows_of(a), a.field, range(n))
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    one = a.field.one
    cols = []
    for f in free:
        vec = {f: one}
        for row, pc in zip(reduced, pivots):
            v = row.get(f)
            if v:
                vec[pc] = a.field.reduce(-v)
        cols.append(vec)
    return Morphism(Space(len(free)), a.dom, cols, a.field)


def rank(a: Morphism) -> int:
    return len(row_reduce(_rows_of(a), a.field, range(a.dom.dim))[1])


def inverse(a: Morphism):
    """Two-sided inverse of a square map, or None if singular."""
    if a.dom.dim != a.cod.dim:
        return None
    x = solve(a, identity(a.cod, a.field))
    if x is None or rank(a) != a.dom.dim:
        return None
    return x.with_spaces(a.cod, a.dom)
