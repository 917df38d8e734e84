"""Finite groups as multiplication tables, skew braces, and their linearization.

Every table uses the labels ``0..n-1``.  Enumeration normalizes the shared
identity to ``0``; counts are up to simultaneous relabeling of both tables
by a permutation fixing the identity (which is exactly skew brace
isomorphism).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property

from .errors import NotAGroup, OrderTooLarge, PreconditionFailed, UnitMismatch
from .hopf import Bialgebra, HopfAlgebra
from .linalg import QQ, K, Space, from_columns, permutation, tensor_spaces

__all__ = [
    "GroupTable", "SkewBrace", "group_problems", "check_group", "check_skew_brace",
    "group_tables", "automorphisms", "enumerate_skew_braces", "enumerate_skew_braces_naive",
    "canonical_form", "semidirect_product", "group_algebra", "monoid_algebra",
    "linearize", "subgroups", "coset_action", "max_order", "DEFAULT_MAX_ORDER",
]

DEFAULT_MAX_ORDER = 6


def max_order() -> int:
    return int(os.environ.get("HBL_MAX_ORDER", DEFAULT_MAX_ORDER))


@dataclass(frozen=True)
class GroupTable:
    """``op[a][b]`` is the product ``a * b``."""

    op: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "op", tuple(tuple(int(x) for x in row) for row in self.op))

    @property
    def n(self) -> int:
        return len(self.op)

    @cached_property
    def identity(self):
        n = self.n
        for e in range(n):
            if all(self.op[e][x] == x and self.op[x][e] == x for x in range(n)):
                return e
        return None

    @cached_property
    def inv(self) -> tuple:
        e = self.identity
        out = []
        for a in range(self.n):
            out.append(next((b for b in range(self.n) if self.op[a][b] == e), None))
        return tuple(out)

    def mul(self, *xs) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.op[acc][x]
        return acc

    def is_abelian(self) -> bool:
        return all(self.op[a][b] == self.op[b][a] for a in range(self.n) for b in range(self.n))

    def relabel(self, perm) -> "GroupTable":
        """Transport the structure along ``x -> perm[x]``."""
        n = self.n
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[perm[a]][perm[b]] = perm[self.op[a][b]]
        return GroupTable(new, self.name)


def subgroups(g: GroupTable) -> list:
    """All subgroups, as sorted tuples of elements."""
    def closure(sub):
        sub = set(sub) | {g.identity}
        while True:
            new = {g.op[a][b] for a in sub for b in sub} - sub
            if not new:
                return tuple(sorted(sub))
            sub |= new

    found = {closure([a]) for a in range(g.n)}
    grown = True
    while grown:
        joins = {closure(s + t) for s in found for t in found}
        grown = not joins <= found
        found |= joins
    return sorted(found, key=lambda s: (len(s), s))


def coset_action(g: GroupTable, sub) -> tuple:
    """Left multiplication on the cosets ``gS``: ``(cosets, act)`` with
    ``act[a][i]`` the index of ``a . coset_i``."""
    cosets = []
    index = {}
    for a in range(g.n):
        if a in index:
            continue
        c = tuple(sorted(g.op[a][s] for s in sub))
        for x in c:
            index[x] = len(cosets)
        cosets.append(c)
    act = tuple(tuple(index[g.op[a][c[0]]] for c in cosets) for a in range(g.n))
    return cosets, act


def group_problems(g: GroupTable) -> list:
    """Names of the group axioms that fail (empty for a group)."""
    n = g.n
    if n == 0 or any(len(row) != n or any(not 0 <= x < n for x in row) for row in g.op):
        return ["table_shape"]
    probs = []
    full = set(range(n))
    if any(set(row) != full for row in g.op) or any(
            {g.op[a][b] for a in range(n)} != full for b in range(n)):
        probs.append("latin_square")
    if any(g.op[g.op[a][b]][c] != g.op[a][g.op[b][c]]
           for a in range(n) for b in range(n) for c in range(n)):
        probs.append("associativity")
    if g.identity is None:
        probs.append("identity")
    elif any(i is None or g.op[i][a] != g.identity for a, i in enumerate(g.inv)):
        probs.append("inverses")
    return probs


def check_group(g: GroupTable) -> GroupTable:
    probs = group_problems(g)
    if probs:
        raise NotAGroup(f"table {g.name or '?'} fails: {', '.join(probs)}")
    return g


@dataclass(frozen=True)
class SkewBrace:
    dot: GroupTable
    circ: GroupTable
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return self.dot.n


def check_skew_brace(s: SkewBrace) -> bool:
    check_group(s.dot)
    check_group(s.circ)
    if s.dot.n != s.circ.n:
        raise NotAGroup("tables of different orders")
    if s.dot.identity != s.circ.identity:
        raise UnitMismatch("the two group structures have different identities")
    d, c, inv = s.dot.op, s.circ.op, s.dot.inv
    n = s.n
    return all(c[a][d[b][x]] == d[d[c[a][b]][inv[a]]][c[a][x]]
               for a in range(n) for b in range(n) for x in range(n))


# ---------------------------------------------------------------- enumeration


def group_tables(n: int) -> list:
    """Every group table on ``0..n-1`` with identity ``0``."""
    if n < 1:
        return []
    if n == 1:
        return [GroupTable(((0,),))]
    grid = [[None] * n for _ in range(n)]
    for x in range(n):
        grid[0][x] = x
        grid[x][0] = x
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    found = []

    def assoc_ok(a, b):
        # every triple whose three products are now known
        for x in range(n):
            for y in range(n):
                xy = grid[x][y]
                if xy is None:
                    continue
                for z in range(n):
                    yz = grid[y][z]
                    if yz is None:
                        continue
                    lhs, rhs = grid[xy][z], grid[x][yz]
                    if lhs is not None and rhs is not None and lhs != rhs:
                        return False
        return True

    def go(k):
        if k == len(cells):
            found.append(GroupTable(grid))
            return
        a, b = cells[k]
        used = {grid[a][y] for y in range(n)} | {grid[x][b] for x in range(n)}
        for v in range(n):
            if v in used:
                continue
            grid[a][b] = v
            if b == n - 1 and not assoc_ok(a, b):
                continue
            go(k + 1)
        grid[a][b] = None

    go(0)
    return [g for g in found if not group_problems(g)]


def automorphisms(g: GroupTable) -> list:
    """Automorphisms as tuples ``perm`` with ``perm[x]`` the image of ``x``."""
    n, e = g.n, g.identity
    out = []
    others = [x for x in range(n) if x != e]
    for images in itertools.permutations(others):
        perm = [0] * n
        perm[e] = e
        for x, y in zip(others, images):
            perm[x] = y
        if all(perm[g.op[a][b]] == g.op[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            out.append(tuple(perm))
    return out


def canonical_form(s: SkewBrace) -> tuple:
    """Lexicographically least ``(dot, circ)`` over relabelings fixing 0."""
    n = s.n
    best = None
    for images in itertools.permutations(range(1, n)):
        perm = (0,) + images
        key = (s.dot.relabel(perm).op, s.circ.relabel(perm).op)
        if best is None or key < best:
            best = key
    return best


def _check_order(n: int) -> None:
    cap = max_order()
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds the enumeration cap {cap} (set HBL_MAX_ORDER)")
    if n < 1:
        raise ValueError("order must be positive")


def _dedup(braces) -> list:
    seen = {}
    for s in braces:
        key = canonical_form(s)
        if key not in seen:
            seen[key] = SkewBrace(GroupTable(key[0]), GroupTable(key[1]))
    out = [seen[k] for k in sorted(seen)]
    return [SkewBrace(b.dot, b.circ, name=f"brace{b.n}_{i}") for i, b in enumerate(out)]


def _group_representatives(n: int) -> list:
    reps = {}
    for g in group_tables(n):
        key = min(g.relabel((0,) + p).op for p in itertools.permutations(range(1, n)))
        reps.setdefault(key, GroupTable(key))
    return [reps[k] for k in sorted(reps)]


def enumerate_skew_braces(n: int) -> list:
    """All skew braces of order ``n`` up to identity-fixing relabeling.

    For each additive group ``(G, .)`` (one representative per isomorphism
    class) the rows of ``circ`` are backtracked: row ``a`` must be
    ``x -> a . f_a(x)`` with ``f_a`` an automorphism of ``(G, .)``, which is
    exactly the brace law for that row.  Column bijectivity and
    associativity are pruned as rows are placed.
    """
    _check_order(n)
    found = []
    for dot in _group_representatives(n):
        auts = automorphisms(dot)
        rows = {a: [tuple(dot.op[a][f[x]] for x in range(n)) for f in auts] for a in range(n)}
        circ = [None] * n
        circ[0] = tuple(range(n))
        cols = [{0: x} for x in range(n)]

        def assoc_ok(a):
            for x in range(n):
                if circ[x] is None:
                    continue
                for y in range(n):
                    if circ[y] is None:
                        continue
                    xy = circ[x][y]
                    if circ[xy] is None:
                        continue
                    if a not in (x, y, xy):
                        continue
                    for z in range(n):
                        yz = circ[y][z]
                        if circ[xy][z] != circ[x][yz]:
                            return False
            return True

        def go(a):
            if a == n:
                found.append(SkewBrace(dot, GroupTable(circ)))
                return
            for row in rows[a]:
                if any(row[x] in cols[x].values() for x in range(n)):
                    continue
                circ[a] = row
                if assoc_ok(a):
                    for x in range(n):
                        cols[x][a] = row[x]
                    go(a + 1)
                    for x in range(n):
                        del cols[x][a]
                circ[a] = None

        go(1)
    return _dedup(s for s in found if not group_problems(s.circ) and check_skew_brace(s))


def enumerate_skew_braces_naive(n: int) -> list:
    """Independent brute force: every pair of group tables, filtered by the brace law."""
    _check_order(n)
    tables = group_tables(n)
    found = [SkewBrace(d, c) for d in tables for c in tables if check_skew_brace(SkewBrace(d, c))]
    return _dedup(found)


# ---------------------------------------------------------------- groups to Hopf algebras


def semidirect_product(s: SkewBrace) -> GroupTable:
    """``G_dot x| G_circ`` on flat indices ``a * n + g`` with
    ``(a, g)(b, h) = (a . ((g o b) . g^-1), g o h)``."""
    if not check_skew_brace(s):
        raise PreconditionFailed("not a skew brace")
    n = s.n
    d, c, inv = s.dot.op, s.circ.op, s.dot.inv
    op = [[0] * (n * n) for _ in range(n * n)]
    for a, g, b, h in itertools.product(range(n), repeat=4):
        act = d[c[g][b]][inv[g]]
        op[a * n + g][b * n + h] = d[a][act] * n + c[g][h]
    name = f"{s.name}:semidirect" if s.name else ""
    return GroupTable(op, name)


def _basis(n, prefix="g"):
    return tuple(f"{prefix}{i}" for i in range(n))


def monoid_algebra(table, field=QQ, name: str = "", basis=None) -> Bialgebra:
    """Bialgebra of a finite monoid (unit at its identity, group-like coproduct).

    ``table`` may be any associative table with a two-sided identity; no
    antipode is attempted.
    """
    g = table if isinstance(table, GroupTable) else GroupTable(table)
    n = g.n
    if g.identity is None:
        raise PreconditionFailed("table has no identity element")
    H = Space(n, basis or _basis(n))
    HH = tensor_spaces(H, H)
    prod = permutation([g.op[a][b] for a in range(n) for b in range(n)], HH, H, field)
    unit = from_columns([{g.identity: 1}], K, H, field)
    counit = from_columns([{0: 1} for _ in range(n)], H, K, field)
    coprod = permutation([a * n + a for a in range(n)], H, HH, field)
    return Bialgebra(H, unit, prod, counit, coprod)


def group_algebra(g: GroupTable, field=QQ, name: str = "", basis=None) -> HopfAlgebra:
    check_group(g)
    b = monoid_algebra(g, field, basis=basis)
    antipode = permutation(list(g.inv), b.space, b.space, field)
    return HopfAlgebra(b.space, b.unit, b.prod, b.counit, b.coprod, antipode,
                       name=name or (f"K[{g.name}]" if g.name else ""))


def linearize(s: SkewBrace, field=QQ):
    from .hopfbrace import HopfBrace

    if not check_skew_brace(s):
        raise PreconditionFailed("not a skew brace")
    h1 = group_algebra(s.dot, field, name=f"K[{s.name}.dot]" if s.name else "")
    h2 = group_algebra(s.circ, field, name=f"K[{s.name}.circ]" if s.name else "")
    return HopfBrace(h1, h2, name=f"K[{s.name}]" if s.name else "", source=s)
