"""Built-in instances: small groups, Hopf algebras, braces and special examples."""

from __future__ import annotations

from functools import lru_cache

from .hopf import Bialgebra, HopfAlgebra, dual_hopf
from .hopfbrace import opposite_brace, trivial_brace
from .linalg import QQ, K, Morphism, Space, from_columns, tensor_spaces
from .skewbrace import (GroupTable, enumerate_skew_braces, group_algebra, linearize,
                        monoid_algebra)

__all__ = [
    "from_elements", "cyclic", "direct_product", "groups", "sweedler", "monoid_bialgebra",
    "hopf_algebras", "graded_action", "non_cc_action", "braces", "cocommutative_braces",
]


def from_elements(elements, mul, name: str = "") -> GroupTable:
    """Table of a group given by a list of hashable elements (identity first)."""
    index = {x: i for i, x in enumerate(elements)}
    return GroupTable([[index[mul(a, b)] for b in elements] for a in elements], name)


def cyclic(n: int) -> GroupTable:
    return GroupTable([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}")


def direct_product(g: GroupTable, h: GroupTable, name: str = "") -> GroupTable:
    m = h.n
    op = [[g.op[a // m][b // m] * m + h.op[a % m][b % m] for b in range(g.n * m)]
          for a in range(g.n * m)]
    return GroupTable(op, name or f"{g.name}x{h.name}")


def _perm_group(gens, name) -> GroupTable:
    ident = tuple(range(len(gens[0])))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(len(g)))
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    # (p q)(i) = p(q(i))
    return from_elements(elems, lambda p, q: tuple(p[q[i]] for i in range(len(q))), name)


def _quaternion() -> GroupTable:
    # elements (sign, unit) with unit in 1, i, j, k
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    return from_elements(elems, mul, "Q8")


@lru_cache(maxsize=None)
def groups() -> dict:
    """The fourteen groups of order at most 8, keyed by name."""
    out = {f"C{n}": cyclic(n) for n in range(1, 9)}
    out["C2xC2"] = direct_product(cyclic(2), cyclic(2), "C2xC2")
    out["S3"] = _perm_group([(1, 0, 2), (1, 2, 0)], "S3")
    out["C2xC4"] = direct_product(cyclic(2), cyclic(4), "C2xC4")
    out["C2xC2xC2"] = direct_product(out["C2xC2"], cyclic(2), "C2xC2xC2")
    out["D4"] = _perm_group([(1, 2, 3, 0), (3, 2, 1, 0)], "D4")
    out["Q8"] = _quaternion()
    return out


def sweedler(field=QQ) -> HopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra on ``1, g, x, gx``.

    ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``; ``g`` group-like, ``x`` is
    ``(1, g)``-primitive: ``delta(x) = x (x) 1 + g (x) x``.
    """
    H = Space(4, ("1", "g", "x", "gx"))
    HH = tensor_spaces(H, H)
    # basis element g^a x^b at index 2b + a; x g^a = (-1)^a g^a x
    def mul(i, j):
        a1, b1 = i % 2, i // 2
        a2, b2 = j % 2, j // 2
        if b1 and b2:
            return None
        sign = -1 if (b1 and a2) else 1
        return (2 * (b1 | b2) + (a1 ^ a2), sign)

    prod_cols = []
    for i in range(4):
        for j in range(4):
            r = mul(i, j)
            prod_cols.append({} if r is None else {r[0]: r[1]})
    prod = from_columns(prod_cols, HH, H, field)
    unit = from_columns([{0: 1}], K, H, field)
    counit = from_columns([{0: 1}, {0: 1}, {}, {}], H, K, field)
    coprod = from_columns([
        {0: 1},                       # 1 -> 1 (x) 1
        {1 * 4 + 1: 1},               # g -> g (x) g
        {2 * 4 + 0: 1, 1 * 4 + 2: 1},  # x -> x (x) 1 + g (x) x
        {3 * 4 + 1: 1, 0 * 4 + 3: 1},  # gx -> gx (x) g + 1 (x) gx
    ], H, HH, field)
    antipode = from_columns([{0: 1}, {1: 1}, {3: -1}, {2: 1}], H, H, field)
    return HopfAlgebra(H, unit, prod, counit, coprod, antipode, name="H4")


def monoid_bialgebra(field=QQ) -> Bialgebra:
    """Bialgebra of the multiplicative monoid ``{1, 0}``; it has no antipode."""
    return monoid_algebra(((0, 1), (1, 1)), field, basis=("1", "0"))


def hopf_algebras(max_dim: int = 8, field=QQ) -> list:
    """Group algebras of every catalog group, their duals, and Sweedler's
    algebra with its dual, restricted to dimension ``max_dim``."""
    out = []
    for name, g in groups().items():
        if g.n <= max_dim:
            h = group_algebra(g, field, name=f"K[{name}]")
            out.append(h)
            out.append(dual_hopf(h))
    if max_dim >= 4:
        h4 = sweedler(field)
        out += [h4, dual_hopf(h4)]
    return out


def graded_action(h_dual_group: HopfAlgebra, a_space: Space, degrees) -> Morphism:
    """Action of ``K[G]*`` on a ``G``-graded space: ``e^s . v = [deg v = s] v``."""
    n = h_dual_group.space.dim
    d = a_space.dim
    cols = []
    for s in range(n):
        for j in range(d):
            cols.append({j: 1} if degrees[j] == s else {})
    return from_columns(cols, tensor_spaces(h_dual_group.space, a_space), a_space,
                        h_dual_group.field)


def non_cc_action(field=QQ) -> tuple:
    """``(A, phi, H)`` with ``A`` Sweedler's algebra graded by ``S3`` through
    ``deg 1 = deg g = e`` and ``deg x = deg gx = t`` (a transposition), and
    ``H = K[S3]*``.  This is a module algebra and module coalgebra whose
    action is outside the cocommutativity class."""
    s3 = groups()["S3"]
    h = dual_hopf(group_algebra(s3, field, name="K[S3]"))
    t = next(x for x in range(s3.n) if x != s3.identity and s3.op[x][x] == s3.identity)
    a = sweedler(field)
    e = s3.identity
    phi = graded_action(h, a.space, [e, e, t, t])
    return a, phi, h


def braces(max_order: int = 4, field=QQ, extra: bool = True) -> list:
    """Linearized skew braces of order ``<= max_order`` plus, with ``extra``,
    trivial braces of ``K[S3]``, ``H4``, ``K[S3]*`` and the opposite brace of ``H4``."""
    out = []
    for n in range(1, max_order + 1):
        out += [linearize(s, field) for s in enumerate_skew_braces(n)]
    if extra:
        s3 = group_algebra(groups()["S3"], field, name="K[S3]")
        h4 = sweedler(field)
        out += [trivial_brace(s3), trivial_brace(h4), trivial_brace(dual_hopf(s3)),
                opposite_brace(h4)]
    return out


def cocommutative_braces(max_order: int = 4, field=QQ) -> list:
    from .hopfbrace import is_cocommutative_brace

    return [b for b in braces(max_order, field) if is_cocommutative_brace(b)]
