"""Algebras, coalgebras, modules and comodules as tuples of exact morphisms.

Constructors never validate; call the ``check_*`` functions explicitly.
That is what lets mutation tests build deliberately broken structures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .laws import LawReport
from .linalg import (K, Morphism, Space, compose, from_columns, identity, nullspace,
                     swap, tensor, tensor_spaces)

__all__ = [
    "Algebra", "Coalgebra", "Module", "Comodule",
    "check_algebra", "check_coalgebra", "check_module", "check_comodule",
    "convolution", "convolution_unit", "is_module_morphism", "module_hom_space",
    "check_algebra_morphism", "check_coalgebra_morphism",
    "tensor_algebra", "tensor_coalgebra", "diagonal_action",
    "is_commutative", "is_cocommutative", "expect_shape",
]


@dataclass(frozen=True)
class Algebra:
    space: Space
    unit: Morphism
    prod: Morphism

    @property
    def field(self):
        return self.prod.field


@dataclass(frozen=True)
class Coalgebra:
    space: Space
    counit: Morphism
    coprod: Morphism

    @property
    def field(self):
        return self.coprod.field


@dataclass(frozen=True)
class Module:
    """A left module ``(M, phi: A (x) M -> M)``."""

    carrier: Space
    action: Morphism
    over: Algebra


@dataclass(frozen=True)
class Comodule:
    """A right comodule ``(M, rho: M -> M (x) C)``."""

    carrier: Space
    coaction: Morphism
    over: Coalgebra


def expect_shape(f: Morphism, dom, cod, what: str) -> None:
    if f.dom != dom or f.cod != cod:
        raise ShapeMismatch(
            f"{what}: expected {dom.dim} -> {cod.dim}, got {f.dom.dim} -> {f.cod.dim}")


# ---------------------------------------------------------------- algebras


def check_algebra(a) -> LawReport:
    A = a.space
    expect_shape(a.unit, K, A, "unit")
    expect_shape(a.prod, tensor_spaces(A, A), A, "product")
    mu, eta = a.prod, a.unit
    rep = LawReport("algebra")
    rep.equal("left_unit", compose(mu, tensor(eta, A)), identity(A, a.field))
    rep.equal("right_unit", compose(mu, tensor(A, eta)), identity(A, a.field))
    rep.equal("associativity", compose(mu, tensor(mu, A)), compose(mu, tensor(A, mu)))
    return rep


def check_coalgebra(c) -> LawReport:
    C = c.space
    expect_shape(c.counit, C, K, "counit")
    expect_shape(c.coprod, C, tensor_spaces(C, C), "coproduct")
    delta, eps = c.coprod, c.counit
    rep = LawReport("coalgebra")
    rep.equal("left_counit", compose(tensor(eps, C), delta), identity(C, c.field))
    rep.equal("right_counit", compose(tensor(C, eps), delta), identity(C, c.field))
    rep.equal("coassociativity", compose(tensor(delta, C), delta),
              compose(tensor(C, delta), delta))
    return rep


def convolution(f: Morphism, g: Morphism, c, a) -> Morphism:
    """``f * g = mu_A o (f (x) g) o delta_C`` for ``f, g: C -> A``."""
    expect_shape(f, c.space, a.space, "convolution left factor")
    expect_shape(g, c.space, a.space, "convolution right factor")
    return compose(a.prod, tensor(f, g), c.coprod)


def convolution_unit(c, a) -> Morphism:
    return compose(a.unit, c.counit)


def is_commutative(a) -> bool:
    return compose(a.prod, swap(a.space, a.space, a.field)) == a.prod


def is_cocommutative(c) -> bool:
    return compose(swap(c.space, c.space, c.field), c.coprod) == c.coprod


def tensor_algebra(a, b) -> Algebra:
    A, B = a.space, b.space
    prod = compose(tensor(a.prod, b.prod), tensor(A, swap(B, A, a.field), B))
    return Algebra(tensor_spaces(A, B), tensor(a.unit, b.unit), prod)


def tensor_coalgebra(c, d) -> Coalgebra:
    C, D = c.space, d.space
    coprod = compose(tensor(C, swap(C, D, c.field), D), tensor(c.coprod, d.coprod))
    return Coalgebra(tensor_spaces(C, D), tensor(c.counit, d.counit), coprod)


def check_algebra_morphism(f: Morphism, a, b) -> LawReport:
    expect_shape(f, a.space, b.space, "algebra morphism")
    rep = LawReport("algebra morphism")
    rep.equal("preserves_unit", compose(f, a.unit), b.unit)
    rep.equal("preserves_product", compose(f, a.prod), compose(b.prod, tensor(f, f)))
    return rep


def check_coalgebra_morphism(f: Morphism, c, d) -> LawReport:
    expect_shape(f, c.space, d.space, "coalgebra morphism")
    rep = LawReport("coalgebra morphism")
    rep.equal("preserves_counit", compose(d.counit, f), c.counit)
    rep.equal("preserves_coproduct", compose(d.coprod, f), compose(tensor(f, f), c.coprod))
    return rep


# ---------------------------------------------------------------- modules


def check_module(m: Module) -> LawReport:
    A, M = m.over.space, m.carrier
    phi = m.action
    expect_shape(phi, tensor_spaces(A, M), M, "action")
    rep = LawReport("module")
    rep.equal("action_unit", compose(phi, tensor(m.over.unit, M)), identity(M, phi.field))
    rep.equal("action_product", compose(phi, tensor(A, phi)),
              compose(phi, tensor(m.over.prod, M)))
    return rep


def check_comodule(m: Comodule) -> LawReport:
    C, M = m.over.space, m.carrier
    rho = m.coaction
    expect_shape(rho, M, tensor_spaces(M, C), "coaction")
    rep = LawReport("comodule")
    rep.equal("coaction_counit", compose(tensor(M, m.over.counit), rho),
              identity(M, rho.field))
    rep.equal("coaction_coproduct", compose(tensor(rho, C), rho),
              compose(tensor(M, m.over.coprod), rho))
    return rep


def is_module_morphism(f: Morphism, m: Module, n: Module) -> bool:
    expect_shape(f, m.carrier, n.carrier, "module morphism")
    if m.over.space != n.over.space:
        raise ShapeMismatch("modules over different algebras")
    return compose(f, m.action) == compose(n.action, tensor(m.over.space, f))


def diagonal_action(coalg, phi_m: Morphism, m_space: Space,
                    phi_n: Morphism, n_space: Space) -> Morphism:
    """``(phi_M (x) phi_N) o (H (x) c_{H,M} (x) N) o (delta_H (x) M (x) N)``."""
    H = coalg.space
    return compose(tensor(phi_m, phi_n),
                   tensor(H, swap(H, m_space, phi_m.field), n_space),
                   tensor(coalg.coprod, m_space, n_space))


def _linearity_columns(phi_m, phi_n, a_dim, m_dim, n_dim, offset, cols):
    # Unknown f[i, j] has index i * m_dim + j; the equation for output row r
    # and input basis (a, m) of A (x) M has index offset + r * a_dim * m_dim + (a * m_dim + m).
    am = a_dim * m_dim
    for col_in, col in enumerate(phi_m._cols):
        for j, v in col.items():
            for r in range(n_dim):
                c = cols[r * m_dim + j]
                k = offset + r * am + col_in
                c[k] = c.get(k, 0) + v
    for col_in, col in enumerate(phi_n._cols):
        a, i = divmod(col_in, n_dim)
        for r, v in col.items():
            for m in range(m_dim):
                c = cols[i * m_dim + m]
                k = offset + r * am + a * m_dim + m
                c[k] = c.get(k, 0) - v
    return offset + n_dim * am


def module_hom_space(pairs, m_space: Space, n_space: Space) -> list:
    """Basis of the maps ``f: M -> N`` that are simultaneously linear for
    every ``(phi_M, phi_N)`` action pair in ``pairs``."""
    m_dim, n_dim = m_space.dim, n_space.dim
    cols = [dict() for _ in range(m_dim * n_dim)]
    offset = 0
    fld = None
    for phi_m, phi_n in pairs:
        fld = phi_m.field
        a_dim = phi_m.dom.dim // m_dim
        offset = _linearity_columns(phi_m, phi_n, a_dim, m_dim, n_dim, offset, cols)
    system = from_columns(cols, Space(m_dim * n_dim), Space(offset), fld)
    basis = nullspace(system)
    out = []
    for vec in basis.columns():
        fcols = [dict() for _ in range(m_dim)]
        for idx, v in vec.items():
            i, j = divmod(idx, m_dim)
            fcols[j][i] = v
        out.append(from_columns(fcols, m_space, n_space, fld))
    return out
