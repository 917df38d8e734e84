"""Bialgebras and Hopf algebras and the constructions built on them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (AntipodeNotInvertible, ContractViolation, NoAntipode,
                     NotInCCClass, PreconditionFailed)
from .laws import LawReport
from .linalg import (K, Morphism, Space, compose, dual_pair, from_columns,
                     identity, inverse, solve, swap, tensor, tensor_spaces)
from .structures import (Algebra, Coalgebra, Comodule, Module, check_algebra,
                         check_algebra_morphism, check_coalgebra,
                         check_coalgebra_morphism, check_comodule, check_module,
                         convolution, convolution_unit, diagonal_action,
                         expect_shape, is_cocommutative, is_commutative,
                         tensor_algebra, tensor_coalgebra)

__all__ = [
    "Bialgebra", "HopfAlgebra", "ComoduleAlgebra", "SmashProduct", "DoiHopfModule",
    "check_bialgebra", "solve_antipode", "check_hopf", "dual_hopf", "opposite_hopf",
    "adjoint_action", "cc_class_sides", "cc_class_check", "adjoint_cc_sides",
    "check_adjoint_cc_iff", "check_module_algebra", "check_module_coalgebra",
    "check_comodule_algebra", "smash_algebra", "smash_hopf", "doi_hopf_check",
    "comodule_algebra_from_action", "action_from_comodule_algebra",
    "functor_S", "functor_R", "trivial_action",
]


@dataclass(frozen=True)
class Bialgebra:
    space: Space
    unit: Morphism
    prod: Morphism
    counit: Morphism
    coprod: Morphism

    @property
    def field(self):
        return self.prod.field

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.space, self.unit, self.prod)

    @property
    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.space, self.counit, self.coprod)


@dataclass(frozen=True)
class HopfAlgebra(Bialgebra):
    antipode: Morphism
    name: str = field(default="", compare=False)

    @property
    def bialgebra(self) -> Bialgebra:
        return Bialgebra(self.space, self.unit, self.prod, self.counit, self.coprod)


def check_bialgebra(b) -> LawReport:
    H = b.space
    rep = LawReport("bialgebra")
    rep.extend(check_algebra(b))
    rep.extend(check_coalgebra(b))
    eps, delta, eta, mu = b.counit, b.coprod, b.unit, b.prod
    rep.equal("counit_of_unit", compose(eps, eta), identity(K, b.field))
    rep.equal("counit_multiplicative", compose(eps, mu), tensor(eps, eps))
    rep.equal("coproduct_of_unit", compose(delta, eta), tensor(eta, eta))
    rep.equal("coproduct_multiplicative", compose(delta, mu),
              compose(tensor(mu, mu), tensor(H, swap(H, H, b.field), H), tensor(delta, delta)))
    return rep


def solve_antipode(b, pivot_order=None) -> HopfAlgebra:
    """Solve ``mu o (S (x) id) o delta = eta o eps`` exactly for ``S``.

    The unknowns are the n^2 entries of ``S`` (``S[a, k]`` has index
    ``a * n + k``); equations are indexed by the entries ``(r, j)`` of the
    convolution.  Both one-sided identities are verified afterwards.
    """
    H = b.space
    n = H.dim
    expect_shape(b.prod, tensor_spaces(H, H), H, "product")
    expect_shape(b.coprod, H, tensor_spaces(H, H), "coproduct")
    fld = b.field
    mu_cols = b.prod._cols
    cols = [dict() for _ in range(n * n)]
    for j, dcol in enumerate(b.coprod._cols):
        for kl, d in dcol.items():
            k, l = divmod(kl, n)
            for a in range(n):
                for r, m in mu_cols[a * n + l].items():
                    c = cols[a * n + k]
                    idx = r * n + j
                    c[idx] = c.get(idx, 0) + m * d
    system = from_columns(cols, Space(n * n), Space(n * n), fld)
    target = convolution_unit(b, b)
    rhs = from_columns([{r * n + j: v for j, col in enumerate(target._cols)
                         for r, v in col.items()}], K, Space(n * n), fld)
    sol = solve(system, rhs, pivot_order)
    if sol is None:
        raise NoAntipode("identity has no left convolution inverse")
    scol = sol.column(0)
    s_cols = [dict() for _ in range(n)]
    for idx, v in scol.items():
        a, k = divmod(idx, n)
        s_cols[k][a] = v
    s = from_columns(s_cols, H, H, fld)
    ident = identity(H, fld)
    if convolution(s, ident, b, b) != target or convolution(ident, s, b, b) != target:
        raise NoAntipode("left convolution inverse is not a right inverse")
    return HopfAlgebra(H, b.unit, b.prod, b.counit, b.coprod, s,
                       name=getattr(b, "name", ""))


def check_hopf(h: HopfAlgebra) -> LawReport:
    H = h.space
    lam = h.antipode
    expect_shape(lam, H, H, "antipode")
    fld = h.field
    c = swap(H, H, fld)
    ident = identity(H, fld)
    unit = convolution_unit(h, h)
    rep = LawReport(f"hopf {h.name}".strip())
    rep.extend(check_bialgebra(h))
    rep.equal("antipode_left", convolution(lam, ident, h, h), unit)
    rep.equal("antipode_right", convolution(ident, lam, h, h), unit)
    rep.equal("antimultiplicative", compose(lam, h.prod), compose(h.prod, c, tensor(lam, lam)))
    rep.equal("anticomultiplicative", compose(h.coprod, lam),
              compose(tensor(lam, lam), c, h.coprod))
    rep.equal("antipode_unit", compose(lam, h.unit), h.unit)
    rep.equal("antipode_counit", compose(h.counit, lam), h.counit)
    if is_commutative(h) or is_cocommutative(h):
        rep.equal("involutive", compose(lam, lam), ident)
    return rep


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis, assembled from the
    coevaluation ``a: K -> H (x) H*`` and evaluation ``b: H* (x) H -> K``."""
    H = h.space
    Hd = H.dual()
    fld = h.field
    a, b = dual_pair(H, fld)
    a = a.with_spaces(cod=tensor_spaces(H, Hd))
    b = b.with_spaces(dom=tensor_spaces(Hd, H))
    c = swap(H, H, fld)
    unit = compose(tensor(h.counit, Hd), a)
    counit = compose(b, tensor(Hd, h.unit))
    prod = compose(
        tensor(compose(b, tensor(Hd, b, H)), Hd),
        tensor(Hd, Hd, compose(tensor(compose(c, h.coprod), Hd), a)))
    coprod = compose(
        tensor(compose(b, tensor(Hd, compose(h.prod, c))), Hd, Hd),
        tensor(Hd, compose(tensor(H, a, Hd), a)))
    antipode = compose(tensor(compose(b, tensor(Hd, h.antipode)), Hd), tensor(Hd, a))
    name = h.name[:-1] if h.name.endswith("*") else (h.name + "*" if h.name else "")
    return HopfAlgebra(Hd, unit.with_spaces(K, Hd), prod.with_spaces(tensor_spaces(Hd, Hd), Hd),
                       counit.with_spaces(Hd, K), coprod.with_spaces(Hd, tensor_spaces(Hd, Hd)),
                       antipode.with_spaces(Hd, Hd), name=name)


def opposite_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """``(H, eta, mu o c, eps, delta, lambda^{-1})``."""
    inv = inverse(h.antipode)
    if inv is None:
        raise AntipodeNotInvertible("opposite algebra needs an invertible antipode")
    prod = compose(h.prod, swap(h.space, h.space, h.field))
    name = f"{h.name}^op" if h.name else ""
    return HopfAlgebra(h.space, h.unit, prod, h.counit, h.coprod, inv, name=name)


def trivial_action(h, m_space) -> Morphism:
    """``eps_H (x) M``."""
    return tensor(h.counit, m_space)


# ---------------------------------------------------------------- adjoint action & cc class


def adjoint_action(h: HopfAlgebra) -> Module:
    H = h.space
    phi = compose(h.prod, tensor(h.prod, h.antipode), tensor(H, swap(H, H, h.field)),
                  tensor(h.coprod, H))
    return Module(H, phi, h)


def cc_class_sides(m: Module) -> tuple:
    """Evaluate both formulations of the cocommutativity-class condition.

    Returns ``(holds_in_swap_form, holds_in_plain_form)``; symmetry of the
    ambient category makes them equivalent.
    """
    h = m.over
    H, M = h.space, m.carrier
    phi = m.action
    fld = phi.field
    delta = h.coprod
    flip_delta = compose(swap(H, H, fld), delta)
    route = compose(tensor(phi, H), tensor(H, swap(H, M, fld)))
    form1 = compose(route, tensor(delta, M)) == compose(route, tensor(flip_delta, M))
    form2 = (compose(tensor(H, phi), tensor(delta, M))
             == compose(tensor(H, phi), tensor(flip_delta, M)))
    return form1, form2


def cc_class_check(m: Module) -> bool:
    """Does ``(M, phi)`` lie in the cocommutativity class of its Hopf algebra?"""
    form1, form2 = cc_class_sides(m)
    if form1 != form2:
        raise ContractViolation("the two cocommutativity-class forms disagree")
    return form1


def adjoint_cc_sides(h: HopfAlgebra) -> tuple:
    """``(adjoint action is a coalgebra morphism, adjoint module is in the cc class)``."""
    if inverse(h.antipode) is None:
        raise AntipodeNotInvertible(f"antipode of {h.name or 'H'} is singular")
    adj = adjoint_action(h)
    coalg = check_coalgebra_morphism(adj.action, tensor_coalgebra(h, h), h).ok
    return coalg, cc_class_check(adj)


def check_adjoint_cc_iff(h: HopfAlgebra) -> bool:
    coalg, cc = adjoint_cc_sides(h)
    return coalg == cc


# ---------------------------------------------------------------- module (co)algebras


def check_module_algebra(a, phi: Morphism, h) -> LawReport:
    """Left ``H``-module algebra laws for ``(A, phi)``."""
    A = a.space
    rep = LawReport("module algebra")
    rep.extend(check_module(Module(A, phi, h)))
    rep.equal("unit_linear", compose(phi, tensor(h.space, a.unit)), tensor(h.counit, a.unit))
    rep.equal("product_linear", compose(phi, tensor(h.space, a.prod)),
              compose(a.prod, diagonal_action(h, phi, A, phi, A)))
    return rep


def check_module_coalgebra(c, phi: Morphism, h) -> LawReport:
    C = c.space
    rep = LawReport("module coalgebra")
    rep.extend(check_module(Module(C, phi, h)))
    rep.equal("counit_linear", compose(c.counit, phi), tensor(h.counit, c.counit))
    rep.equal("coproduct_linear", compose(c.coprod, phi),
              compose(diagonal_action(h, phi, C, phi, C), tensor(h.space, c.coprod)))
    return rep


@dataclass(frozen=True)
class ComoduleAlgebra:
    """A right ``H``-comodule algebra ``(A, rho_A)``."""

    algebra: Algebra
    coaction: Morphism
    hopf: HopfAlgebra


def check_comodule_algebra(ca: ComoduleAlgebra) -> LawReport:
    a, rho, h = ca.algebra, ca.coaction, ca.hopf
    A, H = a.space, h.space
    fld = rho.field
    rep = LawReport("comodule algebra")
    rep.extend(check_comodule(Comodule(A, rho, h)))
    unit_ok = rep.equal("unit_colinear", compose(rho, a.unit), tensor(a.unit, h.unit))
    rho_aa = compose(tensor(A, A, h.prod), tensor(A, swap(H, A, fld), H), tensor(rho, rho))
    prod_ok = rep.equal("product_colinear", compose(rho, a.prod),
                        compose(tensor(a.prod, H), rho_aa))
    as_morphism = check_algebra_morphism(rho, a, tensor_algebra(a, h)).ok
    rep.flag("algebra_morphism_equivalence", as_morphism == (unit_ok and prod_ok),
             "colinearity of unit and product iff the coaction is an algebra morphism")
    return rep


# ---------------------------------------------------------------- smash products


@dataclass(frozen=True)
class SmashProduct(Algebra):
    """``A # H`` together with the data it was built from."""

    base: Algebra = None
    action: Morphism = None
    hopf: HopfAlgebra = None


def _psi(a_space: Space, phi: Morphism, h) -> Morphism:
    # (phi (x) H) o (H (x) c_{H,A}) o (delta_H (x) A): H (x) A -> A (x) H
    H = h.space
    return compose(tensor(phi, H), tensor(H, swap(H, a_space, phi.field)), tensor(h.coprod, a_space))


def smash_algebra(a, phi: Morphism, h, check: bool = True) -> SmashProduct:
    if check:
        rep = check_module_algebra(a, phi, h)
        if not rep.ok:
            raise PreconditionFailed("action is not a module algebra action", rep)
    A, H = a.space, h.space
    psi = _psi(A, phi, h)
    prod = compose(tensor(a.prod, h.prod), tensor(A, psi, H))
    return SmashProduct(tensor_spaces(A, H), tensor(a.unit, h.unit), prod,
                        base=Algebra(A, a.unit, a.prod), action=phi, hopf=h)


def smash_hopf(a: HopfAlgebra, phi: Morphism, h: HopfAlgebra) -> HopfAlgebra:
    """The smash product Hopf algebra; needs the cocommutativity class."""
    rep = check_module_algebra(a, phi, h)
    if not rep.ok:
        raise PreconditionFailed("action is not a module algebra action", rep)
    rep = check_module_coalgebra(a, phi, h)
    if not rep.ok:
        raise PreconditionFailed("action is not a module coalgebra action", rep)
    if not cc_class_check(Module(a.space, phi, h)):
        raise NotInCCClass("the action is outside the cocommutativity class; "
                           "the smash product is only an algebra")
    A, H = a.space, h.space
    alg = smash_algebra(a, phi, h, check=False)
    coalg = tensor_coalgebra(a, h)
    antipode = compose(_psi(A, phi, h), tensor(h.antipode, a.antipode), swap(A, H, phi.field))
    name = f"{a.name}#{h.name}" if a.name and h.name else ""
    return HopfAlgebra(alg.space, alg.unit, alg.prod, coalg.counit, coalg.coprod, antipode,
                       name=name)


# ---------------------------------------------------------------- Doi-Hopf modules


@dataclass(frozen=True)
class DoiHopfModule:
    """Left-right ``(A, H)``-Doi-Hopf module ``(M, phi_M, rho_M)``."""

    carrier: Space
    action: Morphism
    coaction: Morphism
    over: ComoduleAlgebra


def doi_hopf_check(d: DoiHopfModule, check_over: bool = True) -> LawReport:
    ca = d.over
    if check_over:
        pre = check_comodule_algebra(ca)
        if not pre.ok:
            raise PreconditionFailed("base is not a comodule algebra", pre)
    a, h = ca.algebra, ca.hopf
    M, H, A = d.carrier, h.space, a.space
    phi, rho = d.action, d.coaction
    rep = LawReport("doi-hopf module")
    rep.extend(check_module(Module(M, phi, a)))
    rep.extend(check_comodule(Comodule(M, rho, h)))
    rhs = compose(tensor(phi, h.prod), tensor(A, swap(H, M, phi.field), H),
                  tensor(ca.coaction, rho))
    rep.equal("doi_hopf_compatibility", compose(rho, phi), rhs)
    return rep


def comodule_algebra_from_action(a, phi: Morphism, h: HopfAlgebra) -> ComoduleAlgebra:
    """An ``H``-module algebra viewed as a right ``H*``-comodule algebra."""
    A, H = a.space, h.space
    hd = dual_hopf(h)
    Hd = hd.space
    coev, _ = dual_pair(H, phi.field)
    rho = compose(tensor(phi, Hd), tensor(H, swap(Hd, A, phi.field)), tensor(coev, A))
    return ComoduleAlgebra(Algebra(A, a.unit, a.prod), rho.with_spaces(A, tensor_spaces(A, Hd)), hd)


def action_from_comodule_algebra(ca: ComoduleAlgebra, h: HopfAlgebra) -> Morphism:
    """Inverse of :func:`comodule_algebra_from_action`: ``H (x) A -> A``."""
    A, H = ca.algebra.space, h.space
    _, ev = dual_pair(H, ca.coaction.field)
    return compose(tensor(A, ev), tensor(ca.coaction, H), swap(H, A, ca.coaction.field))


def functor_S(m: Module) -> DoiHopfModule:
    """``A # H``-modules to ``(A, H*)``-Doi-Hopf modules."""
    s = m.over
    if not isinstance(s, SmashProduct):
        raise PreconditionFailed("functor_S needs a module over a smash product")
    a, phi_a, h = s.base, s.action, s.hopf
    A, H, M = a.space, h.space, m.carrier
    psi = m.action
    fld = psi.field
    ca = comodule_algebra_from_action(a, phi_a, h)
    Hd = ca.hopf.space
    coev, _ = dual_pair(H, fld)
    action = compose(psi, tensor(A, h.unit, M))
    coaction = compose(tensor(psi, Hd), tensor(A, H, swap(Hd, M, fld)), tensor(a.unit, coev, M))
    return DoiHopfModule(M, action.with_spaces(tensor_spaces(A, M), M),
                         coaction.with_spaces(M, tensor_spaces(M, Hd)), ca)


def functor_R(d: DoiHopfModule) -> Module:
    """``(A, H*)``-Doi-Hopf modules to ``A # H``-modules, ``H = (H*)*``."""
    ca = d.over
    h = dual_hopf(ca.hopf)
    a = ca.algebra
    A, H, M = a.space, h.space, d.carrier
    fld = d.action.field
    _, ev = dual_pair(H, fld)
    phi_a = action_from_comodule_algebra(ca, h)
    smash = smash_algebra(a, phi_a, h, check=False)
    psi = compose(tensor(d.action, ev), tensor(A, compose(tensor(d.coaction, H), swap(H, M, fld))))
    return Module(M, psi.with_spaces(tensor_spaces(A, H, M), M), smash)
