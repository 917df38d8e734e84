"""Hopf braces: two Hopf algebras on one coalgebra tied by a compatibility law."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolation, PreconditionFailed, ShapeMismatch, UnitMismatch
from .hopf import (HopfAlgebra, SmashProduct, cc_class_check, check_hopf,
                   check_module_algebra, opposite_hopf, smash_algebra)
from .laws import LawReport
from .linalg import Morphism, compose, swap, tensor
from .structures import Module, check_coalgebra_morphism, tensor_coalgebra

__all__ = [
    "HopfBrace", "gamma", "gamma_prime", "check_hopf_brace", "reconstruct_mu2",
    "brace_law", "gamma_prime_law", "gamma_law", "brace_char_equiv",
    "gamma_coalgebra_morphism_check", "trivial_brace", "opposite_brace", "brace_smash",
    "is_cocommutative_brace",
]


def _gamma(h1, h2) -> Morphism:
    # mu1 o (lambda1 (x) mu2) o (delta (x) H)
    H = h1.space
    return compose(h1.prod, tensor(h1.antipode, h2.prod), tensor(h1.coprod, H))


def _gamma_prime(h1, h2) -> Morphism:
    # mu1 o (mu2 (x) lambda1) o (H (x) c) o (delta (x) H)
    H = h1.space
    return compose(h1.prod, tensor(h2.prod, h1.antipode), tensor(H, swap(H, H, h1.field)),
                   tensor(h1.coprod, H))


def _shared_coalgebra(h1, h2) -> None:
    if h1.space != h2.space:
        raise ShapeMismatch(f"dimensions {h1.space.dim} and {h2.space.dim} differ")
    if h1.counit != h2.counit or h1.coprod != h2.coprod:
        raise PreconditionFailed("the two Hopf algebras do not share a coalgebra")


@dataclass(frozen=True)
class HopfBrace:
    """``(H1, H2)`` on a common coalgebra; ``gamma``/``gamma_prime`` are cached."""

    h1: HopfAlgebra
    h2: HopfAlgebra
    name: str = field(default="", compare=False)
    # the skew brace this was linearized from, if any
    source: object = field(default=None, compare=False, repr=False)
    gamma: Morphism = field(init=False, compare=False, repr=False)
    gamma_prime: Morphism = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _shared_coalgebra(self.h1, self.h2)
        if self.h1.unit != self.h2.unit:
            raise UnitMismatch("the two products have different units")
        object.__setattr__(self, "gamma", _gamma(self.h1, self.h2))
        object.__setattr__(self, "gamma_prime", _gamma_prime(self.h1, self.h2))

    @property
    def space(self):
        return self.h1.space

    @property
    def field(self):
        return self.h1.field

    @property
    def coalgebra(self):
        return self.h1.coalgebra

    @property
    def unit(self):
        return self.h1.unit


def gamma(b: HopfBrace) -> Morphism:
    """``Gamma`` recomputed from the structure maps (ignores the cache)."""
    return _gamma(b.h1, b.h2)


def gamma_prime(b: HopfBrace) -> Morphism:
    return _gamma_prime(b.h1, b.h2)


def is_cocommutative_brace(b: HopfBrace) -> bool:
    return compose(swap(b.space, b.space, b.field), b.h1.coprod) == b.h1.coprod


def _spread(h) -> Morphism:
    # (H (x) c (x) H) o (delta (x) H (x) H): H^3 -> H^4
    H = h.space
    return compose(tensor(H, swap(H, H, h.field), H), tensor(h.coprod, H, H))


def _compat_sides(h1, h2, g, gp) -> tuple:
    H = h1.space
    lhs = compose(h2.prod, tensor(H, h1.prod))
    spread = _spread(h1)
    rhs = compose(h1.prod, tensor(h2.prod, g), spread)
    rhs_prime = compose(h1.prod, tensor(gp, h2.prod), spread)
    return lhs, rhs, rhs_prime


def brace_law(h1, h2) -> bool:
    """The brace compatibility identity for the pair (no other checks)."""
    _shared_coalgebra(h1, h2)
    lhs, rhs, _ = _compat_sides(h1, h2, _gamma(h1, h2), _gamma_prime(h1, h2))
    return lhs == rhs


def check_hopf_brace(b: HopfBrace, components: bool = True) -> LawReport:
    rep = LawReport(f"hopf brace {b.name}".strip())
    if components:
        rep.extend(check_hopf(b.h1), "h1.")
        rep.extend(check_hopf(b.h2), "h2.")
    rep.equal("units_coincide", b.h1.unit, b.h2.unit)
    g, gp = gamma(b), gamma_prime(b)
    rep.flag("gamma_cache", g == b.gamma and gp == b.gamma_prime,
             "cached actions match a fresh computation")
    lhs, rhs, rhs_prime = _compat_sides(b.h1, b.h2, g, gp)
    first = rep.equal("brace_compatibility", lhs, rhs)
    second = rep.equal("brace_compatibility_prime", lhs, rhs_prime)
    rep.flag("compatibility_forms_agree", first == second)
    return rep


def reconstruct_mu2(b: HopfBrace) -> LawReport:
    h1, h2 = b.h1, b.h2
    H = b.space
    rep = LawReport("second product from gamma")
    rep.equal("mu2_from_gamma", compose(h1.prod, tensor(H, gamma(b)), tensor(h1.coprod, H)),
              h2.prod)
    rep.equal("mu2_from_gamma_prime",
              compose(h1.prod, tensor(gamma_prime(b), H), tensor(H, swap(H, H, b.field)),
                      tensor(h1.coprod, H)),
              h2.prod)
    return rep


def _action_multiplicative(g: Morphism, h1) -> bool:
    # g o (H (x) mu1) == mu1 o (g (x) g) o (H (x) c (x) H) o (delta (x) H (x) H)
    H = h1.space
    return compose(g, tensor(H, h1.prod)) == compose(h1.prod, tensor(g, g), _spread(h1))


def gamma_prime_law(h1, h2) -> bool:
    _shared_coalgebra(h1, h2)
    return _action_multiplicative(_gamma_prime(h1, h2), h1)


def gamma_law(h1, h2) -> bool:
    _shared_coalgebra(h1, h2)
    return _action_multiplicative(_gamma(h1, h2), h1)


def brace_char_equiv(h1, h2) -> tuple:
    """``(brace law holds, Gamma' is multiplicative)`` computed independently.

    The first entry is the compatibility identity alone; whether ``h1`` and
    ``h2`` are Hopf algebras is the caller's precondition.
    """
    return brace_law(h1, h2), gamma_prime_law(h1, h2)


def gamma_coalgebra_morphism_check(b: HopfBrace, strict: bool = True) -> tuple:
    """``(cc(Gamma), Gamma coalgebra map, cc(Gamma'), Gamma' coalgebra map)``.

    Membership in the cocommutativity class of ``H2`` implies the coalgebra
    property; with ``strict`` a violation raises :class:`ContractViolation`.
    """
    h1, h2 = b.h1, b.h2
    HH = tensor_coalgebra(h2, h1)
    out = []
    for g in (gamma(b), gamma_prime(b)):
        cc = cc_class_check(Module(b.space, g, h2))
        coalg = check_coalgebra_morphism(g, HH, h1).ok
        if strict and cc and not coalg:
            raise ContractViolation("cc-class action that is not a coalgebra morphism")
        out += [cc, coalg]
    return tuple(out)


def trivial_brace(h: HopfAlgebra, check: bool = True) -> HopfBrace:
    if check:
        rep = check_hopf(h)
        if not rep.ok:
            raise PreconditionFailed("not a Hopf algebra", rep)
    return HopfBrace(h, h, name=f"triv({h.name})" if h.name else "")


def opposite_brace(h: HopfAlgebra) -> HopfBrace:
    """``(H, H^op)``: a brace whenever the antipode is invertible."""
    return HopfBrace(h, opposite_hopf(h), name=f"op({h.name})" if h.name else "")


def brace_smash(b: HopfBrace, check: bool = True) -> SmashProduct:
    """``H1 # H2`` for the action ``Gamma'`` of ``H2`` on ``H1``."""
    if check:
        rep = check_module_algebra(b.h1, b.gamma_prime, b.h2)
        if not rep.ok:
            raise PreconditionFailed("Gamma' is not a module algebra action", rep)
    return smash_algebra(b.h1, b.gamma_prime, b.h2, check=False)
