"""Modules over Hopf braces and the functors relating them to ordinary modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolation, NotInCCClass, PreconditionFailed
from .hopf import (DoiHopfModule, SmashProduct, cc_class_check, functor_R, functor_S)
from .hopfbrace import HopfBrace, brace_smash
from .laws import LawReport
from .linalg import K, Morphism, Space, compose, permutation, swap, tensor, tensor_spaces
from .structures import Module, check_module, diagonal_action

__all__ = [
    "BraceModule", "AcObject", "gamma_M", "check_brace_module", "zhu_sides", "check_zhu",
    "functor_F", "functor_G", "functor_U", "functor_V", "check_ac_object",
    "tensor_module", "gamma_tensor", "doi_hopf_of_brace_module", "brace_module_of_doi_hopf",
    "regular_module", "trivial_module", "induced_module", "standard_modules", "MAX_CARRIER",
]

MAX_CARRIER = 16


def _gamma_m(b: HopfBrace, act1: Morphism, act2: Morphism, M: Space) -> Morphism:
    # phi1 o (lambda1 (x) phi2) o (delta (x) M)
    return compose(act1, tensor(b.h1.antipode, act2), tensor(b.h1.coprod, M))


@dataclass(frozen=True)
class BraceModule:
    """``(M, phi1, phi2)`` over a Hopf brace; ``gamma`` is cached."""

    carrier: Space
    act1: Morphism
    act2: Morphism
    over: HopfBrace
    name: str = field(default="", compare=False)
    gamma: Morphism = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gamma", _gamma_m(self.over, self.act1, self.act2, self.carrier))

    def same_structure(self, other: "BraceModule") -> bool:
        return (self.carrier == other.carrier and self.act1 == other.act1
                and self.act2 == other.act2)


@dataclass(frozen=True)
class AcObject:
    """``(M, phi, phi')``: an ``H1``-action that is ``H2``-linear for ``phi'``."""

    carrier: Space
    act: Morphism
    phi: Morphism
    over: HopfBrace
    name: str = field(default="", compare=False)


def gamma_M(m: BraceModule) -> Morphism:
    return _gamma_m(m.over, m.act1, m.act2, m.carrier)


def _spread_m(b: HopfBrace, M: Space) -> Morphism:
    # (H (x) c_{H,H} (x) M) o (delta (x) H (x) M)
    H = b.space
    return compose(tensor(H, swap(H, H, b.field), M), tensor(b.h1.coprod, H, M))


def check_brace_module(m: BraceModule, components: bool = True) -> LawReport:
    b, M = m.over, m.carrier
    H = b.space
    rep = LawReport(f"brace module {m.name}".strip())
    if components:
        rep.extend(check_module(Module(M, m.act1, b.h1)), "h1.")
        rep.extend(check_module(Module(M, m.act2, b.h2)), "h2.")
    g = gamma_M(m)
    lhs = compose(m.act2, tensor(H, m.act1))
    spread = _spread_m(b, M)
    first = rep.equal("module_compatibility", lhs,
                      compose(m.act1, tensor(b.h2.prod, g), spread))
    second = rep.equal("module_compatibility_prime", lhs,
                       compose(m.act1, tensor(b.gamma_prime, m.act2), spread))
    rep.flag("compatibility_forms_agree", first == second)
    rep.equal("act2_from_gamma", compose(m.act1, tensor(H, g), tensor(b.h1.coprod, M)), m.act2)
    return rep


def _flipped_gamma(m: BraceModule) -> Morphism:
    # (Gamma_M (x) H) o (H (x) c_{H,M}) o ((c o delta) (x) M): H (x) M -> M (x) H
    b, M = m.over, m.carrier
    H = b.space
    fld = b.field
    return compose(tensor(gamma_M(m), H), tensor(H, swap(H, M, fld)),
                   tensor(compose(swap(H, H, fld), b.h1.coprod), M))


def zhu_sides(m: BraceModule) -> tuple:
    """``(full Zhu identity, split-off condition)`` without any contract check."""
    b, M = m.over, m.carrier
    H = b.space
    fld = b.field
    delta = b.h1.coprod
    x = _flipped_gamma(m)
    route2 = compose(tensor(m.act2, H), tensor(H, swap(H, M, fld)))
    zhu = (compose(route2, tensor(delta, m.act1))
           == compose(tensor(m.act1, H), tensor(b.h2.prod, x), _spread_m(b, M)))
    cond = (compose(route2, tensor(delta, M))
            == compose(tensor(m.act1, H), tensor(H, x), tensor(delta, M)))
    return zhu, cond


def check_zhu(m: BraceModule, strict: bool = True) -> tuple:
    """``(zhu, cond_only, cc_gamma)`` for a brace module.

    The Zhu identity is equivalent to the split-off condition (given the
    module compatibility) and to ``Gamma_M`` lying in the cocommutativity
    class of ``H2``; with ``strict`` any disagreement raises
    :class:`ContractViolation`.
    """
    pre = check_brace_module(m)
    if not pre.ok:
        raise PreconditionFailed("not a brace module", pre)
    zhu, cond = zhu_sides(m)
    cc = cc_class_check(Module(m.carrier, gamma_M(m), m.over.h2))
    if strict and not (zhu == cond == cc):
        raise ContractViolation(f"Zhu condition {zhu}, split-off {cond}, cc-class {cc} disagree")
    return zhu, cond, cc


# ---------------------------------------------------------------- F / G


def functor_F(m: BraceModule, smash: SmashProduct | None = None) -> Module:
    """Brace module to an ``H1 # H2``-module: ``phi1 o (H (x) phi2)``."""
    b = m.over
    smash = smash or brace_smash(b, check=False)
    return Module(m.carrier, compose(m.act1, tensor(b.space, m.act2)), smash)


def functor_G(s: Module, b: HopfBrace, name: str = "") -> BraceModule:
    """``H1 # H2``-module to a brace module by restricting along the units."""
    M = s.carrier
    eta = b.unit
    act1 = compose(s.action, tensor(b.space, eta, M))
    act2 = compose(s.action, tensor(eta, b.space, M))
    return BraceModule(M, act1.with_spaces(tensor_spaces(b.space, M), M),
                       act2.with_spaces(tensor_spaces(b.space, M), M), b, name=name)


# ---------------------------------------------------------------- U / V


def check_ac_object(a: AcObject) -> LawReport:
    b, M = a.over, a.carrier
    H = b.space
    rep = LawReport(f"action object {a.name}".strip())
    rep.extend(check_module(Module(M, a.act, b.h1)), "h1.")
    rep.extend(check_module(Module(M, a.phi, b.h2)), "h2.")
    rep.equal("action_is_linear", compose(a.phi, tensor(H, a.act)),
              compose(a.act, tensor(b.gamma, a.phi), _spread_m(b, M)))
    return rep


def functor_U(a: AcObject) -> BraceModule:
    b = a.over
    act2 = compose(a.act, tensor(b.space, a.phi), tensor(b.h1.coprod, a.carrier))
    return BraceModule(a.carrier, a.act, act2, b, name=a.name)


def functor_V(m: BraceModule) -> AcObject:
    return AcObject(m.carrier, m.act1, gamma_M(m), m.over, name=m.name)


# ---------------------------------------------------------------- tensor products


def gamma_tensor(m: BraceModule, n: BraceModule) -> Morphism:
    """``(Gamma_M (x) Gamma_N) o (H (x) c_{H,M} (x) N) o (delta (x) M (x) N)``."""
    return diagonal_action(m.over.h1, gamma_M(m), m.carrier, gamma_M(n), n.carrier)


def tensor_module(m: BraceModule, n: BraceModule) -> BraceModule:
    """Tensor product of modules whose ``Gamma`` lies in the cc class of ``H2``."""
    b = m.over
    for x in (m, n):
        if not cc_class_check(Module(x.carrier, gamma_M(x), b.h2)):
            raise NotInCCClass(f"Gamma of {x.name or 'module'} is outside the cocommutativity class")
    M, N = m.carrier, n.carrier
    act1 = diagonal_action(b.h1, m.act1, M, n.act1, N)
    act2 = diagonal_action(b.h1, m.act2, M, n.act2, N)
    name = f"{m.name}*{n.name}" if m.name and n.name else ""
    out = BraceModule(tensor_spaces(M, N), act1, act2, b, name=name)
    if out.gamma != gamma_tensor(m, n):
        raise ContractViolation("Gamma of a tensor product is not the diagonal Gamma")
    return out


# ---------------------------------------------------------------- Doi-Hopf


def doi_hopf_of_brace_module(m: BraceModule) -> DoiHopfModule:
    """The ``(H1, H2*)``-Doi-Hopf module attached to a brace module."""
    return functor_S(functor_F(m))


def brace_module_of_doi_hopf(d: DoiHopfModule, b: HopfBrace, name: str = "") -> BraceModule:
    return functor_G(functor_R(d), b, name=name)


# ---------------------------------------------------------------- generators


def regular_module(b: HopfBrace) -> BraceModule:
    return BraceModule(b.space, b.h1.prod, b.h2.prod, b, name="regular")


def trivial_module(b: HopfBrace) -> BraceModule:
    eps = tensor(b.h1.counit, K)
    return BraceModule(K, eps, eps, b, name="trivial")


def induced_module(b: HopfBrace, phi: Morphism, M: Space, name: str = "") -> BraceModule:
    """``(M, eps (x) M, phi)`` for an ``H2``-module ``(M, phi)``."""
    return BraceModule(M, tensor(b.h1.counit, M), phi, b, name=name)


def _h2_permutation_modules(b: HopfBrace, cap: int) -> list:
    s = b.source
    fld = b.field
    if s is None:
        return [(b.h2.prod, b.space, "regular-h2"), (tensor(b.h2.counit, K), K, "trivial-h2")]
    from .skewbrace import coset_action, subgroups

    out = []
    n = s.n
    for sub in subgroups(s.circ):
        cosets, act = coset_action(s.circ, sub)
        k = len(cosets)
        if k > min(cap, n):
            continue
        M = Space(k, tuple(f"c{i}" for i in range(k)))
        images = [act[a][i] for a in range(n) for i in range(k)]
        phi = permutation(images, tensor_spaces(b.space, M), M, fld)
        out.append((phi, M, f"cosets{len(sub)}"))
    return out


def standard_modules(b: HopfBrace, cap: int = MAX_CARRIER) -> list:
    """Regular, trivial, induced from ``H2`` permutation modules, and the
    pullback of the regular ``H1 # H2``-module (when it fits under ``cap``)."""
    mods = [regular_module(b), trivial_module(b)]
    for phi, M, label in _h2_permutation_modules(b, cap):
        mods.append(induced_module(b, phi, M, name=f"induced-{label}"))
    n = b.space.dim
    if n * n <= cap:
        smash = brace_smash(b, check=False)
        mods.append(functor_G(Module(smash.space, smash.prod, smash), b, name="smash-regular"))
    return [m for m in mods if m.carrier.dim <= cap]
