"""Verification suites over the built-in (or a loaded) catalog.

Each suite returns a :class:`RunReport`; ``SUITES`` maps the names used by
``hbl verify --theorem`` to the suite functions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .catalog import braces as catalog_braces
from .catalog import groups, hopf_algebras, non_cc_action
from .errors import HBLError, NoAntipode, NotInCCClass
from .hopf import (HopfAlgebra, SmashProduct, adjoint_action, adjoint_cc_sides,
                   check_bialgebra, check_hopf, check_module_algebra, doi_hopf_check,
                   dual_hopf, functor_R, functor_S, smash_algebra, solve_antipode)
from .hopfbrace import (HopfBrace, brace_char_equiv, brace_smash, check_hopf_brace,
                        gamma_coalgebra_morphism_check, gamma_law, is_cocommutative_brace,
                        reconstruct_mu2)
from .laws import LawReport
from .linalg import QQ, K, compose, dual_pair, identity, inverse, permutation, swap, tensor
from .modules import (BraceModule, check_ac_object, check_brace_module, check_zhu,
                      functor_F, functor_G, functor_U, functor_V, gamma_M, standard_modules,
                      tensor_module, trivial_module)
from .mutation import perturb
from .skewbrace import (check_skew_brace, enumerate_skew_braces, enumerate_skew_braces_naive,
                        group_algebra, group_tables, linearize, semidirect_product)
from .structures import Algebra, Module, check_module, is_module_morphism, module_hom_space

__all__ = ["RunReport", "SUITES", "run_suite"]

DOI_HOPF_MAX_TOTAL = 256


@dataclass
class RunReport:
    suite: str
    instances: int = 0
    passed: int = 0
    failed: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    metrics: dict = field(default_factory=dict)
    wall_time: float | None = None

    def add(self, instance: str, failures) -> bool:
        """Record one instance; ``failures`` is a list of ``(law, entry)``."""
        self.instances += 1
        failures = list(failures)
        if failures:
            for law, entry in failures:
                self.failed.append({"instance": instance, "law": law,
                                    "entry": list(entry) if entry is not None else None})
        else:
            self.passed += 1
        return not failures

    def skip(self, instance: str, reason: str) -> None:
        self.instances += 1
        self.skipped.append({"instance": instance, "reason": reason})

    @property
    def failed_instances(self) -> int:
        return len({f["instance"] for f in self.failed})

    @property
    def ok(self) -> bool:
        return not self.failed

    def as_dict(self, timing: bool = False) -> dict:
        d = {"suite": self.suite, "instances": self.instances, "passed": self.passed,
             "failed": self.failed, "skipped": self.skipped, "notes": self.notes}
        if self.metrics:
            d["metrics"] = self.metrics
        if timing and self.wall_time is not None:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.suite}: {status}  instances={self.instances} passed={self.passed} "
                 f"failed={self.failed_instances} skipped={len(self.skipped)}"]
        for f in self.failed[:20]:
            at = f" at entry {tuple(f['entry'])}" if f["entry"] is not None else ""
            lines.append(f"  FAIL {f['instance']}: {f['law']}{at}")
        for s in self.skipped:
            lines.append(f"  SKIP {s['instance']}: {s['reason']}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


class _Checks:
    """Collects failures for one instance."""

    def __init__(self):
        self.failures = []

    def report(self, rep: LawReport, prefix: str = "") -> bool:
        for r in rep.failures():
            self.failures.append((prefix + r.law, r.witness))
        return rep.ok

    def equal(self, law: str, lhs, rhs) -> bool:
        diff = lhs.first_difference(rhs)
        if diff is None and (lhs.dom != rhs.dom or lhs.cod != rhs.cod):
            diff = (-1, -1)
        if diff is not None:
            self.failures.append((law, diff))
        return diff is None

    def flag(self, law: str, ok: bool) -> bool:
        if not ok:
            self.failures.append((law, None))
        return bool(ok)


def _default_braces(order: int, field) -> list:
    return catalog_braces(order, field)


# ---------------------------------------------------------------- Hopf algebras


def suite_hopf(field=QQ, **_) -> RunReport:
    rep = RunReport("hopf")
    for name, g in groups().items():
        c = _Checks()
        h = group_algebra(g, field, name=f"K[{name}]")
        c.report(check_hopf(h))
        inversion = permutation(list(g.inv), h.space, h.space, field)
        solved = solve_antipode(h.bialgebra)
        c.equal("antipode_solver", solved.antipode, inversion)
        n = h.space.dim
        again = solve_antipode(h.bialgebra, pivot_order=list(reversed(range(n * n))))
        c.equal("antipode_unique", again.antipode, solved.antipode)
        rep.add(h.name, c.failures)
    return rep


def _transpose_dual(h: HopfAlgebra) -> tuple:
    return (h.counit.transpose(), h.coprod.transpose(), h.unit.transpose(),
            h.prod.transpose(), h.antipode.transpose())


def suite_dual(field=QQ, **_) -> RunReport:
    rep = RunReport("dual")
    for h in hopf_algebras(8, field):
        c = _Checks()
        d = dual_hopf(h)
        c.report(check_hopf(d), "dual.")
        dd = dual_hopf(d)
        for m in ("unit", "prod", "counit", "coprod", "antipode"):
            c.equal(f"double_dual.{m}", getattr(dd, m), getattr(h, m))
        for m, t in zip(("unit", "prod", "counit", "coprod", "antipode"), _transpose_dual(h)):
            c.equal(f"transpose.{m}", getattr(d, m), t)
        rep.add(h.name, c.failures)
    return rep


def suite_adjointcc(field=QQ, **_) -> RunReport:
    rep = RunReport("adjointcc")
    for h in hopf_algebras(8, field):
        if inverse(h.antipode) is None:
            rep.skip(h.name, "antipode not invertible")
            continue
        c = _Checks()
        coalg, cc = adjoint_cc_sides(h)
        c.flag("coalgebra_morphism_iff_cc_class", coalg == cc)
        adj = adjoint_action(h)
        c.report(check_module_algebra(h, adj.action, h), "adjoint.")
        rep.add(h.name, c.failures)
        if not cc:
            rep.notes.append(f"{h.name}: adjoint action outside the cc class")
    return rep


# ---------------------------------------------------------------- braces


def suite_braces(field=QQ, order: int = 6, budget: float = 60.0, naive_order: int = 4,
                 **_) -> RunReport:
    rep = RunReport("braces")
    start = time.perf_counter()
    for n in range(1, order + 1):
        if n > 4 and time.perf_counter() - start > budget:
            rep.skip(f"order {n}", f"enumeration budget of {budget}s exhausted")
            continue
        found = enumerate_skew_braces(n)
        if n <= naive_order:
            c = _Checks()
            naive = enumerate_skew_braces_naive(n)
            c.flag("enumerators_agree_on_count", len(naive) == len(found))
            c.flag("enumerators_agree_on_forms", [(s.dot, s.circ) for s in naive]
                   == [(s.dot, s.circ) for s in found])
            rep.add(f"enumerators order {n}", c.failures)
        rep.notes.append(f"order {n}: {len(found)} skew braces")
        for s in found:
            c = _Checks()
            c.flag("skew_brace_law", check_skew_brace(s))
            b = linearize(s, field)
            c.report(check_hopf_brace(b))
            c.report(reconstruct_mu2(b))
            c.report(check_module_algebra(b.h1, b.gamma, b.h2), "gamma.")
            c.report(check_module_algebra(b.h1, b.gamma_prime, b.h2), "gamma_prime.")
            c.flag("cocommutative", is_cocommutative_brace(b))
            rep.add(s.name, c.failures)
    return rep


def suite_catalog_braces(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("catalog-braces")
    for b in braces if braces is not None else _default_braces(order, field):
        c = _Checks()
        c.report(check_hopf_brace(b))
        c.report(reconstruct_mu2(b))
        c.report(check_module_algebra(b.h1, b.gamma, b.h2), "gamma.")
        c.report(check_module_algebra(b.h1, b.gamma_prime, b.h2), "gamma_prime.")
        rep.add(b.name, c.failures)
    return rep


def suite_semidirect(field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("semidirect")
    for n in range(1, order + 1):
        for s in enumerate_skew_braces(n):
            c = _Checks()
            smash = brace_smash(linearize(s, field))
            g = group_algebra(semidirect_product(s), field)
            c.equal("product_constants", smash.prod, g.prod)
            c.equal("unit", smash.unit, g.unit)
            rep.add(s.name, c.failures)
    return rep


def _raw_pairs(max_order: int, field) -> list:
    """Pairs of group algebras on the same labeled set (most are not braces)."""
    out = []
    for n in range(1, max_order + 1):
        algs = [group_algebra(t, field) for t in group_tables(n)]
        for i, j in itertools.product(range(len(algs)), repeat=2):
            out.append((f"tables{n}[{i},{j}]", algs[i], algs[j]))
    return out


def suite_equiv2(braces=None, field=QQ, order: int = 4, mutations: int = 60, seed: int = 2024,
                 **_) -> RunReport:
    rep = RunReport("equiv2")
    braces = braces if braces is not None else _default_braces(order, field)
    pairs = [(b.name, b.h1, b.h2) for b in braces] + _raw_pairs(4, field)
    verdicts = {True: 0, False: 0}

    def one(label, h1, h2):
        c = _Checks()
        is_brace, gp_law = brace_char_equiv(h1, h2)
        c.flag("brace_iff_gamma_prime_multiplicative", is_brace == gp_law)
        c.flag("brace_iff_gamma_multiplicative", is_brace == gamma_law(h1, h2))
        verdicts[is_brace] += 1
        rep.add(label, c.failures)

    for label, h1, h2 in pairs:
        one(label, h1, h2)
    rng = random.Random(seed)
    pool = [b for b in braces if b.space.dim > 1]
    for k in range(mutations):
        b = pool[k % len(pool)]
        prod, (i, j) = perturb(b.h2.prod, rng)
        h2 = HopfAlgebra(b.space, b.h2.unit, prod, b.h2.counit, b.h2.coprod, b.h2.antipode)
        one(f"mutant{k}:{b.name}:prod2[{i},{j}]", b.h1, h2)
    rep.notes.append(f"{verdicts[True]} brace pairs, {verdicts[False]} non-brace pairs")
    rep.metrics.update(pairs=len(pairs), mutations=mutations)
    return rep


def suite_gammacoalg(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("gammacoalg")
    for b in braces if braces is not None else _default_braces(order, field):
        c = _Checks()
        cc_g, co_g, cc_gp, co_gp = gamma_coalgebra_morphism_check(b, strict=False)
        c.flag("cc_gamma_implies_coalgebra_morphism", co_g or not cc_g)
        c.flag("cc_gamma_prime_implies_coalgebra_morphism", co_gp or not cc_gp)
        if co_gp and not cc_gp:
            rep.notes.append(f"{b.name}: Gamma' is a coalgebra morphism outside the cc class")
        if co_g and not cc_g:
            rep.notes.append(f"{b.name}: Gamma is a coalgebra morphism outside the cc class")
        rep.add(b.name, c.failures)
    return rep


# ---------------------------------------------------------------- brace modules


def _modules(braces, order, field):
    for b in braces if braces is not None else _default_braces(order, field):
        for m in standard_modules(b):
            yield b, m


def _equivariant_map(m: BraceModule):
    """A module endomorphism that is not a multiple of the identity, if any."""
    M = m.carrier
    ident = identity(M, m.act1.field)
    for f in module_hom_space([(m.act1, m.act1), (m.act2, m.act2)], M, M):
        if any(f.entry(i, j) for j in range(M.dim) for i in range(M.dim) if i != j) or \
                len({f.entry(i, i) for i in range(M.dim)}) > 1:
            return f
    return ident


def suite_mainth(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("mainth")
    for b in braces if braces is not None else _default_braces(order, field):
        smash = brace_smash(b)
        for m in standard_modules(b):
            c = _Checks()
            if not c.report(check_brace_module(m), "module."):
                rep.add(f"{b.name}/{m.name}", c.failures)
                continue
            s = functor_F(m, smash)
            c.report(check_module(s), "F.")
            back = functor_G(s, b)
            c.equal("G_after_F.act1", back.act1, m.act1)
            c.equal("G_after_F.act2", back.act2, m.act2)
            again = functor_F(back, smash)
            c.equal("F_after_G", again.action, s.action)
            f = _equivariant_map(m)
            ident = identity(m.carrier, field)
            c.flag("F_preserves_identity", is_module_morphism(ident, s, s))
            c.flag("F_preserves_morphism", is_module_morphism(f, s, s))
            c.flag("G_preserves_morphism",
                   is_module_morphism(f, Module(m.carrier, back.act1, b.h1),
                                      Module(m.carrier, back.act1, b.h1))
                   and is_module_morphism(f, Module(m.carrier, back.act2, b.h2),
                                          Module(m.carrier, back.act2, b.h2)))
            rep.add(f"{b.name}/{m.name}", c.failures)
        n = smash.space.dim
        if n <= 16:
            c = _Checks()
            reg = Module(smash.space, smash.prod, smash)
            g = functor_G(reg, b)
            c.report(check_brace_module(g), "G.")
            c.equal("F_after_G", functor_F(g, smash).action, reg.action)
            rep.add(f"{b.name}/smash-regular", c.failures)
        else:
            rep.skip(f"{b.name}/smash-regular", f"carrier dim {n} exceeds 16")
    return rep


def suite_ucat(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("ucat")
    for b, m in _modules(braces, order, field):
        c = _Checks()
        a = functor_V(m)
        c.report(check_ac_object(a), "V.")
        u = functor_U(a)
        c.equal("U_after_V.act1", u.act1, m.act1)
        c.equal("U_after_V.act2", u.act2, m.act2)
        c.equal("gamma_of_U", gamma_M(u), a.phi)
        a2 = functor_V(u)
        c.equal("V_after_U", a2.phi, a.phi)
        rep.add(f"{b.name}/{m.name}", c.failures)
    return rep


def suite_firstM(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("firstM")
    found = []
    for b, m in _modules(braces, order, field):
        c = _Checks()
        zhu, cond, cc = check_zhu(m, strict=False)
        c.flag("zhu_iff_cc_class", zhu == cc)
        c.flag("zhu_iff_split_condition", zhu == cond)
        if is_cocommutative_brace(b):
            c.flag("cocommutative_implies_zhu", zhu)
        if not zhu:
            found.append(f"{b.name}/{m.name}")
        rep.add(f"{b.name}/{m.name}", c.failures)
    if found:
        rep.notes.append("modules outside the Zhu category: " + ", ".join(found))
    else:
        rep.notes.append("SKIPPED-NOT-FOUND: every module satisfies the Zhu condition")
    return rep


def suite_modcc(braces=None, field=QQ, order: int = 4, max_dim: int = 64, **_) -> RunReport:
    rep = RunReport("modcc")
    for b in braces if braces is not None else _default_braces(order, field):
        mods = standard_modules(b)
        cc_mods, others = [], []
        for m in mods:
            (cc_mods if check_zhu(m, strict=False)[2] else others).append(m)
        unit = trivial_module(b)
        for m in cc_mods:
            c = _Checks()
            t = tensor_module(unit, m)
            c.equal("unit_left.act1", t.act1, m.act1)
            c.equal("unit_left.act2", t.act2, m.act2)
            rep.add(f"{b.name}/K*{m.name}", c.failures)
        for m, n in itertools.product(cc_mods, repeat=2):
            label = f"{b.name}/{m.name}*{n.name}"
            if m.carrier.dim * n.carrier.dim > max_dim:
                continue
            c = _Checks()
            t = tensor_module(m, n)
            c.report(check_brace_module(t), "tensor.")
            c.flag("tensor_in_cc_class", check_zhu(t, strict=False)[2])
            rep.add(label, c.failures)
        for m in others:
            c = _Checks()
            try:
                tensor_module(m, unit)
                c.flag("rejects_non_cc_module", False)
            except NotInCCClass:
                pass
            rep.add(f"{b.name}/{m.name}*K (non-cc)", c.failures)
    return rep


# ---------------------------------------------------------------- Doi-Hopf


def _doi_roundtrip(label, s: Module, rep: RunReport) -> None:
    smash = s.over
    total = smash.base.space.dim * smash.hopf.space.dim * s.carrier.dim
    if total > DOI_HOPF_MAX_TOTAL:
        rep.skip(label, f"total dimension {total} exceeds {DOI_HOPF_MAX_TOTAL}")
        return
    c = _Checks()
    d = functor_S(s)
    c.report(doi_hopf_check(d), "S.")
    r = functor_R(d)
    c.equal("R_after_S", r.action, s.action)
    d2 = functor_S(r)
    c.equal("S_after_R.action", d2.action, d.action)
    c.equal("S_after_R.coaction", d2.coaction, d.coaction)
    c.equal("S_after_R.base_coaction", d2.over.coaction, d.over.coaction)
    rep.add(label, c.failures)


def _natural_module(smash: SmashProduct) -> Module:
    # A as an A # H-module: a (x) h (x) b -> a (h . b)
    A = smash.base.space
    return Module(A, compose(smash.base.prod, tensor(A, smash.action)), smash)


def suite_smashcat(braces=None, field=QQ, order: int = 4, **_) -> RunReport:
    rep = RunReport("smashcat")
    for b, m in _modules(braces, order, field):
        s = functor_F(m)
        _doi_roundtrip(f"{b.name}/{m.name}", s, rep)
        total = b.space.dim ** 2 * m.carrier.dim
        if total <= DOI_HOPF_MAX_TOTAL:
            c = _Checks()
            d = functor_S(s)
            back = functor_G(functor_R(d), b)
            c.flag("brace_module_recovered", back.same_structure(m))
            rep.add(f"{b.name}/{m.name}/brace-module-recovered", c.failures)
    # smash products outside the brace setting
    kk = Algebra(K, identity(K, field), identity(K, field))
    for h in hopf_algebras(4, field):
        smash = smash_algebra(kk, tensor(h.counit, K), h)
        reg = Module(h.space, h.prod, smash)
        _doi_roundtrip(f"K#{h.name}/regular", reg, rep)
        c = _Checks()
        d = functor_S(reg)
        coev, _ = dual_pair(h.space, field)
        hd = d.over.hopf.space
        classical = compose(tensor(h.prod, hd), tensor(h.space, swap(hd, h.space, field)),
                            tensor(coev, h.space))
        c.equal("classical_duality", d.coaction, classical)
        rep.add(f"K#{h.name}/duality", c.failures)
    a, phi, h = non_cc_action(field)
    smash = smash_algebra(a, phi, h)
    _doi_roundtrip("H4#K[S3]*/natural", _natural_module(smash), rep)
    c2 = group_algebra(groups()["C2"], field, name="K[C2]")
    smash = smash_algebra(c2, tensor(c2.counit, c2.space), c2)
    _doi_roundtrip("K[C2]#K[C2]/regular", Module(smash.space, smash.prod, smash), rep)
    _doi_roundtrip("K[C2]#K[C2]/natural", _natural_module(smash), rep)
    return rep


# ---------------------------------------------------------------- mutations


def _first_failure(rep: LawReport):
    fails = rep.failures()
    return fails[0].law if fails else None


def _valid_hopf(h) -> bool:
    if not check_bialgebra(h).ok:
        return False
    try:
        return solve_antipode(h).antipode == h.antipode
    except NoAntipode:
        return False


def suite_mutation(field=QQ, count: int = 100, seed: int = 7, order: int = 4, **_) -> RunReport:
    """Single-entry mutations of valid structures; each must be caught by a
    law checker or else be independently confirmed valid."""
    rep = RunReport("mutation")
    rng = random.Random(seed)
    hopfs = [h for h in hopf_algebras(8, field) if h.space.dim > 1]
    brs = [b for b in catalog_braces(order, field) if b.space.dim > 1]
    mods = [m for b in brs[:4] + brs[-2:] for m in standard_modules(b) if m.carrier.dim > 1]
    detected = 0
    detected_by = {}
    for k in range(count):
        kind = k % 3
        c = _Checks()
        if kind == 0:
            h = hopfs[rng.randrange(len(hopfs))]
            part = rng.choice(("unit", "prod", "counit", "coprod", "antipode"))
            f, (i, j) = perturb(getattr(h, part), rng)
            mutant = HopfAlgebra(**{**{p: getattr(h, p) for p in
                                       ("space", "unit", "prod", "counit", "coprod", "antipode")},
                                    part: f})
            label = f"{h.name}.{part}[{i},{j}]"
            law = _first_failure(check_hopf(mutant))
            caught = law is not None
            valid = (not caught) and _valid_hopf(mutant)
        elif kind == 1:
            b = brs[rng.randrange(len(brs))]
            part = rng.choice(("prod", "antipode"))
            f, (i, j) = perturb(getattr(b.h2, part), rng)
            h2 = HopfAlgebra(b.space, b.h2.unit, f if part == "prod" else b.h2.prod,
                             b.h2.counit, b.h2.coprod, f if part == "antipode" else b.h2.antipode)
            label = f"{b.name}.h2.{part}[{i},{j}]"
            try:
                law = _first_failure(check_hopf_brace(HopfBrace(b.h1, h2)))
            except HBLError as exc:
                law = type(exc).__name__
            caught = law is not None
            valid = (not caught) and _valid_hopf(h2) and brace_char_equiv(b.h1, h2)[1]
        else:
            m = mods[rng.randrange(len(mods))]
            part = rng.choice(("act1", "act2"))
            f, (i, j) = perturb(getattr(m, part), rng)
            mutant = BraceModule(m.carrier, f if part == "act1" else m.act1,
                                 f if part == "act2" else m.act2, m.over)
            label = f"{m.over.name}/{m.name}.{part}[{i},{j}]"
            law = _first_failure(check_brace_module(mutant))
            caught = law is not None
            # independent route: the brace module is valid iff F of it is a smash module
            valid = (not caught) and check_module(functor_F(mutant)).ok
        detected += caught
        detected_by[f"mutant{k}:{label}"] = law
        c.flag("detected_or_valid", caught or valid)
        rep.add(f"mutant{k}:{label}", c.failures)
    rep.notes.append(f"{detected}/{count} mutations detected")
    rep.metrics["detected"] = detected
    rep.metrics["mutations"] = count
    rep.metrics["detected_by"] = detected_by
    return rep


SUITES = {
    "hopf": suite_hopf,
    "dual": suite_dual,
    "adjointcc": suite_adjointcc,
    "braces": suite_braces,
    "catalog-braces": suite_catalog_braces,
    "semidirect": suite_semidirect,
    "equiv2": suite_equiv2,
    "gammacoalg": suite_gammacoalg,
    "mainth": suite_mainth,
    "ucat": suite_ucat,
    "firstM": suite_firstM,
    "modcc": suite_modcc,
    "smashcat": suite_smashcat,
    "mutation": suite_mutation,
}

# suites that take a list of braces
BRACE_SUITES = {"catalog-braces", "equiv2", "gammacoalg", "mainth", "ucat", "firstM",
                "modcc", "smashcat"}


def run_suite(name: str, **kwargs) -> RunReport:
    fn = SUITES[name]
    if name not in BRACE_SUITES:
        kwargs.pop("braces", None)
    start = time.perf_counter()
    rep = fn(**kwargs)
    rep.wall_time = time.perf_counter() - start
    return rep
