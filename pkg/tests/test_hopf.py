from fractions import Fraction

import pytest

from hbl.catalog import cyclic, groups, hopf_algebras, monoid_bialgebra, non_cc_action, sweedler
from hbl.errors import NoAntipode, NotInCCClass, PreconditionFailed
from hbl.hopf import (ComoduleAlgebra, DoiHopfModule, HopfAlgebra, action_from_comodule_algebra,
                      adjoint_action, adjoint_cc_sides, cc_class_sides, check_bialgebra,
                      check_comodule_algebra, check_hopf, check_module_algebra,
                      check_module_coalgebra, comodule_algebra_from_action, doi_hopf_check,
                      dual_hopf, functor_R, functor_S, opposite_hopf, smash_algebra,
                      smash_hopf, solve_antipode, trivial_action)
from hbl.linalg import GF, K, QQ, compose, identity, inverse, permutation, tensor
from hbl.skewbrace import group_algebra
from hbl.structures import Module, check_algebra, check_module, tensor_algebra
from oracles import dense


def _function_algebra_constants(op):
    """Dense constants of K[G]* = functions on G in the delta basis."""
    n = len(op)
    ident = next(e for e in range(n) if all(op[e][x] == x for x in range(n)))
    inv = [next(y for y in range(n) if op[x][y] == ident) for x in range(n)]
    prod = [[Fraction(int(j // n == j % n == i)) for j in range(n * n)] for i in range(n)]
    unit = [[Fraction(1)] for _ in range(n)]
    counit = [[Fraction(int(j == ident)) for j in range(n)]]
    coprod = [[Fraction(int(op[i // n][i % n] == s)) for s in range(n)] for i in range(n * n)]
    antipode = [[Fraction(int(inv[j] == i)) for j in range(n)] for i in range(n)]
    return unit, prod, counit, coprod, antipode


@pytest.mark.parametrize("name", list(groups()))
def test_group_algebra_hopf_and_solver(name):
    g = groups()[name]
    h = group_algebra(g)
    assert check_hopf(h).ok
    assert check_bialgebra(h).ok
    solved = solve_antipode(h.bialgebra)
    assert solved.antipode == permutation(list(g.inv), h.space, h.space)


@pytest.mark.parametrize("name", list(groups()))
def test_dual_of_group_algebra_is_function_algebra(name):
    g = groups()[name]
    d = dual_hopf(group_algebra(g))
    expected = _function_algebra_constants(g.op)
    got = [dense(d.unit), dense(d.prod), dense(d.counit), dense(d.coprod), dense(d.antipode)]
    assert got == list(expected)
    assert check_hopf(d).ok


def test_dual_is_transpose_and_involutive():
    for h in hopf_algebras(8):
        d = dual_hopf(h)
        assert d.prod == h.coprod.transpose() and d.coprod == h.prod.transpose()
        assert d.unit == h.counit.transpose() and d.counit == h.unit.transpose()
        assert d.antipode == h.antipode.transpose()
        dd = dual_hopf(d)
        assert (dd.unit, dd.prod, dd.counit, dd.coprod, dd.antipode) == \
            (h.unit, h.prod, h.counit, h.coprod, h.antipode)


def test_sweedler():
    h = sweedler()
    assert check_hopf(h).ok
    lam = h.antipode
    # lambda(x) = -gx, lambda(gx) = x
    assert dense(lam)[3][2] == -1 and dense(lam)[2][3] == 1
    lam2 = compose(lam, lam)
    assert lam2 != identity(4)
    assert compose(lam2, lam2) == identity(4)
    assert "involutive" not in check_hopf(h).laws()
    assert solve_antipode(h.bialgebra).antipode == lam
    assert check_hopf(dual_hopf(h)).ok


def test_monoid_bialgebra_has_no_antipode():
    b = monoid_bialgebra()
    assert check_bialgebra(b).ok
    with pytest.raises(NoAntipode):
        solve_antipode(b)


def test_dimension_one():
    h = group_algebra(cyclic(1))
    assert check_hopf(h).ok and check_hopf(dual_hopf(h)).ok
    assert h.space.dim == 1


def test_mutated_antipode_fails():
    h = group_algebra(cyclic(3))
    bad = HopfAlgebra(h.space, h.unit, h.prod, h.counit, h.coprod, identity(3))
    rep = check_hopf(bad)
    assert not rep.ok and "antipode_left" in {r.law for r in rep.failures()}


def test_opposite_hopf():
    h = sweedler()
    op = opposite_hopf(h)
    assert check_hopf(op).ok
    assert op.antipode == inverse(h.antipode)


@pytest.mark.parametrize("field", [GF(3), GF(5), GF(7)])
def test_prime_fields(field):
    for name in ("C3", "S3", "Q8"):
        h = group_algebra(groups()[name], field)
        assert check_hopf(h).ok and check_hopf(dual_hopf(h)).ok
    h4 = sweedler(field)
    assert check_hopf(h4).ok
    assert solve_antipode(h4.bialgebra).antipode == h4.antipode


def test_cc_class_of_cocommutative_is_automatic():
    for name in ("C2", "S3", "D4"):
        h = group_algebra(groups()[name])
        m = adjoint_action(h)
        assert cc_class_sides(m) == (True, True)
        assert check_module_algebra(h, m.action, h).ok
        assert adjoint_cc_sides(h) == (True, True)


def test_adjoint_of_sweedler_is_outside_cc_class():
    for h in (sweedler(), dual_hopf(sweedler())):
        coalg, cc = adjoint_cc_sides(h)
        assert coalg == cc is False


def test_trivial_action_is_module_algebra():
    h = group_algebra(groups()["S3"])
    a = sweedler()
    phi = trivial_action(h, a.space)
    assert check_module_algebra(a, phi, h).ok
    assert check_module_coalgebra(a, phi, h).ok
    s = smash_algebra(a, phi, h)
    assert s.prod == tensor_algebra(a.algebra, h.algebra).prod


def test_smash_c2_c2_trivial_is_klein_four():
    c2 = group_algebra(cyclic(2))
    s = smash_algebra(c2, trivial_action(c2, c2.space), c2)
    assert s.prod == group_algebra(groups()["C2xC2"]).prod
    assert check_algebra(s).ok


def test_smash_algebra_rejects_bad_action():
    c2 = group_algebra(cyclic(2))
    with pytest.raises(PreconditionFailed):
        smash_algebra(c2, tensor(c2.counit, c2.space).scaled(2), c2)


def test_non_cc_action():
    a, phi, h = non_cc_action()
    assert check_module_algebra(a, phi, h).ok
    assert check_module_coalgebra(a, phi, h).ok
    assert cc_class_sides(Module(a.space, phi, h)) == (False, False)
    assert check_algebra(smash_algebra(a, phi, h)).ok
    with pytest.raises(NotInCCClass):
        smash_hopf(a, phi, h)


def test_smash_hopf_in_cc_class():
    c2 = group_algebra(cyclic(2))
    h = smash_hopf(c2, trivial_action(c2, c2.space), c2)
    assert check_hopf(h).ok


def test_comodule_algebra_round_trip():
    a, phi, h = non_cc_action()
    ca = comodule_algebra_from_action(a, phi, h)
    assert isinstance(ca, ComoduleAlgebra)
    assert check_comodule_algebra(ca).ok
    assert action_from_comodule_algebra(ca, h) == phi


def test_doi_hopf_round_trip_on_regular_smash_module():
    c3 = group_algebra(cyclic(3))
    s = smash_algebra(c3, adjoint_action(c3).action, c3)
    m = Module(s.space, s.prod, s)
    d = functor_S(m)
    assert isinstance(d, DoiHopfModule)
    assert doi_hopf_check(d).ok
    back = functor_R(d)
    assert back.action == m.action
    assert check_module(back).ok


def test_doi_hopf_detects_broken_coaction():
    c2 = group_algebra(cyclic(2))
    s = smash_algebra(c2, trivial_action(c2, c2.space), c2)
    d = functor_S(Module(s.space, s.prod, s))
    broken = DoiHopfModule(d.carrier, d.action, d.coaction.scaled(2), d.over)
    assert not doi_hopf_check(broken).ok


def test_functor_S_needs_smash():
    c2 = group_algebra(cyclic(2))
    with pytest.raises(PreconditionFailed):
        functor_S(Module(K, tensor(c2.counit, K), c2.algebra))


def test_field_default():
    assert sweedler().field is QQ
