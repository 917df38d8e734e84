import random

import pytest

from hbl.catalog import cyclic, groups, sweedler
from hbl.errors import ShapeMismatch
from hbl.linalg import K, QQ, Space, from_columns, identity, matrix, random_morphism, tensor
from hbl.skewbrace import group_algebra
from hbl.structures import (Algebra, Coalgebra, Comodule, Module, check_algebra,
                            check_coalgebra, check_comodule, check_module, convolution,
                            convolution_unit, is_module_morphism, module_hom_space,
                            tensor_algebra, tensor_coalgebra)
from oracles import dense, group_algebra_constants


@pytest.fixture(scope="module")
def kc2():
    return group_algebra(cyclic(2))


def test_group_algebra_constants_match_table():
    for name, g in groups().items():
        h = group_algebra(g)
        unit, prod, counit, coprod, antipode = group_algebra_constants(g.op)
        assert dense(h.unit) == unit, name
        assert dense(h.prod) == prod, name
        assert dense(h.counit) == counit, name
        assert dense(h.coprod) == coprod, name
        assert dense(h.antipode) == antipode, name


def test_check_algebra_examples(kc2):
    assert check_algebra(kc2.algebra).ok
    # g*g = g instead of e: this is the algebra of the monoid {1, 0}, still lawful
    idem = Algebra(kc2.space, kc2.unit, kc2.prod.with_entry(0, 3, 0).with_entry(1, 3, 1))
    assert check_algebra(idem).ok
    # any change to g*g gives K[x]/(x^2 - a - bx), so break e*g instead
    broken = Algebra(kc2.space, kc2.unit, kc2.prod.with_entry(0, 1, 1))
    rep = check_algebra(broken)
    assert not rep.ok
    assert "left_unit" in {r.law for r in rep.failures()}
    one = Algebra(K, identity(K), identity(K))
    assert check_algebra(one).ok


def test_check_algebra_shape_error(kc2):
    with pytest.raises(ShapeMismatch):
        check_algebra(Algebra(kc2.space, kc2.unit, identity(2)))


def test_check_coalgebra_examples():
    S = Space(2)
    grouplike = from_columns([{0: 1}, {3: 1}], S, tensor(S, S).dom)
    ok = Coalgebra(S, matrix([[1, 1]], S, K), grouplike)
    assert check_coalgebra(ok).ok
    bad = Coalgebra(S, matrix([[1, 0]], S, K), grouplike)
    rep = check_coalgebra(bad)
    assert not rep.ok and any("counit" in r.law for r in rep.failures())
    assert check_coalgebra(Coalgebra(K, identity(K), identity(K))).ok


def test_convolution_examples(kc2):
    ident = identity(kc2.space)
    e = convolution_unit(kc2.coalgebra, kc2.algebra)
    assert convolution(ident, e, kc2.coalgebra, kc2.algebra) == ident
    assert convolution(ident, kc2.antipode, kc2.coalgebra, kc2.algebra) == e
    rng = random.Random(3)
    f, g, h = (random_morphism(2, 2, rng) for _ in range(3))
    conv = lambda x, y: convolution(x, y, kc2.coalgebra, kc2.algebra)  # noqa: E731
    assert conv(conv(f, g), h) == conv(f, conv(g, h))


def test_modules(kc2):
    assert check_module(Module(kc2.space, kc2.prod, kc2.algebra)).ok
    triv = Module(K, tensor(kc2.counit, K), kc2.algebra)
    assert check_module(triv).ok
    bad = Module(kc2.space, kc2.prod.with_entry(0, 3, 2), kc2.algebra)
    assert not check_module(bad).ok


def test_comodules(kc2):
    reg = Comodule(kc2.space, kc2.coprod, kc2.coalgebra)
    assert check_comodule(reg).ok
    assert not check_comodule(Comodule(kc2.space, kc2.coprod.scaled(2), kc2.coalgebra)).ok


def test_module_morphisms(kc2):
    reg = Module(kc2.space, kc2.prod, kc2.algebra)
    assert is_module_morphism(identity(2), reg, reg)
    assert is_module_morphism(matrix([[0, 0], [0, 0]]), reg, reg)
    # e -> e, g -> e is not equivariant
    assert not is_module_morphism(matrix([[1, 1], [0, 0]]), reg, reg)
    # right multiplication by g is
    assert is_module_morphism(matrix([[0, 1], [1, 0]]), reg, reg)


def test_module_hom_space_regular(kc2):
    reg = Module(kc2.space, kc2.prod, kc2.algebra)
    basis = module_hom_space([(reg.action, reg.action)], reg.carrier, reg.carrier)
    assert len(basis) == 2  # End of the regular module of a 2-dim commutative algebra
    assert all(is_module_morphism(f, reg, reg) for f in basis)


def test_tensor_algebra_and_coalgebra(kc2):
    t = tensor_algebra(kc2.algebra, kc2.algebra)
    assert t.space.dim == 4 and check_algebra(t).ok
    c4 = group_algebra(groups()["C2xC2"])
    assert t.prod == c4.prod
    tc = tensor_coalgebra(kc2.coalgebra, kc2.coalgebra)
    assert check_coalgebra(tc).ok and tc.coprod == c4.coprod
    unit_alg = Algebra(K, identity(K), identity(K))
    same = tensor_algebra(kc2.algebra, unit_alg)
    assert same.prod == kc2.prod and same.unit == kc2.unit


def test_sweedler_is_not_commutative():
    from hbl.structures import is_cocommutative, is_commutative

    h = sweedler(QQ)
    assert check_algebra(h.algebra).ok and check_coalgebra(h.coalgebra).ok
    assert not is_commutative(h.algebra) and not is_cocommutative(h.coalgebra)
