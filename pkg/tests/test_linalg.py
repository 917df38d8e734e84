import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbl.errors import DimensionMismatch
from hbl.linalg import (GF, K, QQ, Space, compose, dual_pair, field_from_name, identity,
                        inverse, matrix, nullspace, permutation, random_morphism, rank, solve,
                        swap, tensor, tensor_spaces, zero)
from hbl.skewbrace import group_algebra
from hbl.catalog import cyclic
from oracles import dense, dense_matrices, eye, kron, matmul, perm_matrix


@given(dense_matrices(3, 4), dense_matrices(4, 2))
@settings(max_examples=40, deadline=None)
def test_compose_matches_dense_product(a, b):
    f, g = matrix(b), matrix(a)
    assert dense(compose(g, f)) == matmul(a, b)


@given(dense_matrices(2, 3), dense_matrices(3, 2))
@settings(max_examples=40, deadline=None)
def test_tensor_matches_left_major_kronecker(a, b):
    assert dense(tensor(matrix(a), matrix(b))) == kron(a, b)


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(identity(2), identity(3))


def test_compose_examples():
    assert compose(identity(2), identity(2)) == identity(2)
    h = group_algebra(cyclic(2))
    assert dense(compose(h.counit, h.unit)) == [[1]]
    assert compose(swap(2, 3), swap(3, 2)) == identity(6)


def test_tensor_examples():
    rng = random.Random(0)
    f = random_morphism(3, 2, rng)
    assert tensor(identity(K), f) == f
    assert tensor(f, identity(K)) == f
    assert tensor(identity(2), identity(3)) == identity(6)
    h = group_algebra(cyclic(2))
    # unit (x) counit: K (x) H -> H (x) K, the outer product of the two
    u, e = dense(h.unit), dense(h.counit)
    outer = [[u[i][0] * e[0][j] for j in range(2)] for i in range(2)]
    assert dense(tensor(h.unit, h.counit)) == outer


def test_tensor_spaces_dims_and_unit():
    assert tensor_spaces(2, 3, 4).dim == 24
    assert tensor_spaces(K, Space(5)) == Space(5)
    assert K.dim == 1


@pytest.mark.parametrize("seed", range(10))
def test_bifunctoriality(seed):
    rng = random.Random(seed)
    a, b, c, d, e, f = (rng.randint(1, 3) for _ in range(6))
    f1, f2 = random_morphism(a, b, rng), random_morphism(b, c, rng)
    g1, g2 = random_morphism(d, e, rng), random_morphism(e, f, rng)
    assert tensor(compose(f2, f1), compose(g2, g1)) == compose(tensor(f2, g2), tensor(f1, g1))


def test_swap_is_the_flip_permutation():
    # index i*3+j of 2 (x) 3 goes to j*2+i of 3 (x) 2
    images = [j * 2 + i for i in range(2) for j in range(3)]
    assert dense(swap(2, 3)) == perm_matrix(images)


def test_swap_examples():
    assert swap(K, Space(4)) == identity(4)
    assert compose(swap(2, 2), swap(2, 2)) == identity(4)


@pytest.mark.parametrize("seed", range(20))
def test_swap_naturality(seed):
    rng = random.Random(100 + seed)
    a, b, c, d = (rng.randint(1, 3) for _ in range(4))
    f, g = random_morphism(a, c, rng), random_morphism(b, d, rng)
    assert compose(swap(c, d), tensor(f, g)) == compose(tensor(g, f), swap(a, b))
    assert compose(swap(b, a), swap(a, b)) == identity(a * b)


@pytest.mark.parametrize("n", range(1, 9))
def test_triangle_identities(n):
    coev, ev = dual_pair(n)
    P = Space(n)
    Pd = P.dual()
    # (ev (x) P*) o (P* (x) coev)... written on the P side and the P* side
    assert compose(tensor(P, ev), tensor(coev, P)) == identity(P)
    assert compose(tensor(ev, Pd), tensor(Pd, coev)) == identity(Pd)


def test_dual_pair_small():
    coev, ev = dual_pair(1)
    assert dense(coev) == [[1]] and dense(ev) == [[1]]
    coev, ev = dual_pair(2)
    assert dense(coev) == [[1], [0], [0], [1]]
    assert dense(ev) == [[1, 0, 0, 1]]


def test_exact_rationals():
    third = matrix([[Fraction(1, 3)]])
    total = compose(third, matrix([[3]]))
    assert total == identity(1)
    assert QQ.format(QQ.parse("-3/2")) == "-3/2"


@given(dense_matrices(3, 3, bound=4))
@settings(max_examples=40, deadline=None)
def test_inverse_and_solve(a):
    f = matrix(a)
    inv = inverse(f)
    if inv is None:
        assert rank(f) < 3
        assert nullspace(f).shape[1] == 3 - rank(f)
        assert compose(f, nullspace(f)).is_zero()
    else:
        assert compose(f, inv) == identity(3) and compose(inv, f) == identity(3)
        b = matrix([[1], [2], [3]])
        x = solve(f, b)
        assert compose(f, x) == b


def test_prime_field_arithmetic():
    f5 = field_from_name("gf:5")
    assert f5 == GF(5)
    m = matrix([[2, 0], [0, 3]], field=f5)
    inv = inverse(m)
    assert dense(inv) == [[3, 0], [0, 2]]
    assert f5.parse("7") == 2
    assert f5.format(f5(-1)) == "4"


def test_field_names():
    assert field_from_name("q") is QQ
    for bad in ("gf:4", "gf:x", "r"):
        with pytest.raises(ValueError):
            field_from_name(bad)


@given(st.integers(0, 5), st.integers(0, 5))
def test_zero_and_identity_shapes(a, b):
    assert zero(a, b).shape == (b, a)
    assert dense(identity(a)) == eye(a)


def test_permutation_set_map():
    f = permutation([0, 0, 1], 3, 2)
    assert dense(f) == [[1, 1, 0], [0, 0, 1]]


def test_first_difference_and_with_entry():
    f = identity(3)
    g = f.with_entry(1, 2, 5)
    assert f.first_difference(g) == (1, 2)
    assert f.first_difference(f) is None
    assert g.transpose().entry(2, 1) == 5
