from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dualspace import (
    GF, OMEGA, QQ, FinSuppVec, ProdVec, Repeat, Zeros, delta, embed, pair, prod_get,
    vec_add, vec_eq, vec_scale, zero_finsupp, zero_prodvec,
)
from dualspace.errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, InvariantViolation
from dualspace.limits import project

from conftest import dims, fields, finsupp, prodvec, raw_scalars
from oracles import coord


def test_delta_sum_characteristic_two():
    F = GF(2)
    assert vec_add(delta(F, 0), delta(F, 0)).is_zero()
    assert vec_add(delta(F, 0), delta(F, 1)).support == (0, 1)


def test_prodvec_add_example():
    u = ProdVec(QQ, OMEGA, [1], Repeat((2,)))
    v = ProdVec(QQ, OMEGA, [], Repeat((1,)))
    w = vec_add(u, v)
    # coordinatewise oracle over the first 16 coordinates
    assert [w.get_raw(i) for i in range(16)] == [
        coord([1], [2], i) + coord([], [1], i) for i in range(16)]
    assert w.raw_prefix == (2,)
    assert w.raw_block == (3,)


def test_scale_examples():
    F = GF(7)
    u = FinSuppVec(F, OMEGA, {1: 4, 5: 2})
    assert vec_scale(F(0), u).is_zero()
    assert vec_scale(F(1), u) == u
    assert vec_scale(F(3), delta(F, 2)) == FinSuppVec(F, OMEGA, {2: 3})
    y = ProdVec(F, OMEGA, [1], Repeat((2, 3)))
    assert vec_scale(F(0), y).is_zero()
    with pytest.raises(FieldMismatch):
        vec_scale(GF(5)(1), u)


def test_prod_get_examples():
    assert prod_get(ProdVec(QQ, OMEGA, [5, 6]), 1) == QQ(6)
    # unrolling the period by hand: 1, 2, 1, 2, ...
    assert prod_get(ProdVec(QQ, OMEGA, [], Repeat((1, 2))), 3) == QQ(2)
    assert prod_get(ProdVec(QQ, OMEGA, [5, 6]), 100) == QQ(0)
    with pytest.raises(IndexOutOfRange):
        prod_get(ProdVec(QQ, 3, [1]), 3)


def test_pair_examples():
    F = GF(7)
    y = ProdVec(F, OMEGA, [4, 0, 3, 1])
    for i in range(6):
        assert pair(delta(F, i), y) == prod_get(y, i)
    assert pair(zero_finsupp(F), y) == F(0)
    # 2*1 + 3*1 = 5
    assert pair(FinSuppVec(F, OMEGA, {0: 2, 2: 3}), ProdVec(F, OMEGA, [1, 1, 1])) == F(5)


def test_pair_errors():
    with pytest.raises(FieldMismatch):
        pair(delta(GF(2), 0), ProdVec(GF(3), OMEGA, [1]))
    with pytest.raises(DimensionMismatch):
        pair(delta(GF(2), 0, 3), ProdVec(GF(2), OMEGA, [1]))


def test_vec_eq_examples():
    assert vec_eq(ProdVec(QQ, OMEGA, [0], Zeros()), ProdVec(QQ, OMEGA, [], Zeros()))
    assert vec_eq(ProdVec(QQ, OMEGA, [], Repeat((1, 1))), ProdVec(QQ, OMEGA, [1], Repeat((1,))))
    assert not vec_eq(delta(QQ, 0), delta(QQ, 1))
    with pytest.raises(DimensionMismatch):
        vec_eq(delta(QQ, 0, 2), delta(QQ, 0, 3))


def test_canonical_prodvec():
    y = ProdVec(QQ, OMEGA, [5, 1, 2, 1, 2], Repeat((1, 2, 1, 2)))
    assert y.raw_prefix == (5,)
    assert y.raw_block == (1, 2)
    z = ProdVec(QQ, OMEGA, [3, 0, 0], Repeat((0, 0)))
    assert z.raw_prefix == (3,)
    assert z.tail == Zeros()


def test_invariants_enforced():
    with pytest.raises(IndexOutOfRange):
        FinSuppVec(QQ, 3, {3: 1})
    with pytest.raises(InvariantViolation):
        FinSuppVec(QQ, 3, [(1, 1), (1, 2)])
    with pytest.raises(InvariantViolation):
        ProdVec(QQ, 4, [1], Repeat((1,)))
    with pytest.raises(DimensionMismatch):
        ProdVec(QQ, 2, [1, 2, 3])
    with pytest.raises(InvariantViolation):
        Repeat(())
    assert FinSuppVec(QQ, OMEGA, {4: 0, 2: Fraction(1, 2)}).support == (2,)


def test_kinds_do_not_mix():
    with pytest.raises(TypeError):
        vec_add(delta(QQ, 0), embed(delta(QQ, 0)))


@st.composite
def same_space(draw, n=2):
    spec = draw(fields)
    dim = draw(dims())
    return spec, dim, [draw(prodvec(spec, dim)) for _ in range(n)], [draw(finsupp(spec, dim)) for _ in range(n)]


@given(same_space())
def test_pair_bilinear(s):
    spec, dim, (y, y2), (x, x2) = s
    c = spec(3)
    assert pair(x + x2, y) == pair(x, y) + pair(x2, y)
    assert pair(vec_scale(c, x), y) == c * pair(x, y)
    assert pair(x, y + y2) == pair(x, y) + pair(x, y2)


@given(same_space())
def test_add_matches_coordinates(s):
    spec, dim, (u, v), _ = s
    w = u + v
    n = 40 if dim is OMEGA else dim
    for i in range(n):
        assert w.get_raw(i) == spec.add(coord(u.raw_prefix, u.raw_block, i), coord(v.raw_prefix, v.raw_block, i))


@given(same_space())
def test_vec_eq_agrees_with_structure_and_long_comparison(s):
    spec, dim, (u, v), _ = s
    n = 100 if dim is OMEGA else dim
    long_eq = all(u.get_raw(i) == v.get_raw(i) for i in range(n))
    assert vec_eq(u, v) == long_eq == ((u.raw_prefix, u.raw_block) == (v.raw_prefix, v.raw_block))
    assert vec_eq(u, u + v - v)


@given(st.data())
def test_noncanonical_inputs_describe_the_same_sequence(data):
    spec = data.draw(fields)
    prefix = data.draw(st.lists(raw_scalars(spec), max_size=6))
    block = data.draw(st.lists(raw_scalars(spec), min_size=1, max_size=4))
    reps = data.draw(st.integers(1, 3))
    y = ProdVec(spec, OMEGA, prefix, Repeat(tuple(block * reps)))
    for i in range(60):
        assert y.get_raw(i) == spec.coerce(coord(prefix, block, i))


@given(same_space())
def test_hausdorff_at_representation_level(s):
    spec, dim, (y, _), _ = s
    if dim is OMEGA:
        bound = len(y.raw_prefix) + y.period
        vanish = all(not any(s.value for s in project(y, n)) for n in range(bound + 1))
        assert vec_eq(y, zero_prodvec(spec)) == vanish


@given(same_space())
def test_embedding(s):
    spec, dim, _, (x, x2) = s
    e = embed(x2)
    dot = sum((spec(a) * spec(x2.get_raw(i)) for i, a in x.raw_items()), spec(0))
    assert pair(x, e) == dot
    assert all(e.get_raw(i) == x2.get_raw(i) for i in range(40 if dim is OMEGA else dim))
