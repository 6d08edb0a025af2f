import pytest
from hypothesis import given, strategies as st

from dualspace import GF, OMEGA, QQ, ProdVec, Repeat, act_left
from dualspace.errors import BadTruncation, DimensionMismatch, IncompatibleThread, IndexOutOfRange
from dualspace.field import raw_rank
from dualspace.limits import (
    QuotientTower, Thread, check_compat, from_thread, in_subspace, project, restrict, to_thread,
)

from conftest import fields, matrices, prodvec


def test_project_examples():
    assert project(ProdVec(QQ, OMEGA, [4, 5, 6]), 2) == [QQ(4), QQ(5)]
    assert project(ProdVec(QQ, OMEGA, [], Repeat((1, 2))), 3) == [QQ(1), QQ(2), QQ(1)]
    assert project(ProdVec(QQ, OMEGA, [4]), 0) == []
    with pytest.raises(IndexOutOfRange):
        project(ProdVec(QQ, 2, [1]), 3)


def test_restrict_examples():
    assert restrict([1, 2, 3], 2) == [1, 2]
    assert restrict([1, 2, 3], 3) == [1, 2, 3]
    assert restrict([1], 0) == []
    with pytest.raises(BadTruncation):
        restrict([1, 2], 3)
    with pytest.raises(BadTruncation):
        restrict([1, 2], -1)


def test_thread_examples():
    F = GF(5)
    t = to_thread(ProdVec(F, OMEGA, [1, 2, 3]), 4)
    assert t.stages == ((1,), (1, 2), (1, 2, 3), (1, 2, 3, 0))
    assert t.stage(2) == [F(1), F(2)]
    assert t.dump() == "1\n1 2\n1 2 3\n1 2 3 0\n"
    assert from_thread(t) == ProdVec(F, OMEGA, [1, 2, 3])
    with pytest.raises(IncompatibleThread):
        Thread(F, [[1], [2, 2]])
    with pytest.raises(DimensionMismatch):
        to_thread(ProdVec(F, 3, [1]), 2)


def test_check_compat():
    assert check_compat([[1], [1, 2], [1, 2, 3]])
    assert not check_compat([[1], [1, 2], [1, 3, 3]])
    assert check_compat([])
    with pytest.raises(DimensionMismatch):
        check_compat([[1], [1]])


def test_tower_levels():
    T = QuotientTower(GF(7))
    y = ProdVec(GF(7), OMEGA, [0, 0, 3])
    assert T.contains(y, 2) and not T.contains(y, 3)
    assert in_subspace(ProdVec(GF(7), OMEGA), 100)
    assert T.transition([1, 2, 3], 3, 1) == [1]
    with pytest.raises(DimensionMismatch):
        T.transition([1, 2], 3, 1)


@pytest.mark.parametrize("spec", [GF(2), GF(7)])
@pytest.mark.parametrize("n", range(1, 17))
def test_quotient_dimension_is_n(spec, n):
    # independent count: F^n / V_n is spanned by the images of δ_0..δ_{n-1},
    # whose projections form the n x n identity
    images = [[spec.one if i == j else spec.zero for i in range(n)] for j in range(n)]
    assert raw_rank(spec, images, n) == n == QuotientTower(spec).quotient_dim(n)


@st.composite
def omega_vec(draw):
    spec = draw(fields)
    return draw(prodvec(spec, OMEGA))


@given(omega_vec(), st.integers(0, 64))
def test_roundtrip(y, depth):
    t = to_thread(y, depth)
    assert check_compat(t.stages)
    back = from_thread(t)
    for n in range(depth + 1):
        assert project(back, n) == project(y, n)


@given(omega_vec(), st.data())
def test_naturality(y, data):
    n = data.draw(st.integers(0, 40))
    m = data.draw(st.integers(0, n))
    assert restrict(project(y, n), m) == project(y, m)


@given(omega_vec(), st.data())
def test_hausdorff(y, data):
    # y lies in every V_n only when it is zero
    bound = len(y.raw_prefix) + y.period
    assert y.is_zero() == in_subspace(y, bound)


@given(st.data())
def test_thread_of_image_is_image_of_thread_for_diagonal(data):
    # a diagonal matrix acts stage by stage
    spec = data.draw(fields)
    y = data.draw(prodvec(spec, OMEGA))
    D = data.draw(matrices(spec, OMEGA, OMEGA).filter(lambda M: M.rule() is not None and M.rule()[0] == 0))
    _, block = D.rule()
    t = to_thread(act_left(D, y), 12)
    for n in range(1, 13):
        want = tuple(spec.mul(block[j % len(block)], y.get_raw(j)) for j in range(n))
        assert t.stages[n - 1] == want
