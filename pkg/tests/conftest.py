from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from dualspace import GF, OMEGA, QQ, FinSuppVec, ProdVec, Repeat, RowFiniteMatrix, Zeros
from dualspace.rowfinite import DiagBlock, Shift, WeightedShift

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIELDS = [GF(2), GF(7), GF(97), QQ]

fields = st.sampled_from(FIELDS)


def raw_scalars(spec):
    if spec.p is not None:
        return st.integers(0, spec.p - 1)
    return st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def dims(max_finite=10, omega=True):
    base = st.integers(0, max_finite)
    return st.one_of(base, st.just(OMEGA)) if omega else base


def _span(dim):
    return 30 if dim is OMEGA else dim


@st.composite
def finsupp(draw, spec, dim):
    n = _span(dim)
    if n == 0:
        return FinSuppVec(spec, dim)
    entries = draw(st.dictionaries(st.integers(0, n - 1), raw_scalars(spec), max_size=6))
    return FinSuppVec(spec, dim, entries)


@st.composite
def prodvec(draw, spec, dim):
    if dim is not OMEGA:
        return ProdVec(spec, dim, draw(st.lists(raw_scalars(spec), max_size=dim)))
    prefix = draw(st.lists(raw_scalars(spec), max_size=8))
    block = draw(st.lists(raw_scalars(spec), max_size=4))
    return ProdVec(spec, dim, prefix, Repeat(tuple(block)) if block else Zeros())


@st.composite
def matrices(draw, spec, rows, cols):
    """Explicit rows, or a rule body when one fits the dimensions."""
    rule_fits = not (rows is OMEGA and cols is not OMEGA) and (
        cols is OMEGA or cols >= rows)
    if rule_fits and draw(st.booleans()):
        kmax = 4 if cols is OMEGA else cols - rows
        k = draw(st.integers(0, kmax))
        block = tuple(draw(st.lists(raw_scalars(spec), min_size=1, max_size=4)))
        body = draw(st.sampled_from([Shift(k), DiagBlock(block), WeightedShift(k, block)]))
        return RowFiniteMatrix(spec, rows, cols, body)
    n = _span(rows)
    listed = draw(st.sets(st.integers(0, n - 1), max_size=5)) if n else set()
    return RowFiniteMatrix.from_rows(
        spec, rows, cols, {j: draw(finsupp(spec, cols)) for j in listed})


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.LINES):
            terminalreporter.write_line(line)
