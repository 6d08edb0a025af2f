import pytest
from hypothesis import given, strategies as st

from dualspace import GF, OMEGA, QQ, FinSuppVec, ProdVec, Repeat
from dualspace.errors import InvariantViolation, ParseError
from dualspace.formats import dump_matrix, dump_vector, parse_matrix, parse_vector
from dualspace.rowfinite import Identity, entry

from conftest import dims, fields, finsupp, matrices, prodvec

SWAP = """field: GF(2)
rows: 2
cols: 2
kind: triplets
0 1 1
1 0 1
"""


def test_identity_header():
    F = parse_matrix("field: GF(2)\nrows: 2\ncols: 2\nkind: identity\n")
    assert F.body == Identity() and F.rows == 2


def test_swap_matrix_roundtrip():
    F = parse_matrix(SWAP)
    assert [[entry(F, j, i).value for i in range(2)] for j in range(2)] == [[0, 1], [1, 0]]
    assert dump_matrix(F) == SWAP
    assert parse_matrix(dump_matrix(F)) == F


@pytest.mark.parametrize("body, reason", [
    ("0 0 0\n", "stored zero"),
    ("0 1 1\n0 1 1\n", "duplicate"),
    ("1 0 1\n0 1 1\n", "sorted"),
])
def test_triplet_invariants(body, reason):
    text = "field: GF(2)\nrows: 2\ncols: 2\nkind: triplets\n" + body
    with pytest.raises(InvariantViolation, match=reason):
        parse_matrix(text)


def test_triplet_out_of_range():
    with pytest.raises(InvariantViolation, match="line 4"):
        parse_matrix("field: QQ\nrows: 2\ncols: 2\nkind: triplets\n0 5 1\n")


@pytest.mark.parametrize("text, line", [
    ("field: GF(4)\nrows: 1\ncols: 1\nkind: identity\n", 1),
    ("field: QQ\nrows: 1\nkind: identity\n", 4),
    ("field: QQ\nrows: 1\ncols: 1\nkind: bogus\n", 4),
    ("field: QQ\nrows: x\ncols: 1\nkind: identity\n", 2),
    ("field: QQ\nrows: 2\ncols: 2\nkind: triplets\n0 1\n", 5),
    ("field: QQ\nrows: 2\ncols: 2\nkind: triplets\n0 1 1/0\n", 5),
    ("field: QQ\nrows: omega\ncols: omega\nkind: shift\n", 4),
    ("field: QQ\nrows: omega\ncols: omega\nkind: identity\n0 0 1\n", 5),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_rule_files():
    text = "field: GF(7)\nrows: omega\ncols: omega\nkind: weightedshift 2\nblock: 3 5\n"
    F = parse_matrix(text)
    assert entry(F, 1, 3).value == 5 and dump_matrix(F) == text
    # non-canonical rule is canonicalized on read
    F = parse_matrix("field: QQ\nrows: omega\ncols: omega\nkind: diagblock\nblock: 1 1 1\n")
    assert dump_matrix(F).endswith("kind: identity\n")


def test_comments_and_blank_lines():
    text = "# swap\n\nfield: GF(2)  # two elements\nrows: 2\ncols: 2\nkind: triplets\n\n0 1 1\n1 0 1\n"
    assert parse_matrix(text) == parse_matrix(SWAP)


def test_vector_formats():
    v = parse_vector("field: GF(7)\ndim: omega\nkind: sparse\n0 3\n4 6\n")
    assert v == FinSuppVec(GF(7), OMEGA, {0: 3, 4: 6})
    y = parse_vector("field: QQ\ndim: omega\nkind: prefix\nprefix: 1 1/2\ntail: repeat 2 3 2 3\n")
    assert y == ProdVec(QQ, OMEGA, [1, "1/2"], Repeat((2, 3)))
    assert dump_vector(y) == "field: QQ\ndim: omega\nkind: prefix\nprefix: 1 1/2\ntail: repeat 2 3\n"
    z = parse_vector("field: QQ\ndim: 3\nkind: prefix\nprefix:\ntail: zeros\n")
    assert z.is_zero() and dump_vector(z).splitlines()[3] == "prefix:"
    with pytest.raises(InvariantViolation, match="stored zero"):
        parse_vector("field: QQ\ndim: omega\nkind: sparse\n2 0\n")
    with pytest.raises(InvariantViolation):
        parse_vector("field: QQ\ndim: omega\nkind: sparse\n2 1\n1 1\n")
    with pytest.raises(InvariantViolation):
        parse_vector("field: QQ\ndim: 2\nkind: prefix\nprefix: 1\ntail: repeat 1\n")


@given(st.data())
def test_matrix_canonical_roundtrip(data):
    spec = data.draw(fields)
    F = data.draw(matrices(spec, data.draw(dims(8)), data.draw(dims(8))))
    text = dump_matrix(F)
    assert dump_matrix(parse_matrix(text)) == text
    assert parse_matrix(text) == F


@given(st.data())
def test_vector_canonical_roundtrip(data):
    spec = data.draw(fields)
    dim = data.draw(dims(8))
    for v in (data.draw(finsupp(spec, dim)), data.draw(prodvec(spec, dim))):
        text = dump_vector(v)
        assert parse_vector(text) == v
        assert dump_vector(parse_vector(text)) == text
