"""Row-finite matrices and their two actions.

A :class:`RowFiniteMatrix` with ``rows`` = β and ``cols`` = α has finitely
many nonzero entries in every row.  The same matrix acts

* on the right of finitely supported vectors, ``x -> x·F`` (F^(β) -> F^(α)),
* on the left of product vectors, ``y -> F·y`` (F^α -> F^β).

Infinite matrices need a finite description.  The body is one of

``ExplicitRows``   finitely many listed rows, every other row zero
``Identity``       ones on the diagonal (β = α)
``Shift(k)``       a one at (j, j+k)
``DiagBlock(b)``   b[j mod len(b)] at (j, j)
``WeightedShift``  b[j mod len(b)] at (j, j+k)

Rule bodies are normalized on construction: a minimal block, the most specific
variant that fits, and ``ExplicitRows`` when every entry vanishes.  With that
normal form, every operation below is exact and total.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, InvariantViolation
from .field import Scalar
from .seq import (
    OMEGA, FinSuppVec, ProdVec, check_dim, dim_contains, raw_pair,
)

__all__ = [
    "ExplicitRows", "Identity", "Shift", "DiagBlock", "WeightedShift",
    "RowFiniteMatrix", "row", "entry", "act_right", "act_left", "act_left_coord",
    "compose", "mat_eq", "row_support_bound",
]


@dataclass(frozen=True)
class ExplicitRows:
    rows: tuple  # ((j, FinSuppVec), ...) sorted, nonzero


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Shift:
    k: int


@dataclass(frozen=True)
class DiagBlock:
    block: tuple


@dataclass(frozen=True)
class WeightedShift:
    k: int
    block: tuple


_RULES = (Identity, Shift, DiagBlock, WeightedShift)


def _rule_params(body, one):
    """(offset, raw weight block) of a rule body."""
    if isinstance(body, Identity):
        return 0, (one,)
    if isinstance(body, Shift):
        return body.k, (one,)
    if isinstance(body, DiagBlock):
        return 0, body.block
    return body.k, body.block


def _canonical_block(block, rows):
    """Shortest block generating the same weight sequence on rows ``0..rows-1``."""
    if rows is OMEGA:
        n = len(block)
        for d in range(1, n):
            if n % d == 0 and all(block[i] == block[i % d] for i in range(d, n)):
                return block[:d]
        return block
    seq = [block[j % len(block)] for j in range(rows)]
    for d in range(1, rows + 1):
        if all(seq[j] == seq[j % d] for j in range(d, rows)):
            return tuple(seq[:d])
    return ()


class RowFiniteMatrix:
    """Element of F^{β,(α)}: a matrix whose rows all have finite support.

    Build one with the classmethods (:meth:`identity`, :meth:`shift`,
    :meth:`diag_block`, :meth:`weighted_shift`, :meth:`from_rows`,
    :meth:`from_triplets`, :meth:`from_dense`, :meth:`zero`) rather than by
    hand-assembling a body.
    """

    __slots__ = ("spec", "rows", "cols", "body", "_lookup")

    def __init__(self, spec, rows, cols, body):
        check_dim(rows)
        check_dim(cols)
        self.spec = spec
        self.rows = rows
        self.cols = cols
        if isinstance(body, ExplicitRows):
            self.body = self._check_explicit(body)
        elif isinstance(body, _RULES):
            self.body = self._normalize_rule(body)
        else:
            raise TypeError(f"unknown matrix body {body!r}")
        self._lookup = dict(self.body.rows) if isinstance(self.body, ExplicitRows) else None

    def _check_explicit(self, body):
        last = -1
        for j, r in body.rows:
            if not isinstance(r, FinSuppVec):
                raise TypeError("explicit rows must be FinSuppVec")
            if r.spec != self.spec:
                raise FieldMismatch(f"{r.spec} row in {self.spec} matrix")
            if r.dim != self.cols:
                raise DimensionMismatch(f"row {j} has dim {r.dim}, matrix has {self.cols} columns")
            if j <= last:
                raise InvariantViolation("row indices must be strictly increasing")
            if not dim_contains(self.rows, j):
                raise IndexOutOfRange(f"row {j} outside {self.rows} rows")
            if r.is_zero():
                raise InvariantViolation(f"row {j} is stored but zero")
            last = j
        return ExplicitRows(tuple(body.rows))

    def _normalize_rule(self, body):
        spec = self.spec
        k, block = _rule_params(body, spec.one)
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"shift offset must be a natural number, got {k!r}")
        block = tuple(spec.coerce(v) for v in block)
        if not block:
            raise InvariantViolation("weight block must be nonempty")
        if isinstance(body, Identity) and self.rows != self.cols:
            raise DimensionMismatch(f"identity needs a square matrix, got {self.rows}x{self.cols}")
        if self.cols is not OMEGA and (self.rows is OMEGA or self.rows + k > self.cols):
            raise DimensionMismatch(f"entry (j, j+{k}) leaves {self.cols} columns for some j < {self.rows}")
        block = _canonical_block(block, self.rows)
        if not any(block):
            return ExplicitRows(())
        if all(v == spec.one for v in block):
            if k == 0 and self.rows == self.cols:
                return Identity()
            return Shift(k)
        return DiagBlock(block) if k == 0 else WeightedShift(k, block)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, spec, rows, cols):
        return cls(spec, rows, cols, ExplicitRows(()))

    @classmethod
    def identity(cls, spec, n=OMEGA):
        return cls(spec, n, n, Identity())

    @classmethod
    def shift(cls, spec, k, rows=OMEGA, cols=OMEGA):
        return cls(spec, rows, cols, Shift(k))

    @classmethod
    def diag_block(cls, spec, block, rows=OMEGA, cols=None):
        return cls(spec, rows, rows if cols is None else cols, DiagBlock(tuple(block)))

    @classmethod
    def weighted_shift(cls, spec, k, block, rows=OMEGA, cols=OMEGA):
        return cls(spec, rows, cols, WeightedShift(k, tuple(block)))

    @classmethod
    def from_rows(cls, spec, rows, cols, row_map):
        """``row_map`` maps row index to a FinSuppVec or an index->scalar mapping."""
        listed = []
        for j in sorted(row_map):
            r = row_map[j]
            if not isinstance(r, FinSuppVec):
                r = FinSuppVec(spec, cols, r)
            if not r.is_zero():
                listed.append((j, r))
        return cls(spec, rows, cols, ExplicitRows(tuple(listed)))

    @classmethod
    def from_triplets(cls, spec, rows, cols, triplets):
        """Build from ``(row, col, value)`` triplets; duplicates are rejected."""
        grouped = {}
        for j, i, v in triplets:
            r = grouped.setdefault(j, {})
            if i in r:
                raise InvariantViolation(f"duplicate entry ({j}, {i})")
            r[i] = v
        return cls.from_rows(spec, rows, cols, grouped)

    @classmethod
    def from_dense(cls, spec, matrix, cols=None):
        matrix = [list(r) for r in matrix]
        if cols is None:
            cols = len(matrix[0]) if matrix else 0
        return cls.from_rows(spec, len(matrix), cols,
                             {j: dict(enumerate(r)) for j, r in enumerate(matrix)})

    # -- queries -----------------------------------------------------------

    @property
    def is_explicit(self):
        return isinstance(self.body, ExplicitRows)

    def rule(self):
        """(offset, raw weight block) for rule bodies; None for ExplicitRows."""
        if self.is_explicit:
            return None
        return _rule_params(self.body, self.spec.one)

    def listed_rows(self):
        """Row indices that may be nonzero, or None when infinitely many are."""
        if self.is_explicit:
            return [j for j, _ in self.body.rows]
        if self.rows is OMEGA:
            return None
        return list(range(self.rows))

    def is_zero(self):
        return self.is_explicit and not self.body.rows

    def row(self, j):
        return row(self, j)

    def to_dense(self, nrows=None, ncols=None):
        """Top-left ``nrows x ncols`` block as lists of Scalars."""
        nrows = self.rows if nrows is None else nrows
        ncols = self.cols if ncols is None else ncols
        if nrows is OMEGA or ncols is OMEGA:
            raise ValueError("need explicit truncation sizes for omega dimensions")
        zero = self.spec.zero
        out = []
        for j in range(nrows):
            r = _row_dict(self, j)
            out.append([Scalar._raw(self.spec, r.get(i, zero)) for i in range(ncols)])
        return out

    def iter_nonzero(self):
        """Nonzero entries ``(j, i, Scalar)`` in row-major order (endless for infinite rules)."""
        if self.is_explicit:
            for j, r in self.body.rows:
                for i, v in r.raw_items():
                    yield j, i, Scalar._raw(self.spec, v)
            return
        k, block = self.rule()
        js = range(self.rows) if self.rows is not OMEGA else itertools.count()
        for j in js:
            w = block[j % len(block)]
            if w:
                yield j, j + k, Scalar._raw(self.spec, w)

    def __matmul__(self, other):
        if isinstance(other, RowFiniteMatrix):
            return compose(self, other)
        if isinstance(other, ProdVec):
            return act_left(self, other)
        return NotImplemented

    def __rmatmul__(self, other):
        if isinstance(other, FinSuppVec):
            return act_right(other, self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RowFiniteMatrix):
            return NotImplemented
        if self.spec != other.spec or self.rows != other.rows or self.cols != other.cols:
            return False
        return mat_eq(self, other)

    __hash__ = None

    def __repr__(self):
        return f"RowFiniteMatrix({self.spec}, {self.rows}x{self.cols}, {self.body!r})"


def _check_row(F, j):
    if not isinstance(j, int) or not dim_contains(F.rows, j):
        raise IndexOutOfRange(f"row {j} outside {F.rows} rows")


def _row_dict(F, j):
    """Raw ``{col: value}`` of row j (no bounds check)."""
    body = F.body
    if isinstance(body, ExplicitRows):
        r = F._lookup.get(j)
        return r._entries if r is not None else {}
    k, block = _rule_params(body, F.spec.one)
    w = block[j % len(block)]
    return {j + k: w} if w else {}


def row(F, j):
    """Row j of F as a finitely supported vector of dimension ``F.cols``."""
    _check_row(F, j)
    return FinSuppVec._raw(F.spec, F.cols, dict(_row_dict(F, j)))


def entry(F, j, i):
    """The entry F_{ji} (row j, column i)."""
    _check_row(F, j)
    if not dim_contains(F.cols, i):
        raise IndexOutOfRange(f"column {i} outside {F.cols} columns")
    return Scalar._raw(F.spec, _row_dict(F, j).get(i, F.spec.zero))


def row_support_bound(F, j):
    """Smallest N with row j supported in columns ``0..N-1``.

    Coordinate j of ``F·y`` only reads ``y_0 .. y_{N-1}``.
    """
    return row(F, j).support_bound()


def act_right(x, F):
    """The morphism of finitely supported spaces ``x -> x·F``."""
    if not isinstance(x, FinSuppVec):
        raise TypeError("act_right expects a FinSuppVec")
    if x.spec != F.spec:
        raise FieldMismatch(f"{x.spec} vector, {F.spec} matrix")
    if x.dim != F.rows:
        raise DimensionMismatch(f"vector of dim {x.dim} against {F.rows} rows")
    spec = F.spec
    add, mul = spec.add, spec.mul
    zero = spec.zero
    out = {}
    for j, a in x.raw_items():
        for i, v in _row_dict(F, j).items():
            out[i] = add(out.get(i, zero), mul(a, v))
    return FinSuppVec._raw(spec, F.cols, {i: out[i] for i in sorted(out) if out[i]})


def _check_left(G, y):
    if not isinstance(y, ProdVec):
        raise TypeError("act_left expects a ProdVec")
    if y.spec != G.spec:
        raise FieldMismatch(f"{G.spec} matrix, {y.spec} vector")
    if y.dim != G.cols:
        raise DimensionMismatch(f"vector of dim {y.dim} against {G.cols} columns")


def _coord_raw(G, y, j):
    body = G.body
    if isinstance(body, ExplicitRows):
        r = _row_dict(G, j)
        if not r:
            return G.spec.zero
        return raw_pair(FinSuppVec._raw(G.spec, G.cols, r), y)
    k, block = _rule_params(body, G.spec.one)
    return G.spec.mul(block[j % len(block)], y.get_raw(j + k))


def act_left_coord(G, y, j):
    """Coordinate j of ``G·y``, computed from row j alone."""
    _check_left(G, y)
    _check_row(G, j)
    return Scalar._raw(G.spec, _coord_raw(G, y, j))


def act_left(G, y):
    """The morphism of product spaces ``y -> G·y``.

    Every shipped body keeps the result in prefix + tail form: finitely many
    explicit rows give a finite prefix and a zero tail; a rule with offset k
    and block b turns a tail of period p into one of period lcm(len(b), p).
    """
    _check_left(G, y)
    spec = G.spec
    body = G.body
    if isinstance(body, ExplicitRows):
        if not body.rows:
            return ProdVec._raw(spec, G.rows, ())
        n = body.rows[-1][0] + 1
        out = [spec.zero] * n
        for j, r in body.rows:
            out[j] = raw_pair(r, y)
        return ProdVec._raw(spec, G.rows, out)
    if isinstance(body, Identity):
        return y
    k, block = _rule_params(body, spec.one)
    mul = spec.mul
    b = len(block)

    def coord(j):
        return mul(block[j % b], y.get_raw(j + k))

    if G.rows is not OMEGA:
        return ProdVec._raw(spec, G.rows, [coord(j) for j in range(G.rows)])
    n = max(0, len(y.raw_prefix) - k)
    period = math.lcm(b, y.period) if y.raw_block else 0
    return ProdVec._raw(spec, OMEGA, [coord(j) for j in range(n)],
                        [coord(j) for j in range(n, n + period)])


def compose(A, B):
    """The matrix product A·B (β×γ times γ×α), which is again row-finite.

    Row j of the result is ``act_right(row(A, j), B)``.  Two rules compose to
    a rule; anything involving explicit rows has finitely many nonzero rows.
    """
    if A.spec != B.spec:
        raise FieldMismatch(f"{A.spec} vs {B.spec}")
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.rows}x{A.cols} times {B.rows}x{B.cols}")
    spec = A.spec
    if A.is_explicit:
        rows = {}
        for j, r in A.body.rows:
            prod = act_right(r, B)
            if not prod.is_zero():
                rows[j] = prod
        return RowFiniteMatrix(spec, A.rows, B.cols, ExplicitRows(tuple(rows.items())))
    k1, b1 = A.rule()
    if B.is_explicit:
        mul = spec.mul
        rows = []
        for r, brow in B.body.rows:
            j = r - k1
            if j < 0 or not dim_contains(A.rows, j):
                continue
            w = b1[j % len(b1)]
            if w:
                rows.append((j, FinSuppVec._raw(spec, B.cols,
                                                {i: mul(w, v) for i, v in brow.raw_items()})))
        return RowFiniteMatrix(spec, A.rows, B.cols, ExplicitRows(tuple(rows)))
    k2, b2 = B.rule()
    n = math.lcm(len(b1), len(b2))
    block = tuple(spec.mul(b1[j % len(b1)], b2[(j + k1) % len(b2)]) for j in range(n))
    return RowFiniteMatrix(spec, A.rows, B.cols, WeightedShift(k1 + k2, block))


def mat_eq(A, B):
    """Exact equality of matrices: row(A, j) == row(B, j) for every j.

    For finitely many rows this is checked row by row.  With ω rows the
    normal form decides it: a rule body is nonzero on infinitely many rows and
    explicit rows are not, and two rules agree iff offset and block agree.
    """
    if A.spec != B.spec:
        raise FieldMismatch(f"{A.spec} vs {B.spec}")
    if A.rows != B.rows or A.cols != B.cols:
        raise DimensionMismatch(f"{A.rows}x{A.cols} vs {B.rows}x{B.cols}")
    if A.is_explicit and B.is_explicit:
        return A.body.rows == B.body.rows
    if A.rows is not OMEGA:
        return all(_row_dict(A, j) == _row_dict(B, j) for j in range(A.rows))
    if A.is_explicit or B.is_explicit:
        return False
    return A.rule() == B.rule()
