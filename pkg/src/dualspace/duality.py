"""The dual functor Hom(-, F) and checks of its basic properties.

A functional on F^(α) is identified with the product vector of its values on
the basis, and the dual of ``x -> x·F`` is ``y -> F·y`` with the *same*
matrix.  :class:`DualMorphism` carries a matrix together with the side it acts
on; :func:`dual` flips the side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, PreconditionViolated, TruncationTooSmall
from .field import raw_rank, raw_solve
from .rowfinite import RowFiniteMatrix, _row_dict, act_left, act_right, compose, entry
from .seq import OMEGA, ProdVec, delta, embed, pair

__all__ = [
    "Orientation", "DualMorphism", "dual", "check_adjoint", "faithful_witness",
    "validate_witness", "full_preimage", "rows_independent", "exactness_preimages",
    "check_exactness",
]


class Orientation(enum.Enum):
    RIGHT = "right"  # x -> x·F on finitely supported vectors
    LEFT = "left"    # y -> F·y on product vectors


@dataclass(frozen=True)
class DualMorphism:
    """A row-finite matrix together with the side it acts on."""

    matrix: RowFiniteMatrix
    orientation: Orientation = Orientation.RIGHT

    @property
    def domain_dim(self):
        m = self.matrix
        return m.rows if self.orientation is Orientation.RIGHT else m.cols

    @property
    def codomain_dim(self):
        m = self.matrix
        return m.cols if self.orientation is Orientation.RIGHT else m.rows

    def __call__(self, v):
        if self.orientation is Orientation.RIGHT:
            return act_right(v, self.matrix)
        return act_left(self.matrix, v)

    def then(self, other):
        """The composite ``other ∘ self``."""
        if self.orientation is not other.orientation:
            raise TypeError("cannot compose morphisms acting on different sides")
        if self.orientation is Orientation.RIGHT:
            return DualMorphism(compose(self.matrix, other.matrix), Orientation.RIGHT)
        return DualMorphism(compose(other.matrix, self.matrix), Orientation.LEFT)

    def __eq__(self, other):
        if not isinstance(other, DualMorphism):
            return NotImplemented
        return self.orientation is other.orientation and self.matrix == other.matrix

    __hash__ = None


def dual(m):
    """Hom(m, F): same matrix, opposite side.  ``dual(dual(m)) == m``."""
    flipped = Orientation.LEFT if m.orientation is Orientation.RIGHT else Orientation.RIGHT
    return DualMorphism(m.matrix, flipped)


def check_adjoint(F, x, y):
    """Does ``<x·F, y> == <x, F·y>`` hold exactly?"""
    if x.spec != F.spec or y.spec != F.spec:
        raise FieldMismatch("matrix and vectors must share a field")
    if x.dim != F.rows or y.dim != F.cols:
        raise DimensionMismatch(f"x in dim {x.dim}, y in dim {y.dim} against {F.rows}x{F.cols}")
    return pair(act_right(x, F), y) == pair(x, act_left(F, y))


def faithful_witness(F):
    """Indices ``(i, j)`` with ``F_{ji} != 0`` (column i, row j), or None for F = 0.

    The first nonzero entry in row-major order is returned.
    """
    for j, i, _ in F.iter_nonzero():
        return i, j
    return None


def validate_witness(F, witness):
    """Check a faithfulness witness both ways.

    With x = δ_j and the functional y = δ_i, the double sum
    Σ_i Σ_j y_i x_j F_{ji} collapses to F_{ji}, which must be nonzero; and
    coordinate j of ``F·δ_i`` must be that same nonzero entry.
    """
    i, j = witness
    value = entry(F, j, i)
    if not value:
        return False
    x = delta(F.spec, j, F.rows)
    y = embed(delta(F.spec, i, F.cols))
    collapsed = pair(act_right(x, F), y)
    return collapsed == value and act_left(F, y)[j] == value


def full_preimage(G):
    """The morphism of finitely supported spaces whose dual is ``y -> G·y``."""
    if isinstance(G, DualMorphism):
        if G.orientation is not Orientation.LEFT:
            raise ValueError("full_preimage expects a left-acting morphism")
        G = G.matrix
    return DualMorphism(G, Orientation.RIGHT)


def _truncated_rows(F, trunc):
    if F.rows is OMEGA:
        raise PreconditionViolated("the injection must have finitely many rows")
    width = trunc if F.cols is OMEGA else min(trunc, F.cols)
    rows = []
    zero = F.spec.zero
    for j in range(F.rows):
        r = _row_dict(F, j)
        if r and max(r) >= width:
            raise TruncationTooSmall(f"row {j} reaches column {max(r)}, truncation is {width}")
        rows.append([r.get(i, zero) for i in range(width)])
    return rows, width


def rows_independent(F, trunc):
    """Is ``x -> x·F`` injective?  Decided by the rank of the rows cut to ``trunc`` columns."""
    rows, width = _truncated_rows(F, trunc)
    return raw_rank(F.spec, rows, width) == F.rows


def exactness_preimages(F, trunc):
    """For each j < β, some y supported below ``trunc`` with ``F·y = δ_j`` (None if unsolvable).

    Every solution is re-checked by applying F before it is returned.
    """
    rows, width = _truncated_rows(F, trunc)
    if raw_rank(F.spec, rows, width) != F.rows:
        raise PreconditionViolated("rows are not independent; x -> x·F is not injective")
    spec = F.spec
    out = []
    for j in range(F.rows):
        target = [spec.one if r == j else spec.zero for r in range(F.rows)]
        sol = raw_solve(spec, rows, target, width)
        if sol is None:
            out.append(None)
            continue
        y = ProdVec._raw(spec, F.cols, sol)
        if act_left(F, y) != embed(delta(spec, j, F.rows)):
            out.append(None)
            continue
        out.append(y)
    return out


def check_exactness(F, trunc):
    """Is ``y -> F·y`` onto?  True iff every basis vector of F^β has a preimage."""
    return all(y is not None for y in exactness_preimages(F, trunc))
