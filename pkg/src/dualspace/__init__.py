"""Exact linear algebra for the duality between F^(α) and F^α.

Finitely supported sequence spaces F^(α) and product spaces F^α (α finite or
ω) over GF(p) or QQ, row-finite matrices acting on both, the dual functor
``f -> y∘f``, the quotient tower F^ω/V_n, and randomized checks of the laws
that tie them together.
"""

from .errors import (
    BadTruncation, DimensionMismatch, DivisionByZero, DualSpaceError, FieldMismatch,
    IncompatibleThread, IndexOutOfRange, InvariantViolation, ParseError,
    PreconditionViolated, TruncationTooSmall,
)
from .field import GF, QQ, FieldSpec, Scalar, gauss_solve, rank
from .seq import (
    OMEGA, FinSuppVec, ProdVec, Repeat, Zeros, delta, embed, pair, prod_get,
    vec_add, vec_eq, vec_scale, zero_finsupp, zero_prodvec,
)
from .rowfinite import RowFiniteMatrix, act_left, act_right, compose, entry, mat_eq, row
from .limits import QuotientTower, Thread, check_compat, from_thread, project, restrict, to_thread
from .duality import (
    DualMorphism, Orientation, check_adjoint, check_exactness, dual,
    faithful_witness, full_preimage, rows_independent,
)

__version__ = "0.1.0"
