"""
The dual functor
================

Dualizing keeps the matrix and switches the side it acts on.  The checks
below are the computable face of the duality: adjointness, functoriality,
faithfulness, fullness and exactness.
"""

from dualspace import GF, OMEGA, QQ, FinSuppVec, ProdVec, Repeat, RowFiniteMatrix
from dualspace.duality import (
    DualMorphism, Orientation, check_adjoint, check_exactness, dual, exactness_preimages,
    faithful_witness, full_preimage, rows_independent, validate_witness,
)
from dualspace.verify import format_report, run_suites

F7 = GF(7)
F = RowFiniteMatrix.weighted_shift(F7, 2, [3, 5])
f = DualMorphism(F)
print(f.orientation, "->", dual(f).orientation)

# adjointness: <x·F, y> = <x, F·y>
x = FinSuppVec(F7, OMEGA, {0: 1, 1: 4})
y = ProdVec(F7, OMEGA, [6], Repeat((1, 2, 3)))
print("adjoint:", check_adjoint(F, x, y))

# faithful: a nonzero matrix shows a nonzero entry to some functional
w = faithful_witness(F)
print("witness (col, row):", w, validate_witness(F, w))

# full: every left action comes from a right action with the same matrix
g = DualMorphism(F, Orientation.LEFT)
print("full:", dual(full_preimage(g)) == g)

# exact: an injective x -> x·F has a surjective dual
G = RowFiniteMatrix.from_rows(QQ, 2, OMEGA, {0: {0: 1, 1: 1}, 1: {1: 2, 3: 1}})
print("rows independent:", rows_independent(G, 8), " dual onto:", check_exactness(G, 8))
for j, pre in enumerate(exactness_preimages(G, 8)):
    print(f"  preimage of delta_{j}:", " ".join(QQ.format(a) for a in pre.coords(4)))

# a small run of the randomized suites
print(format_report(run_suites(["all"], seed=1, cases=50), seed=1), end="")
