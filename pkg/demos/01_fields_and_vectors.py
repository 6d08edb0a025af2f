"""
Exact scalars and the two kinds of sequences
============================================

Everything is exact: residues mod p, or rationals in lowest terms.
"""

from dualspace import GF, OMEGA, QQ, FinSuppVec, ProdVec, Repeat, delta, pair, rank

# scalars
F7 = GF(7)
print(F7(3) + F7(5), F7(3) * F7(5), F7(3).inverse())
print(QQ("3/4") / QQ(6))

# a finitely supported vector: only the listed coordinates are nonzero
x = FinSuppVec(F7, OMEGA, {0: 2, 5: 1})
print("x =", x, " support:", x.support)

# a product vector: a prefix and then a periodic (or zero) tail
y = ProdVec(F7, OMEGA, [1, 2], Repeat((3, 4)))
print("first 8 coordinates of y:", y.coords(8))

# the pairing <x, y> only reads y where x is nonzero
print("<x, y> =", pair(x, y), " (2*1 + 1*y_5 with y_5 =", y[5], ")")

# equivalent descriptions are stored the same way
z = ProdVec(F7, OMEGA, [1, 2, 3, 4, 3], Repeat((4, 3)))
print("same vector?", y == z, "canonical prefix:", z.prefix, "period:", z.period)

# exact rank
print("rank over QQ:", rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]], spec=QQ))
print("delta_3 in a 5-dim space:", delta(QQ, 3, 5).to_dense())
