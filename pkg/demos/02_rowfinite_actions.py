"""
Row-finite matrices acting on both sides
========================================

One matrix gives two maps: x -> x·F on finitely supported vectors and
y -> F·y on product vectors.  Row-finiteness keeps both sums finite.
"""

from dualspace import OMEGA, QQ, FinSuppVec, ProdVec, Repeat, RowFiniteMatrix, act_left, act_right, compose

S = RowFiniteMatrix.shift(QQ, 1)         # row j has a single 1 in column j+1
D = RowFiniteMatrix.diag_block(QQ, [2, 3])  # diag(2, 3, 2, 3, ...)
E = RowFiniteMatrix.from_rows(QQ, OMEGA, OMEGA, {0: {0: 1, 4: -1}})



def show(v, n=8):
    return " ".join(QQ.format(a) for a in v.coords(n))


x = FinSuppVec(QQ, OMEGA, {0: 1, 2: 5})
y = ProdVec(QQ, OMEGA, [1, 2, 3], Repeat((1, 0)))

print("x·S  =", act_right(x, S))
print("y    =", show(y))
print("S·y  =", show(act_left(S, y)))
print("D·y  =", show(act_left(D, y)))
print("E·y  =", show(act_left(E, y), 4), " (only row 0 is listed)")

# products stay in closed form
print(compose(S, S).body)
SD = compose(S, D)
print(SD.body)
for r in SD.to_dense(3, 5):
    print("   ", *r)

# associativity on both sides
A, B = SD, E
print(act_right(act_right(x, A), B) == act_right(x, compose(A, B)))
print(act_left(compose(A, B), y) == act_left(A, act_left(B, y)))

# the @ operator does the obvious thing
print((S @ y) == act_left(S, y), (x @ S) == act_right(x, S))
