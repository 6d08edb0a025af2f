"""
The quotient tower and threads
==============================

V_n = sequences whose first n coordinates vanish.  F^omega / V_n is F^n and
the maps between levels are truncations.  A thread records one class per
level; compatible threads are exactly product vectors.
"""

from dualspace import GF, OMEGA, ProdVec, Repeat
from dualspace.limits import QuotientTower, Thread, check_compat, from_thread, project, restrict, to_thread
from dualspace.errors import IncompatibleThread

F5 = GF(5)
T = QuotientTower(F5)
y = ProdVec(F5, OMEGA, [1, 0, 2], Repeat((4,)))

for n in range(1, 6):
    print(n, [s.value for s in project(y, n)])

t = to_thread(y, 6)
print(t.dump(), end="")
print("compatible:", check_compat(t.stages))

# truncation commutes with projection
print(restrict(project(y, 6), 3) == project(y, 3))

# going back: the zero extension of the deepest stage agrees with every stage
back = from_thread(t)
print(all(project(back, n) == project(y, n) for n in range(7)))

# y sits in V_n only while its leading coordinates vanish
print([T.contains(ProdVec(F5, OMEGA, [0, 0, 1]), n) for n in range(5)])

try:
    Thread(F5, [[1], [2, 0]])
except IncompatibleThread as e:
    print("rejected:", e)
