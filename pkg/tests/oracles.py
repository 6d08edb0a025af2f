"""Independent reference computations on plain dense lists.

Everything here works from entries and coordinates only, never from the
library's actions or products, so it can check those.
"""

from dualspace.rowfinite import entry


def coord(prefix, block, i):
    """Coordinate i of the sequence prefix + block repeated (block may be empty)."""
    if i < len(prefix):
        return prefix[i]
    if not block:
        return 0
    return block[(i - len(prefix)) % len(block)]


def dense(F, nrows, ncols):
    """Top-left block of F as raw values, read entry by entry."""
    return [[entry(F, j, i).value for i in range(ncols)] for j in range(nrows)]


def matvec(spec, M, y):
    """(M y)_j = sum_i M[j][i] y[i]."""
    out = []
    for r in M:
        s = 0
        for a, b in zip(r, y):
            s += a * b
        out.append(spec.coerce(s))
    return out


def vecmat(spec, x, M, ncols):
    """(x M)_i = sum_j x[j] M[j][i]."""
    out = []
    for i in range(ncols):
        s = 0
        for j, a in enumerate(x):
            s += a * M[j][i]
        out.append(spec.coerce(s))
    return out


def matmul(spec, A, B, ncols):
    inner = len(B)
    return [[spec.coerce(sum(A[j][t] * B[t][i] for t in range(inner))) for i in range(ncols)]
            for j in range(len(A))]
