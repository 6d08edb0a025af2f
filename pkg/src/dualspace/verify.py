"""Randomized verification of the duality laws.

Every suite draws its cases from :func:`case_rng`, which derives an
independent generator from ``(seed, suite, field, case index)``.  Cases never
share state, so results do not depend on evaluation order and the same seed
always yields the same report.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .duality import (
    DualMorphism, Orientation, check_adjoint, dual, exactness_preimages,
    faithful_witness, full_preimage, rows_independent, validate_witness,
)
from .field import GF, QQ, raw_rank
from .limits import check_compat, from_thread, in_subspace, project, restrict, to_thread
from .rowfinite import (
    DiagBlock, Identity, RowFiniteMatrix, Shift, WeightedShift, act_left,
    act_left_coord, act_right, compose, mat_eq, row,
)
from .seq import (
    OMEGA, FinSuppVec, ProdVec, Repeat, Zeros, delta, embed, vec_eq, zero_prodvec,
)

__all__ = [
    "FIELDS", "SUITES", "LawResult", "case_rng", "random_scalar", "random_finsupp",
    "random_prodvec", "random_matrix", "random_independent_rows",
    "adjoint_suite", "functor_suite", "faithful_suite", "full_suite",
    "exact_suite", "limits_suite", "locality_suite", "quotient_dim_suite",
    "run_suites", "format_report",
]

FIELDS = (GF(2), GF(7), GF(97), QQ)
EXACT_FIELDS = (GF(2), GF(3), GF(5))

# index range used for omega-dimensional random data
OMEGA_SPAN = 40


@dataclass
class LawResult:
    """Outcome of one suite: how many cases were requested, how many failed."""

    name: str
    cases: int
    checks: int = 0
    failures: int = 0
    counterexample: dict | None = None

    @property
    def passed(self):
        return self.failures == 0

    def record(self, ok, **witness):
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness


def case_rng(seed, *labels):
    """A generator seeded from ``seed`` and the case labels only."""
    h = hashlib.blake2b(repr((seed,) + labels).encode(), digest_size=8)
    return random.Random(int.from_bytes(h.digest(), "big"))


# -- random data -----------------------------------------------------------

def random_scalar(rng, spec, nonzero=False):
    """A raw field value; QQ values have small numerators and denominators."""
    while True:
        if spec.p is not None:
            v = rng.randrange(spec.p)
        else:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        if v or not nonzero:
            return v


def _span(dim):
    return OMEGA_SPAN if dim is OMEGA else dim


def random_finsupp(rng, spec, dim, max_terms=6):
    n = _span(dim)
    if n == 0:
        return FinSuppVec(spec, dim)
    idx = rng.sample(range(n), min(n, rng.randint(0, max_terms)))
    return FinSuppVec(spec, dim, {i: random_scalar(rng, spec) for i in idx})


def random_prodvec(rng, spec, dim, max_prefix=8, max_period=4):
    """Random prefix + tail vector; omega vectors get a Zeros or Repeat tail with equal odds."""
    if dim is not OMEGA:
        return ProdVec(spec, dim, [random_scalar(rng, spec) for _ in range(rng.randint(0, dim))])
    prefix = [random_scalar(rng, spec) for _ in range(rng.randint(0, max_prefix))]
    if rng.random() < 0.5:
        return ProdVec(spec, dim, prefix, Zeros())
    block = [random_scalar(rng, spec) for _ in range(rng.randint(1, max_period))]
    return ProdVec(spec, dim, prefix, Repeat(tuple(block)))


def _random_explicit(rng, spec, rows, cols, max_rows=6, max_terms=4):
    nr = _span(rows)
    if rows is not OMEGA:
        listed = [j for j in range(nr) if rng.random() < 0.6]
    else:
        listed = rng.sample(range(nr), rng.randint(0, max_rows))
    return RowFiniteMatrix.from_rows(
        spec, rows, cols, {j: random_finsupp(rng, spec, cols, max_terms) for j in listed})


def _random_rule(rng, spec, rows, cols):
    """A rule-bodied matrix fitting the dims, or None when no rule fits."""
    if rows is OMEGA and cols is not OMEGA:
        return None
    kmax = 5 if cols is OMEGA else cols - rows
    if kmax < 0:
        return None
    k = rng.randint(0, kmax)
    block = tuple(random_scalar(rng, spec) for _ in range(rng.randint(1, 4)))
    kind = rng.randrange(4)
    if kind == 0 and rows == cols:
        body = Identity()
    elif kind == 1:
        body = Shift(k)
    elif kind == 2:
        body = DiagBlock(block)
    else:
        body = WeightedShift(k, block)
    return RowFiniteMatrix(spec, rows, cols, body)


def random_matrix(rng, spec, rows, cols, rule_bias=0.4):
    """Random row-finite matrix: a rule with probability ``rule_bias`` (when one fits), else explicit rows."""
    if rng.random() < rule_bias:
        m = _random_rule(rng, spec, rows, cols)
        if m is not None:
            return m
    return _random_explicit(rng, spec, rows, cols)


def random_independent_rows(rng, spec, rows, cols):
    """Dense rows x cols matrix (rows <= cols) whose rows are linearly independent."""
    while True:
        dense = [[random_scalar(rng, spec) for _ in range(cols)] for _ in range(rows)]
        if raw_rank(spec, dense, cols) == rows:
            return RowFiniteMatrix.from_dense(spec, dense, cols)


# -- suites ----------------------------------------------------------------

def adjoint_suite(seed, cases, omega_cases=None, fields=FIELDS, max_dim=32):
    """<x·F, y> == <x, F·y> for finite dims up to ``max_dim``, plus ``omega_cases`` rule matrices on omega dims."""
    res = LawResult("adjoint", cases)
    omega_cases = cases // 5 if omega_cases is None else omega_cases
    for spec in fields:
        for c in range(cases + omega_cases):
            rng = case_rng(seed, "adjoint", str(spec), c)
            if c < cases:
                beta, alpha = rng.randint(0, max_dim), rng.randint(0, max_dim)
                F = random_matrix(rng, spec, beta, alpha)
            else:
                # omega cases always use a rule body
                beta = alpha = OMEGA
                F = _random_rule(rng, spec, beta, alpha)
            x = random_finsupp(rng, spec, beta)
            y = random_prodvec(rng, spec, alpha)
            res.record(check_adjoint(F, x, y), F=F, x=x, y=y)
    return res


def functor_suite(seed, cases, fields=FIELDS, max_dim=12):
    """Contravariance of the dual on composites, and preservation of identities."""
    res = LawResult("functor", cases)
    for spec in fields:
        for c in range(cases):
            rng = case_rng(seed, "functor", str(spec), c)
            if rng.random() < 0.3:
                beta = gamma = alpha = OMEGA
            else:
                beta, gamma, alpha = (rng.randint(0, max_dim) for _ in range(3))
            A = random_matrix(rng, spec, beta, gamma)
            B = random_matrix(rng, spec, gamma, alpha)
            x = random_finsupp(rng, spec, beta)
            y = random_prodvec(rng, spec, alpha)
            AB = compose(A, B)
            f, g = DualMorphism(A), DualMorphism(B)
            ok = (act_right(act_right(x, A), B) == act_right(x, AB)
                  and act_left(AB, y) == act_left(A, act_left(B, y))
                  and dual(f.then(g)) == dual(g).then(dual(f)))
            I_beta = RowFiniteMatrix.identity(spec, beta)
            I_alpha = RowFiniteMatrix.identity(spec, alpha)
            ok = ok and (dual(DualMorphism(I_beta)) == DualMorphism(I_beta, Orientation.LEFT)
                         and act_left(I_alpha, y) == y
                         and act_right(x, I_beta) == x
                         and mat_eq(compose(I_beta, A), A)
                         and mat_eq(compose(A, RowFiniteMatrix.identity(spec, gamma)), A))
            res.record(ok, A=A, B=B, x=x, y=y)
    return res


def _random_square_dims(rng):
    if rng.random() < 0.3:
        return OMEGA, OMEGA
    return rng.randint(1, 12), rng.randint(1, 12)


def faithful_suite(seed, cases, fields=FIELDS):
    """Every nonzero matrix has a validated witness entry; zero matrices have none."""
    res = LawResult("faithful", cases)
    for c in range(cases):
        spec = fields[c % len(fields)]
        rng = case_rng(seed, "faithful", c)
        beta, alpha = _random_square_dims(rng)
        F = random_matrix(rng, spec, beta, alpha)
        while F.is_zero():
            F = random_matrix(rng, spec, beta, alpha)
        w = faithful_witness(F)
        res.record(w is not None and validate_witness(F, w), F=F)
    for spec in fields:
        for beta, alpha in ((3, 5), (OMEGA, OMEGA)):
            Z = RowFiniteMatrix.zero(spec, beta, alpha)
            res.record(faithful_witness(Z) is None, F=Z)
    return res


def full_suite(seed, cases, fields=FIELDS):
    """dual(full_preimage(G)) reproduces G exactly, and acts the same way."""
    res = LawResult("full", cases)
    for c in range(cases):
        spec = fields[c % len(fields)]
        rng = case_rng(seed, "full", c)
        beta, alpha = _random_square_dims(rng)
        G = random_matrix(rng, spec, beta, alpha)
        g = DualMorphism(G, Orientation.LEFT)
        f = full_preimage(g)
        back = dual(f)
        y = random_prodvec(rng, spec, alpha)
        ok = (f.orientation is Orientation.RIGHT and back.orientation is Orientation.LEFT
              and mat_eq(back.matrix, G) and back(y) == g(y))
        res.record(ok, G=G, y=y)
    return res


def exact_suite(seed, cases, trunc=64, fields=EXACT_FIELDS, max_rows=6, max_cols=12):
    """Injective x -> x·F gives surjective y -> F·y, with every preimage re-checked."""
    res = LawResult("exact", cases)
    width = min(max_cols, trunc)
    for c in range(cases):
        spec = fields[c % len(fields)]
        rng = case_rng(seed, "exact", c)
        beta = rng.randint(1, min(max_rows, width))
        alpha = rng.randint(beta, width)
        F = random_independent_rows(rng, spec, beta, alpha)
        ok = rows_independent(F, trunc)
        sols = exactness_preimages(F, trunc) if ok else []
        for j, y in enumerate(sols):
            ok = ok and y is not None and act_left(F, y) == embed(delta(spec, j, beta))
        res.record(ok, F=F)
    return res


def _hausdorff_ok(y):
    bound = len(y.raw_prefix) + y.period
    all_vanish = all(in_subspace(y, n) for n in range(bound + 1))
    return vec_eq(y, zero_prodvec(y.spec, y.dim)) == all_vanish


def limits_suite(seed, cases, depth=64, fields=FIELDS):
    """Threads are compatible, projections are natural, and threads round-trip."""
    res = LawResult("limits", cases)
    for c in range(cases):
        spec = fields[c % len(fields)]
        rng = case_rng(seed, "limits", c)
        y = random_prodvec(rng, spec, OMEGA)
        if rng.random() < 0.1:
            y = zero_prodvec(spec)
        t = to_thread(y, depth)
        ok = check_compat(t.stages) and _hausdorff_ok(y)
        back = from_thread(t)
        projections = [project(y, n) for n in range(depth + 1)]
        for n in range(depth + 1):
            m = rng.randint(0, n)
            ok = ok and restrict(projections[n], m) == projections[m]
            ok = ok and project(back, n) == projections[n]
        res.record(ok, y=y)
    q = quotient_dim_suite()
    res.checks += q.checks
    res.failures += q.failures
    return res


def quotient_rank(spec, n):
    """Rank of the images of δ_0 .. δ_{n-1} in F^ω/V_n ≅ F^n."""
    images = [[s.value for s in project(embed(delta(spec, i)), n)] for i in range(n)]
    return raw_rank(spec, images, n)


def quotient_dim_suite(fields=(GF(2), GF(7)), nmax=16):
    res = LawResult("quotient_dim", nmax)
    for spec in fields:
        for n in range(1, nmax + 1):
            res.record(quotient_rank(spec, n) == n, spec=spec, n=n)
    return res


def _perturbation(rng, spec, avoid):
    """Random omega vector vanishing on the indices in ``avoid``."""
    z = random_prodvec(rng, spec, OMEGA)
    if not avoid:
        return z
    n = max(max(avoid) + 1, len(z.raw_prefix))
    prefix = [spec.zero if i in avoid else z.get_raw(i) for i in range(n)]
    block = [z.get_raw(i) for i in range(n, n + z.period)] if z.raw_block else []
    return ProdVec(spec, OMEGA, prefix, Repeat(tuple(block)) if block else Zeros())


def locality_suite(seed, cases, fields=FIELDS):
    """Coordinate j of G·y only depends on y over the support of row j."""
    res = LawResult("locality", cases)
    for c in range(cases):
        spec = fields[c % len(fields)]
        rng = case_rng(seed, "locality", c)
        G = random_matrix(rng, spec, OMEGA, OMEGA, rule_bias=0.5)
        y = random_prodvec(rng, spec, OMEGA)
        listed = G.listed_rows()
        if listed:
            j = rng.choice(listed)
        else:
            j = rng.randrange(OMEGA_SPAN)
        supp = set(row(G, j).support)
        z = _perturbation(rng, spec, supp)
        ok = (all(not z.get_raw(i) for i in supp)
              and act_left_coord(G, y, j) == act_left_coord(G, y + z, j)
              and act_left(G, y)[j] == act_left(G, y + z)[j])
        res.record(ok, G=G, y=y, z=z)
    return res


SUITES = {
    "adjoint": lambda seed, cases, trunc: adjoint_suite(seed, cases),
    "exact": lambda seed, cases, trunc: exact_suite(seed, cases, trunc),
    "faithful": lambda seed, cases, trunc: faithful_suite(seed, cases),
    "full": lambda seed, cases, trunc: full_suite(seed, cases),
    "functor": lambda seed, cases, trunc: functor_suite(seed, cases),
    "limits": lambda seed, cases, trunc: limits_suite(seed, cases),
}


def run_suites(names, seed, cases, trunc=64):
    """Run the named suites (``"all"`` expands to every suite), sorted by name."""
    if "all" in names:
        names = list(SUITES)
    return [SUITES[name](seed, cases, trunc) for name in sorted(set(names))]


def format_report(results, seed=None, paths=None):
    """Line-oriented report: ``<law> <cases> <pass|fail> [counterexample=<path>]``.

    Lines are sorted by law name; nothing in the output depends on timing.
    """
    paths = paths or {}
    head = "# dualspace verify" + (f" seed={seed}" if seed is not None else "")
    lines = [head]
    for r in sorted(results, key=lambda r: r.name):
        line = f"{r.name} {r.cases} {'pass' if r.passed else 'fail'}"
        if not r.passed and r.name in paths:
            line += f" counterexample={paths[r.name]}"
        lines.append(line)
    return "\n".join(lines) + "\n"
