"""Command-line front end.

::

    dualspace apply   --matrix M --vector V --side left|right [--out FILE]
    dualspace compose A B [--out FILE]
    dualspace dual    --matrix M [--side right|left] [--out FILE]
    dualspace limit   --vector V --depth N [--mode thread|roundtrip]
    dualspace verify  [--suite NAME ...] [--seed N] [--cases N] [--trunc N] [--out DIR]

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 parse error,
4 invariant violation, 5 field mismatch, 6 dimension/index error, 7 I/O
error, 8 any other library error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import errors
from .duality import DualMorphism, Orientation, dual
from .formats import dump_matrix, dump_vector, read_matrix, read_vector, write_matrix, write_vector
from .limits import from_thread, project, to_thread
from .rowfinite import act_left, act_right, compose
from .seq import FinSuppVec, embed
from .verify import SUITES, format_report, run_suites

DEFAULT_SEED = 42
DEFAULT_CASES = 1000
DEFAULT_TRUNC = 64

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# checked in order: subclasses before their bases
ERROR_CODES = (
    (errors.ParseError, 3),
    (errors.InvariantViolation, 4),
    (errors.FieldMismatch, 5),
    (errors.DimensionMismatch, 6),
    (errors.IndexOutOfRange, 6),
    (errors.BadTruncation, 6),
    (OSError, 7),
    (errors.DualSpaceError, 8),
)


def exit_code_for(exc):
    for cls, code in ERROR_CODES:
        if isinstance(exc, cls):
            return code
    return None


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_apply(args):
    F = read_matrix(args.matrix)
    v = read_vector(args.vector)
    if args.side == "right":
        if not isinstance(v, FinSuppVec):
            raise errors.DimensionMismatch("right action needs a sparse (finite-support) vector")
        result = act_right(v, F)
    else:
        if isinstance(v, FinSuppVec):
            v = embed(v)
        result = act_left(F, v)
    _emit(dump_vector(result), args.out)
    return EXIT_OK


def cmd_compose(args):
    _emit(dump_matrix(compose(read_matrix(args.a), read_matrix(args.b))), args.out)
    return EXIT_OK


def cmd_dual(args):
    m = DualMorphism(read_matrix(args.matrix), Orientation(args.side))
    d = dual(m)
    _emit(dump_matrix(d.matrix), args.out)
    print(f"orientation: {m.orientation.value} -> {d.orientation.value}",
          file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_limit(args):
    y = read_vector(args.vector)
    if isinstance(y, FinSuppVec):
        y = embed(y)
    t = to_thread(y, args.depth)
    if args.mode == "thread":
        sys.stdout.write(t.dump())
        return EXIT_OK
    back = from_thread(t)
    ok = all(project(back, n) == project(y, n) for n in range(args.depth + 1))
    print(f"roundtrip depth={args.depth} {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAILED


def _write_counterexample(outdir, result):
    folder = Path(outdir) / f"{result.name}-counterexample"
    folder.mkdir(parents=True, exist_ok=True)
    for key, obj in sorted(result.counterexample.items()):
        if isinstance(obj, FinSuppVec) or hasattr(obj, "raw_prefix"):
            write_vector(folder / f"{key}.vec", obj)
        elif hasattr(obj, "body"):
            write_matrix(folder / f"{key}.dsm", obj)
        else:
            (folder / f"{key}.txt").write_text(f"{obj}\n", encoding="utf-8")
    return folder.as_posix()


def cmd_verify(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("DUALSPACE_SEED", DEFAULT_SEED))
    results = run_suites(args.suite or ["all"], seed, args.cases, args.trunc)
    paths = {}
    for r in results:
        if not r.passed and r.counterexample:
            paths[r.name] = _write_counterexample(args.out or ".", r)
    sys.stdout.write(format_report(results, seed, paths))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser():
    p = argparse.ArgumentParser(prog="dualspace", description="Row-finite matrices and the dual functor.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("apply", help="apply a matrix to a vector")
    a.add_argument("--matrix", required=True)
    a.add_argument("--vector", required=True)
    a.add_argument("--side", choices=("left", "right"), required=True)
    a.add_argument("--out")
    a.set_defaults(func=cmd_apply)

    c = sub.add_parser("compose", help="matrix product A·B")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--out")
    c.set_defaults(func=cmd_compose)

    d = sub.add_parser("dual", help="dualize a morphism (same matrix, opposite side)")
    d.add_argument("--matrix", required=True)
    d.add_argument("--side", choices=("right", "left"), default="right",
                   help="side the input morphism acts on")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dual)

    lim = sub.add_parser("limit", help="quotient-tower thread of a vector")
    lim.add_argument("--vector", required=True)
    lim.add_argument("--depth", type=_positive, required=True)
    lim.add_argument("--mode", choices=("thread", "roundtrip"), default="thread")
    lim.set_defaults(func=cmd_limit)

    v = sub.add_parser("verify", help="run randomized verification suites")
    v.add_argument("--suite", action="append", choices=("all",) + tuple(sorted(SUITES)))
    v.add_argument("--seed", type=int, help=f"default: $DUALSPACE_SEED or {DEFAULT_SEED}")
    v.add_argument("--cases", type=_positive, default=DEFAULT_CASES)
    v.add_argument("--trunc", type=_positive, default=DEFAULT_TRUNC)
    v.add_argument("--out", help="directory for counterexample files (default: .)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        print(f"dualspace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
