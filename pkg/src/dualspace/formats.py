"""Text formats for vectors, matrices and threads.

Vector file::

    field: GF(7)          # or QQ
    dim: omega            # or a natural number
    kind: sparse          # then "<index> <scalar>" lines, strictly increasing
    kind: prefix          # then "prefix: <scalars>" and "tail: zeros | repeat <scalars>"

Matrix file::

    field: QQ
    rows: omega
    cols: omega
    kind: triplets        # then "<row> <col> <scalar>" lines, row-major, strictly increasing
    kind: identity
    kind: shift <k>
    kind: diagblock       # then "block: <scalars>"
    kind: weightedshift <k>   # then "block: <scalars>"

Blank lines and ``#`` comments are ignored.  Writers emit the canonical form,
so ``dump(parse(text)) == text`` for canonical files.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DivisionByZero, InvariantViolation, ParseError
from .field import parse_field
from .rowfinite import (
    DiagBlock, ExplicitRows, Identity, RowFiniteMatrix, Shift, WeightedShift,
)
from .seq import FinSuppVec, ProdVec, Repeat, Zeros, format_dim, parse_dim

__all__ = [
    "parse_vector", "dump_vector", "parse_matrix", "dump_matrix",
    "read_vector", "write_vector", "read_matrix", "write_matrix",
]


def _lines(text):
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield n, line


def _header(lines, keys):
    """Consume ``key: value`` lines until every key in ``keys`` has been seen."""
    found = {}
    last = 0
    while len(found) < len(keys):
        try:
            n, line = next(lines)
        except StopIteration:
            missing = [k for k in keys if k not in found]
            raise ParseError(last + 1, f"missing header {', '.join(missing)}") from None
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in keys:
            raise ParseError(n, f"expected one of the headers {', '.join(keys)}")
        if key in found:
            raise ParseError(n, f"repeated header {key!r}")
        found[key] = (n, value.strip())
        last = n
    return found


def _parse_header_value(n, parse, value, what):
    try:
        return parse(value)
    except ValueError as exc:
        raise ParseError(n, f"bad {what}: {exc}") from None


def _scalar(spec, n, text):
    try:
        return spec.parse(text)
    except (ValueError, DivisionByZero) as exc:
        raise ParseError(n, str(exc)) from None


def _index(n, text):
    if not text.isdigit():
        raise ParseError(n, f"bad index {text!r}")
    return int(text)


def _wrap(n, exc):
    if isinstance(exc, ParseError):
        return exc
    return InvariantViolation(f"line {n}: {exc}")


# -- vectors ---------------------------------------------------------------

def parse_vector(text):
    """Parse a vector file into a FinSuppVec (``kind: sparse``) or ProdVec (``kind: prefix``)."""
    lines = _lines(text)
    head = _header(lines, ("field", "dim", "kind"))
    spec = _parse_header_value(head["field"][0], parse_field, head["field"][1], "field")
    dim = _parse_header_value(head["dim"][0], parse_dim, head["dim"][1], "dim")
    kn, kind = head["kind"]
    if kind == "sparse":
        entries = {}
        last = -1
        for n, line in lines:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(n, "expected '<index> <scalar>'")
            i = _index(n, parts[0])
            v = _scalar(spec, n, parts[1])
            if i in entries:
                raise InvariantViolation(f"line {n}: duplicate index {i}")
            if i < last:
                raise InvariantViolation(f"line {n}: indices not increasing")
            if not v:
                raise InvariantViolation(f"line {n}: stored zero at index {i}")
            entries[i] = v
            last = i
        try:
            return FinSuppVec(spec, dim, entries)
        except (ValueError, IndexError) as exc:
            raise _wrap(kn, exc) from None
    if kind == "prefix":
        body = _header(lines, ("prefix", "tail"))
        pn, ptext = body["prefix"]
        prefix = [_scalar(spec, pn, t) for t in ptext.split()]
        tn, ttext = body["tail"]
        words = ttext.split()
        if words == ["zeros"]:
            tail = Zeros()
        elif len(words) >= 2 and words[0] == "repeat":
            tail = Repeat(tuple(_scalar(spec, tn, t) for t in words[1:]))
        else:
            raise ParseError(tn, "expected 'zeros' or 'repeat <scalars>'")
        for n, _ in lines:
            raise ParseError(n, "unexpected data after tail")
        try:
            return ProdVec(spec, dim, prefix, tail)
        except (ValueError, IndexError) as exc:
            raise _wrap(tn, exc) from None
    raise ParseError(kn, f"unknown vector kind {kind!r}")


def dump_vector(v):
    fmt = v.spec.format
    out = [f"field: {v.spec}", f"dim: {format_dim(v.dim)}"]
    if isinstance(v, FinSuppVec):
        out.append("kind: sparse")
        out.extend(f"{i} {fmt(a)}" for i, a in v.raw_items())
    else:
        out.append("kind: prefix")
        out.append(("prefix: " + " ".join(fmt(a) for a in v.raw_prefix)).rstrip())
        block = v.raw_block
        out.append("tail: repeat " + " ".join(fmt(a) for a in block) if block else "tail: zeros")
    return "\n".join(out) + "\n"


# -- matrices --------------------------------------------------------------

def parse_matrix(text):
    """Parse a matrix file into a :class:`RowFiniteMatrix`."""
    lines = _lines(text)
    head = _header(lines, ("field", "rows", "cols", "kind"))
    spec = _parse_header_value(head["field"][0], parse_field, head["field"][1], "field")
    rows = _parse_header_value(head["rows"][0], parse_dim, head["rows"][1], "rows")
    cols = _parse_header_value(head["cols"][0], parse_dim, head["cols"][1], "cols")
    kn, kind = head["kind"]
    words = kind.split()
    name, args = (words[0], words[1:]) if words else ("", [])

    def offset():
        if len(args) != 1 or not args[0].isdigit():
            raise ParseError(kn, f"'{name}' needs one natural-number offset")
        return int(args[0])

    def block():
        bn, btext = _header(lines, ("block",))["block"]
        values = tuple(_scalar(spec, bn, t) for t in btext.split())
        if not values:
            raise ParseError(bn, "empty block")
        for n, _ in lines:
            raise ParseError(n, "unexpected data after block")
        return values

    def no_data():
        for n, _ in lines:
            raise ParseError(n, f"'{name}' matrices take no data lines")

    if name == "triplets" and not args:
        return _parse_triplets(spec, rows, cols, lines, kn)
    if name == "identity" and not args:
        no_data()
        body = Identity()
    elif name == "shift":
        k = offset()
        no_data()
        body = Shift(k)
    elif name == "diagblock" and not args:
        body = DiagBlock(block())
    elif name == "weightedshift":
        k = offset()
        body = WeightedShift(k, block())
    else:
        raise ParseError(kn, f"unknown matrix kind {kind!r}")
    try:
        return RowFiniteMatrix(spec, rows, cols, body)
    except (ValueError, IndexError) as exc:
        raise _wrap(kn, exc) from None


def _parse_triplets(spec, rows, cols, lines, kn):
    grouped = {}
    last = None
    for n, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(n, "expected '<row> <col> <scalar>'")
        j, i = _index(n, parts[0]), _index(n, parts[1])
        v = _scalar(spec, n, parts[2])
        if last is not None and (j, i) <= last:
            what = "duplicate entry" if (j, i) == last else "triplets not sorted row-major"
            raise InvariantViolation(f"line {n}: {what} ({j}, {i})")
        if not v:
            raise InvariantViolation(f"line {n}: stored zero at ({j}, {i})")
        grouped.setdefault(j, {})[i] = v
        last = (j, i)
    try:
        return RowFiniteMatrix.from_rows(spec, rows, cols, grouped)
    except (ValueError, IndexError) as exc:
        raise _wrap(kn, exc) from None


def dump_matrix(F):
    fmt = F.spec.format
    out = [f"field: {F.spec}", f"rows: {format_dim(F.rows)}", f"cols: {format_dim(F.cols)}"]
    body = F.body
    if isinstance(body, ExplicitRows):
        out.append("kind: triplets")
        for j, r in body.rows:
            out.extend(f"{j} {i} {fmt(v)}" for i, v in r.raw_items())
    elif isinstance(body, Identity):
        out.append("kind: identity")
    elif isinstance(body, Shift):
        out.append(f"kind: shift {body.k}")
    elif isinstance(body, DiagBlock):
        out.append("kind: diagblock")
        out.append("block: " + " ".join(fmt(v) for v in body.block))
    else:
        out.append(f"kind: weightedshift {body.k}")
        out.append("block: " + " ".join(fmt(v) for v in body.block))
    return "\n".join(out) + "\n"


# -- files -----------------------------------------------------------------

def read_vector(path):
    return parse_vector(Path(path).read_text(encoding="utf-8"))


def write_vector(path, v):
    Path(path).write_text(dump_vector(v), encoding="utf-8")


def read_matrix(path):
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(path, F):
    Path(path).write_text(dump_matrix(F), encoding="utf-8")
