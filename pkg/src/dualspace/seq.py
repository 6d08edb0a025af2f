"""Sequence spaces F^(α) and F^α.

:class:`FinSuppVec` is a sparse vector with finitely many nonzero entries.
:class:`ProdVec` is an arbitrary-looking element of the product space, kept
decidable by restricting it to *prefix + tail* form, where the tail is either
all zeros or a repeating block.  Both carry a dimension that is a natural
number or :data:`OMEGA`.

Indices are 0-based everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, InvariantViolation
from .field import Scalar

__all__ = [
    "OMEGA", "check_dim", "dim_contains", "dim_le", "format_dim", "parse_dim",
    "FinSuppVec", "ProdVec", "Zeros", "Repeat",
    "delta", "zero_finsupp", "zero_prodvec", "embed",
    "vec_add", "vec_scale", "vec_eq", "prod_get", "pair",
]


class _Omega:
    """The first infinite ordinal, used as a dimension."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()


def check_dim(dim):
    if dim is OMEGA:
        return dim
    if isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0:
        return dim
    raise ValueError(f"dimension must be a natural number or OMEGA, got {dim!r}")


def dim_contains(dim, i):
    """True iff index ``i`` is a valid coordinate for ``dim``."""
    return i >= 0 and (dim is OMEGA or i < dim)


def dim_le(a, b):
    if b is OMEGA:
        return True
    return a is not OMEGA and a <= b


def format_dim(dim):
    return str(dim)


def parse_dim(text):
    text = text.strip()
    if text == "omega":
        return OMEGA
    if text.isdigit():
        return int(text)
    raise ValueError(f"bad dimension {text!r}")


def _check_same(u, v):
    if u.spec != v.spec:
        raise FieldMismatch(f"{u.spec} vs {v.spec}")
    if u.dim != v.dim:
        raise DimensionMismatch(f"dim {u.dim} vs {v.dim}")


# -- finite support -------------------------------------------------------

class FinSuppVec:
    """Element of F^(dim): a finitely supported sequence.

    ``entries`` is a mapping (or iterable of pairs) from index to scalar.
    Zero values are dropped; indices are kept sorted.
    """

    __slots__ = ("spec", "dim", "_entries")

    def __init__(self, spec, dim, entries=()):
        check_dim(dim)
        pairs = entries.items() if hasattr(entries, "items") else entries
        raw = {}
        for i, v in pairs:
            if not isinstance(i, int) or not dim_contains(dim, i):
                raise IndexOutOfRange(f"index {i} outside dim {dim}")
            if i in raw:
                raise InvariantViolation(f"duplicate index {i}")
            raw[i] = spec.coerce(v)
        self.spec = spec
        self.dim = dim
        self._entries = {i: raw[i] for i in sorted(raw) if raw[i]}

    @classmethod
    def _raw(cls, spec, dim, entries):
        """Trusted constructor: ``entries`` already sorted, nonzero, raw."""
        obj = object.__new__(cls)
        obj.spec = spec
        obj.dim = dim
        obj._entries = entries
        return obj

    @property
    def support(self):
        return tuple(self._entries)

    def items(self):
        """(index, Scalar) pairs in increasing index order."""
        return [(i, Scalar._raw(self.spec, v)) for i, v in self._entries.items()]

    def raw_items(self):
        return self._entries.items()

    def is_zero(self):
        return not self._entries

    def support_bound(self):
        """One past the largest index in the support (0 for the zero vector)."""
        return next(reversed(self._entries)) + 1 if self._entries else 0

    def __len__(self):
        return len(self._entries)

    def __getitem__(self, i):
        if not dim_contains(self.dim, i):
            raise IndexOutOfRange(f"index {i} outside dim {self.dim}")
        return Scalar._raw(self.spec, self._entries.get(i, self.spec.zero))

    def get_raw(self, i):
        return self._entries.get(i, self.spec.zero)

    def to_dense(self, n=None):
        """The first ``n`` coordinates as a list of Scalars (default: the whole space when finite)."""
        if n is None:
            if self.dim is OMEGA:
                raise ValueError("need an explicit length for an omega-dimensional vector")
            n = self.dim
        zero = self.spec.zero
        return [Scalar._raw(self.spec, self._entries.get(i, zero)) for i in range(n)]

    def __add__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return vec_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return vec_add(self, -other)

    def __neg__(self):
        neg = self.spec.neg
        return FinSuppVec._raw(self.spec, self.dim, {i: neg(v) for i, v in self._entries.items()})

    def __rmul__(self, c):
        if not isinstance(c, (Scalar, int, Fraction)):
            return NotImplemented
        return vec_scale(c, self)

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return self.spec == other.spec and self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.spec, self.dim, tuple(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{i}: {self.spec.format(v)}" for i, v in self._entries.items())
        return f"FinSuppVec({self.spec}, dim={self.dim}, {{{body}}})"


def delta(spec, i, dim=OMEGA):
    """The basis vector δ_i of F^(dim)."""
    if not dim_contains(check_dim(dim), i):
        raise IndexOutOfRange(f"index {i} outside dim {dim}")
    return FinSuppVec._raw(spec, dim, {i: spec.one})


def zero_finsupp(spec, dim=OMEGA):
    return FinSuppVec._raw(spec, check_dim(dim), {})


# -- product vectors -------------------------------------------------------

@dataclass(frozen=True)
class Zeros:
    """Tail rule: every coordinate past the prefix is zero."""


@dataclass(frozen=True)
class Repeat:
    """Tail rule: the coordinates past the prefix cycle through ``block``."""

    block: tuple

    def __post_init__(self):
        object.__setattr__(self, "block", tuple(self.block))
        if not self.block:
            raise InvariantViolation("Repeat block must be nonempty")


def _minimal_period(block):
    n = len(block)
    for d in range(1, n):
        if n % d == 0 and all(block[i] == block[i % d] for i in range(d, n)):
            return block[:d]
    return block


def _canonical(prefix, block):
    """Shortest prefix and minimal repeating block describing the same sequence."""
    prefix = list(prefix)
    block = tuple(block)
    if block and not any(block):
        block = ()
    if block:
        block = _minimal_period(block)
        while prefix and prefix[-1] == block[-1]:
            prefix.pop()
            block = block[-1:] + block[:-1]
    else:
        while prefix and not prefix[-1]:
            prefix.pop()
    return tuple(prefix), block


class ProdVec:
    """Element of F^dim in prefix + tail form.

    Coordinate ``i`` is ``prefix[i]`` when ``i < len(prefix)`` and otherwise
    comes from the tail (zero, or ``block[(i - len(prefix)) % len(block)]``).
    The stored form is canonical (shortest prefix, minimal period), so two
    equal sequences always have identical representations.
    """

    __slots__ = ("spec", "dim", "_prefix", "_block")

    def __init__(self, spec, dim, prefix=(), tail=None):
        check_dim(dim)
        prefix = [spec.coerce(v) for v in prefix]
        if tail is None or isinstance(tail, Zeros):
            block = ()
        elif isinstance(tail, Repeat):
            block = tuple(spec.coerce(v) for v in tail.block)
        else:
            raise TypeError(f"tail must be Zeros() or Repeat(...), got {tail!r}")
        if dim is not OMEGA:
            if block and any(block):
                raise InvariantViolation("finite-dimensional vectors must have a Zeros tail")
            if len(prefix) > dim:
                raise DimensionMismatch(f"prefix of length {len(prefix)} exceeds dim {dim}")
        self.spec = spec
        self.dim = dim
        self._prefix, self._block = _canonical(prefix, block)

    @classmethod
    def _raw(cls, spec, dim, prefix, block=()):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.dim = dim
        obj._prefix, obj._block = _canonical(prefix, block)
        return obj

    @property
    def prefix(self):
        return tuple(Scalar._raw(self.spec, v) for v in self._prefix)

    @property
    def tail(self):
        if not self._block:
            return Zeros()
        return Repeat(tuple(Scalar._raw(self.spec, v) for v in self._block))

    @property
    def raw_prefix(self):
        return self._prefix

    @property
    def raw_block(self):
        """The repeating block as raw values; empty for a Zeros tail."""
        return self._block

    @property
    def period(self):
        return len(self._block) or 1

    def get_raw(self, i):
        p = self._prefix
        if i < len(p):
            return p[i]
        if not self._block:
            return self.spec.zero
        return self._block[(i - len(p)) % len(self._block)]

    def __getitem__(self, i):
        return prod_get(self, i)

    def coords(self, n):
        """Raw values of coordinates ``0..n-1``."""
        return [self.get_raw(i) for i in range(n)]

    def is_zero(self):
        return not self._prefix and not self._block

    def __add__(self, other):
        if not isinstance(other, ProdVec):
            return NotImplemented
        return vec_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, ProdVec):
            return NotImplemented
        return vec_add(self, -other)

    def __neg__(self):
        neg = self.spec.neg
        return ProdVec._raw(self.spec, self.dim, [neg(v) for v in self._prefix], [neg(v) for v in self._block])

    def __rmul__(self, c):
        if not isinstance(c, (Scalar, int, Fraction)):
            return NotImplemented
        return vec_scale(c, self)

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, ProdVec):
            return NotImplemented
        if self.spec != other.spec or self.dim != other.dim:
            return False
        return vec_eq(self, other)

    def __hash__(self):
        return hash((self.spec, self.dim, self._prefix, self._block))

    def __repr__(self):
        fmt = self.spec.format
        pre = " ".join(fmt(v) for v in self._prefix)
        tail = "zeros" if not self._block else "repeat " + " ".join(fmt(v) for v in self._block)
        return f"ProdVec({self.spec}, dim={self.dim}, prefix=[{pre}], tail={tail})"


def zero_prodvec(spec, dim=OMEGA):
    return ProdVec._raw(spec, check_dim(dim), ())


def embed(x):
    """View a finitely supported vector as an element of the product space."""
    n = x.support_bound()
    zero = x.spec.zero
    return ProdVec._raw(x.spec, x.dim, [x._entries.get(i, zero) for i in range(n)])


# -- operations ------------------------------------------------------------

def vec_add(u, v):
    """Coordinatewise sum of two vectors of the same kind, field and dimension."""
    if type(u) is not type(v):
        raise TypeError(f"cannot add {type(u).__name__} and {type(v).__name__}")
    _check_same(u, v)
    spec = u.spec
    if isinstance(u, FinSuppVec):
        out = dict(u._entries)
        zero = spec.zero
        for i, b in v._entries.items():
            s = spec.add(out.get(i, zero), b)
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return FinSuppVec._raw(spec, u.dim, {i: out[i] for i in sorted(out)})
    n = max(len(u._prefix), len(v._prefix))
    period = math.lcm(u.period, v.period) if (u._block or v._block) else 0
    add = spec.add
    prefix = [add(u.get_raw(i), v.get_raw(i)) for i in range(n)]
    block = [add(u.get_raw(i), v.get_raw(i)) for i in range(n, n + period)]
    return ProdVec._raw(spec, u.dim, prefix, block)


def vec_scale(c, u):
    """Scale ``u`` by the scalar ``c``."""
    spec = u.spec
    if isinstance(c, Scalar) and c.spec != spec:
        raise FieldMismatch(f"{c.spec} scalar times {spec} vector")
    a = spec.coerce(c)
    mul = spec.mul
    if isinstance(u, FinSuppVec):
        if not a:
            return FinSuppVec._raw(spec, u.dim, {})
        return FinSuppVec._raw(spec, u.dim, {i: mul(a, v) for i, v in u._entries.items()})
    if not isinstance(u, ProdVec):
        raise TypeError(f"not a vector: {u!r}")
    return ProdVec._raw(spec, u.dim, [mul(a, v) for v in u._prefix], [mul(a, v) for v in u._block])


def vec_eq(u, v):
    """Exact equality.

    Product vectors are compared on coordinates
    ``0 .. len(prefix_u) + len(prefix_v) + lcm(period_u, period_v)``; two
    prefix + periodic sequences that agree that far agree everywhere.
    """
    if type(u) is not type(v):
        raise TypeError(f"cannot compare {type(u).__name__} and {type(v).__name__}")
    _check_same(u, v)
    if isinstance(u, FinSuppVec):
        return u._entries == v._entries
    bound = len(u._prefix) + len(v._prefix) + math.lcm(u.period, v.period)
    if u.dim is not OMEGA:
        bound = min(bound, u.dim)
    return all(u.get_raw(i) == v.get_raw(i) for i in range(bound))


def prod_get(y, i):
    """Coordinate ``i`` of a product vector, as a Scalar."""
    if not isinstance(i, int) or not dim_contains(y.dim, i):
        raise IndexOutOfRange(f"index {i} outside dim {y.dim}")
    return Scalar._raw(y.spec, y.get_raw(i))


def raw_pair(x, y):
    spec = x.spec
    add, mul = spec.add, spec.mul
    s = spec.zero
    for i, a in x._entries.items():
        s = add(s, mul(a, y.get_raw(i)))
    return s


def pair(x, y):
    """Evaluate the functional ``y`` on ``x``: the finite sum of ``x_i * y_i``."""
    if not isinstance(x, FinSuppVec) or not isinstance(y, ProdVec):
        raise TypeError("pair expects (FinSuppVec, ProdVec)")
    _check_same(x, y)
    return Scalar._raw(x.spec, raw_pair(x, y))
