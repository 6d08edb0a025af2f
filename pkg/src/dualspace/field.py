"""Exact scalar fields: prime fields GF(p) and the rationals QQ.

A :class:`FieldSpec` knows how to do arithmetic on *raw* values (``int``
residues for GF(p), :class:`fractions.Fraction` for QQ).  Containers in this
package store raw values and a single spec; :class:`Scalar` is the boxed,
user-facing element type with the usual operators.

Gaussian elimination (:func:`gauss_solve`, :func:`rank`) lives here as well,
since every verifier that needs it works over one of these fields.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, DivisionByZero, FieldMismatch

__all__ = [
    "FieldSpec", "GF", "QQ", "Scalar", "is_prime",
    "scalar_add", "scalar_mul", "scalar_inv", "gauss_solve", "rank",
]

_MAX_PRIME = 2**31


def is_prime(n):
    """Deterministic Miller-Rabin, exact for all n < 3.2e9."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field (``p`` set) or the rationals (``p is None``).

    Use :func:`GF` and :data:`QQ` rather than constructing directly.
    """

    p: int | None = None
    zero: object = field(init=False, repr=False, compare=False)
    one: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not (2 <= self.p < _MAX_PRIME) or not is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2**31, got {self.p!r}")
        object.__setattr__(self, "zero", 0 if self.p is not None else Fraction(0))
        object.__setattr__(self, "one", 1 if self.p is not None else Fraction(1))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    __str__ = __repr__

    @property
    def is_prime_field(self):
        return self.p is not None

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    # -- raw arithmetic -------------------------------------------------

    def coerce(self, value):
        """Turn an int, Fraction, numeric string or Scalar into a raw value of this field."""
        if isinstance(value, Scalar):
            if value.spec != self:
                raise FieldMismatch(f"{value.spec} scalar used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if self.p is not None:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DivisionByZero(f"denominator of {value} vanishes in {self}")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def neg(self, a):
        return -a % self.p if self.p is not None else -a

    def mul(self, a, b):
        return a * b % self.p if self.p is not None else a * b

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"zero has no inverse in {self}")
        return pow(a, -1, self.p) if self.p is not None else 1 / a

    # -- text syntax ----------------------------------------------------

    def parse(self, text):
        """Parse the scalar text syntax: decimal residues for GF(p), ``n`` or ``n/d`` for QQ."""
        text = text.strip()
        if self.p is not None:
            if not re.fullmatch(r"\d+", text):
                raise ValueError(f"not a {self} residue: {text!r}")
            v = int(text)
            if v >= self.p:
                raise ValueError(f"residue {v} not in [0, {self.p})")
            return v
        m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text)
        if not m:
            raise ValueError(f"not a rational: {text!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise DivisionByZero("zero denominator")
        return Fraction(int(m.group(1)), den)

    def format(self, a):
        if self.p is not None:
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __call__(self, value):
        """Box ``value`` as a :class:`Scalar` of this field."""
        return Scalar(self, value)


@functools.lru_cache(maxsize=None)
def GF(p):
    """The prime field with ``p`` elements (instances are cached)."""
    return FieldSpec(p)


QQ = FieldSpec(None)

_FIELD_RE = re.compile(r"\s*(?:GF\((\d+)\)|(QQ))\s*")


def parse_field(text):
    m = _FIELD_RE.fullmatch(text)
    if not m:
        raise ValueError(f"unknown field {text!r}; expected GF(p) or QQ")
    return GF(int(m.group(1))) if m.group(1) else QQ


class Scalar:
    """An immutable field element in canonical form.

    GF(p) values are residues in ``[0, p)``; QQ values are Fractions, which
    are always kept in lowest terms with a positive denominator.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        self.spec = spec
        self.value = spec.coerce(value)

    @classmethod
    def _raw(cls, spec, value):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.value = value
        return obj

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.spec.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar._raw(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar._raw(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar._raw(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar._raw(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar._raw(self.spec, self.spec.mul(self.value, self.spec.inv(b)))

    def __neg__(self):
        return Scalar._raw(self.spec, self.spec.neg(self.value))

    def inverse(self):
        return Scalar._raw(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.value == other.value and (self.spec is other.spec or self.spec == other.spec)
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.spec.coerce(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __repr__(self):
        return f"{self.spec}({self.spec.format(self.value)})"

    def __str__(self):
        return self.spec.format(self.value)


def scalar_add(a, b):
    return a + b


def scalar_mul(a, b):
    return a * b


def scalar_inv(a):
    return a.inverse()


# -- Gaussian elimination ------------------------------------------------

def _common_spec(values, spec=None):
    for v in values:
        if isinstance(v, Scalar):
            if spec is None:
                spec = v.spec
            elif v.spec != spec:
                raise FieldMismatch(f"{spec} vs {v.spec}")
    if spec is None:
        raise FieldMismatch("cannot infer the field; pass spec=")
    return spec


def _row_reduce(spec, rows, ncols):
    """Reduced row echelon form in place; returns the pivot columns.

    Pivot choice: leftmost column first, topmost nonzero row within it.
    """
    pivots = []
    r = 0
    for c in range(ncols):
        for i in range(r, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        inv = spec.inv(rows[r][c])
        rows[r] = [spec.mul(v, inv) for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [spec.sub(v, spec.mul(f, w)) for v, w in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def raw_rank(spec, A, ncols):
    rows = [list(row) for row in A]
    return len(_row_reduce(spec, rows, ncols))


def raw_solve(spec, A, b, ncols):
    """Solve ``A x = b`` over raw values; free variables are set to zero."""
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} rows but right-hand side of length {len(b)}")
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    pivots = _row_reduce(spec, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [spec.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = aug[r][ncols]
    return x


def _coerce_matrix(A, spec, ncols=None):
    A = [list(row) for row in A]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    for row in A:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")
    return [[spec.coerce(v) for v in row] for row in A], ncols


def rank(A, spec=None, ncols=None):
    """Rank of a dense matrix given as a list of rows."""
    spec = _common_spec((v for row in A for v in row), spec)
    raw, ncols = _coerce_matrix(A, spec, ncols)
    return raw_rank(spec, raw, ncols)


def gauss_solve(A, b, spec=None, ncols=None):
    """Exact solution of ``A x = b``, or ``None`` if the system is inconsistent.

    ``A`` is a list of ``r`` rows of length ``c``; ``b`` has length ``r``.
    Entries may be :class:`Scalar` or plain numbers when ``spec`` is given.
    Returns a list of ``c`` Scalars (free variables set to zero).
    """
    A = [list(row) for row in A]
    b = list(b)
    spec = _common_spec([v for row in A for v in row] + b, spec)
    raw, ncols = _coerce_matrix(A, spec, ncols)
    x = raw_solve(spec, raw, [spec.coerce(v) for v in b], ncols)
    if x is None:
        return None
    return [Scalar._raw(spec, v) for v in x]
