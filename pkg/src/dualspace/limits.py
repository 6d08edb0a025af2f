"""The quotient tower F^ω / V_n ≅ F^n and its inverse limit.

``V_n`` is the subspace of sequences whose first ``n`` coordinates vanish.
The class of ``y`` modulo ``V_n`` is identified with its first ``n``
coordinates, so the transition map F^ω/V_n -> F^ω/V_m is just truncation.
A :class:`Thread` is a compatible family of such classes up to a finite
depth; it is how an inverse-limit element looks at stage N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadTruncation, DimensionMismatch, IncompatibleThread, IndexOutOfRange
from .field import Scalar
from .seq import OMEGA, ProdVec

__all__ = [
    "QuotientTower", "Thread", "project", "restrict", "to_thread",
    "from_thread", "check_compat", "in_subspace",
]


def _raw(spec, values):
    return tuple(spec.coerce(v) for v in values)


def project(y, n):
    """The class of ``y`` modulo V_n, as the coordinates ``(y_0, ..., y_{n-1})``."""
    if not isinstance(y, ProdVec):
        raise TypeError("project expects a ProdVec")
    if n < 0 or (y.dim is not OMEGA and n > y.dim):
        raise IndexOutOfRange(f"cannot project dim {y.dim} onto {n} coordinates")
    return [Scalar._raw(y.spec, v) for v in y.coords(n)]


def restrict(x, m):
    """Transition map of the tower: keep the first ``m`` coordinates of ``x``."""
    if m < 0 or m > len(x):
        raise BadTruncation(f"cannot restrict a length-{len(x)} vector to {m}")
    return list(x[:m])


def in_subspace(y, n):
    """Membership of ``y`` in V_n: its first ``n`` coordinates vanish."""
    return not any(y.coords(n))


def check_compat(stages):
    """True iff ``restrict(stages[n], m) == stages[m]`` for all m <= n.

    ``stages[k]`` is the stage of length ``k + 1``.  Truncations compose, so
    it is enough to compare neighbouring stages.
    """
    stages = [list(s) for s in stages]
    for n, s in enumerate(stages, start=1):
        if len(s) != n:
            raise DimensionMismatch(f"stage {n} has length {len(s)}")
    return all(stages[n][:n] == stages[n - 1] for n in range(1, len(stages)))


@dataclass(frozen=True)
class Thread:
    """A compatible family ``(x^1, ..., x^N)`` with ``x^n`` of length n.

    ``stages`` holds raw field values; use :meth:`stage` for Scalars.
    """

    spec: object
    stages: tuple

    def __post_init__(self):
        stages = tuple(_raw(self.spec, s) for s in self.stages)
        object.__setattr__(self, "stages", stages)
        if not check_compat(stages):
            raise IncompatibleThread("stages are not compatible under truncation")

    @classmethod
    def _trusted(cls, spec, stages):
        """Skip coercion and the compatibility check; ``stages`` must already be valid raw tuples."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "stages", stages)
        return obj

    @property
    def depth(self):
        return len(self.stages)

    def stage(self, n):
        """The length-``n`` stage, 1 <= n <= depth."""
        if not 1 <= n <= self.depth:
            raise IndexOutOfRange(f"stage {n} outside depth {self.depth}")
        return [Scalar._raw(self.spec, v) for v in self.stages[n - 1]]

    def dump(self):
        """One line per stage, space-separated scalars."""
        fmt = self.spec.format
        return "".join(" ".join(fmt(v) for v in s) + "\n" for s in self.stages)


def to_thread(y, depth):
    """The thread ``(project(y, 1), ..., project(y, depth))``."""
    if not isinstance(y, ProdVec):
        raise TypeError("to_thread expects a ProdVec")
    if y.dim is not OMEGA:
        raise DimensionMismatch("threads are defined for omega-dimensional vectors")
    if depth < 0:
        raise ValueError("depth must be a natural number")
    full = y.coords(depth)
    return Thread._trusted(y.spec, tuple(tuple(full[:n]) for n in range(1, depth + 1)))


def from_thread(t):
    """The zero extension of the deepest stage: agrees with every stage."""
    if not check_compat(t.stages):
        raise IncompatibleThread("stages are not compatible under truncation")
    last = t.stages[-1] if t.stages else ()
    return ProdVec._raw(t.spec, OMEGA, last)


class QuotientTower:
    """The canonical chain V_0 ⊇ V_1 ⊇ ... of F^ω with its quotients F^n."""

    def __init__(self, spec):
        self.spec = spec

    def quotient_dim(self, n):
        return n

    def contains(self, y, n):
        """Is ``y`` in V_n?"""
        return in_subspace(y, n)

    def project(self, y, n):
        return project(y, n)

    def transition(self, x, n, m):
        """The map F^n -> F^m (m <= n) between two levels of the tower."""
        if len(x) != n:
            raise DimensionMismatch(f"expected a length-{n} vector, got {len(x)}")
        return restrict(x, m)

    def thread(self, y, depth):
        return to_thread(y, depth)

    def __repr__(self):
        return f"QuotientTower({self.spec})"
