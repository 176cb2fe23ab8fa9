"""Exact rational scalars, vectors, and affine rows.

Every number in this package is a ``fractions.Fraction``, stored in lowest
terms with a positive denominator, so each predicate built on top of this
module (positive proportionality, linear dependence, lexicographic order,
vanishing signed sums) is decided exactly, with no tolerance anywhere.

The text encoding accepted wherever a rational appears is an optionally
signed decimal integer, or ``p/q`` with an unsigned nonzero ``q``.
Floating-point literals are rejected outright: a decimal like ``0.1`` has no
exact binary or rational reading that users reliably intend.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionError, MalformedRationalError

ZERO = Fraction(0)
ONE = Fraction(1)

_RAT_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?\Z")


def parse_rational(value) -> Fraction:
    """Parse an int or a ``p/q`` text into a Fraction in lowest terms."""
    if isinstance(value, bool):
        raise MalformedRationalError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str) or not _RAT_RE.fullmatch(value):
        raise MalformedRationalError(f"not a rational: {value!r}")
    num, _, den = value.partition("/")
    if den:
        if int(den) == 0:
            raise MalformedRationalError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def format_rational(q: Fraction) -> str:
    """Inverse of :func:`parse_rational`; integers print without ``/1``."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -- plain vector helpers (tuples of Fractions) ------------------------------

Vector = Tuple[Fraction, ...]


def vec(values: Iterable) -> Vector:
    return tuple(parse_rational(v) for v in values)


def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def vec_scale(lam: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(lam * x for x in v)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def vec_neg(v: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in v)


def vec_dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def pos_ratio(v1: Sequence[Fraction], v2: Sequence[Fraction]) -> Optional[Fraction]:
    """The positive scalar carrying ``v1`` onto ``v2``, if any.

    Returns ``lam > 0`` with ``v2 == lam * v1``, or None.  Two zero vectors
    count as proportional with ratio 1, which keeps proportionality classes
    of degenerate rows well defined.  The candidate ratio is fixed by the
    first nonzero coordinate of ``v1`` and then verified on every coordinate,
    so no root extraction ever enters.
    """
    first = next((i for i, x in enumerate(v1) if x != 0), None)
    if first is None:
        return ONE if vec_is_zero(v2) else None
    lam = v2[first] / v1[first]
    if lam <= 0:
        return None
    if all(y == lam * x for x, y in zip(v1, v2)):
        return lam
    return None


def cross_dependent(v1: Sequence[Fraction], v2: Sequence[Fraction]) -> bool:
    """True iff every 2x2 minor of the stacked pair vanishes.

    This is linear dependence in the standard sense: a zero vector is
    dependent with anything.
    """
    n = len(v1)
    for i in range(n):
        for j in range(i + 1, n):
            if v1[i] * v2[j] - v1[j] * v2[i] != 0:
                return False
    return True


# -- affine rows --------------------------------------------------------------


@dataclass(frozen=True)
class AffRow:
    """An affine row: linear part ``a`` plus bias ``b``, all exact."""

    a: Vector
    b: Fraction

    @property
    def vec(self) -> Vector:
        return self.a + (self.b,)

    @property
    def dim(self) -> int:
        return len(self.a)

    def is_zero(self) -> bool:
        return self.b == 0 and vec_is_zero(self.a)

    def scale(self, lam: Fraction) -> "AffRow":
        return AffRow(vec_scale(lam, self.a), lam * self.b)

    def neg(self) -> "AffRow":
        return AffRow(vec_neg(self.a), -self.b)


def aff_row(a: Iterable, b) -> AffRow:
    return AffRow(vec(a), parse_rational(b))


def zero_row(m: int) -> AffRow:
    return AffRow((ZERO,) * m, ZERO)


def _check_dims(r1: AffRow, r2: AffRow) -> None:
    if r1.dim != r2.dim:
        raise DimensionError(f"row dimensions differ: {r1.dim} vs {r2.dim}")


def semi_dep_ratio(r1: AffRow, r2: AffRow) -> Optional[Fraction]:
    """Positive ratio ``lam`` with ``r2 == lam * r1``, or None."""
    _check_dims(r1, r2)
    return pos_ratio(r1.vec, r2.vec)


def lin_dep(r1: AffRow, r2: AffRow) -> bool:
    """Linear dependence over the reals (any sign), via 2x2 minors."""
    _check_dims(r1, r2)
    return cross_dependent(r1.vec, r2.vec)


def lex_cmp(r1: AffRow, r2: AffRow) -> int:
    """Total lexicographic order on the concatenation (a | b): -1, 0 or 1."""
    _check_dims(r1, r2)
    if r1.vec < r2.vec:
        return -1
    if r1.vec > r2.vec:
        return 1
    return 0
