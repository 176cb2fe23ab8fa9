"""Canonical (minimal) forms of single-output parameters.

Two parameters realize the same function whenever one is carried to the other
by the permutation/scaling action together with three rewrite moves: a neuron
with zero outgoing weight is inert, neurons with positively proportional
rows merge by adding their (scaled) outgoing weights, and a neuron with zero
linear part contributes only the constant ``v * relu(b)``.  The minimal form
is the deterministic normal form of that equivalence:

* ``u`` in {+1, -1, 0}^n, with ``u_i == 0`` exactly on zero rows;
* one surviving row per proportionality class, scaled by the absolute value
  of the class's total coefficient ``s = sum(v_i * mu_i)`` where ``mu_i`` is
  each member's ratio to the class representative, signed into ``u`` by
  ``sign(s)``;
* +1 rows first, then -1 rows, then zero rows, the two signed blocks each in
  non-increasing lexicographic order;
* the constant absorbs every ``v_i * relu(b_i)`` from zero-linear-part rows.

Merging every class completely minimizes the number of nonzero ``u`` entries,
and the fixed block-and-lexicographic sort resolves all remaining ties, so
equality of minimal forms decides equality of rewrite classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import DimensionError
from .param import Architecture, Parameter
from .rational import AffRow, format_rational, pos_ratio, vec_is_zero, zero_row


@dataclass(frozen=True)
class MinimalForm:
    m: int
    u: Tuple[int, ...]
    rows: Tuple[AffRow, ...]
    constant: Fraction

    @property
    def n(self) -> int:
        return len(self.u)

    def rank(self) -> int:
        """Number of zero entries of u."""
        return sum(1 for x in self.u if x == 0)

    def as_parameter(self) -> Parameter:
        """The minimal form read back as a width-n parameter."""
        return Parameter(
            Architecture(self.m, self.n, 1),
            (tuple(Fraction(x) for x in self.u),),
            tuple(r.a for r in self.rows),
            tuple(r.b for r in self.rows),
            (self.constant,),
        )


@dataclass(frozen=True)
class ZeroReduction:
    """Reduction of a parameter whose minimal form has no surviving rows.

    Only the constant is left; the realized function is constant."""

    constant: Fraction


def minimal_form(p: Parameter) -> MinimalForm:
    """Compute the canonical representative of a single-output parameter.

    Idempotent: running this on ``mf.as_parameter()`` reproduces ``mf``.
    """
    if p.k != 1:
        raise DimensionError(f"minimal form requires k=1, got k={p.k}")
    constant = p.c[0]
    survivors: List[Tuple[Fraction, AffRow]] = []
    for i in range(p.n):
        v = p.M[0][i]
        row = p.row(i)
        if vec_is_zero(row.a):
            # relu of a constant pre-activation, folded exactly
            if row.b > 0:
                constant += v * row.b
        elif v != 0:
            survivors.append((v, row))

    # group surviving rows into positive-proportionality classes;
    # the representative is the earliest member
    reps: List[AffRow] = []
    totals: List[Fraction] = []
    for v, row in survivors:
        for idx, rep in enumerate(reps):
            mu = pos_ratio(rep.vec, row.vec)
            if mu is not None:
                totals[idx] += v * mu
                break
        else:
            reps.append(row)
            totals.append(v)

    plus = sorted((rep.scale(s) for rep, s in zip(reps, totals) if s > 0), key=lambda r: r.vec, reverse=True)
    minus = sorted((rep.scale(-s) for rep, s in zip(reps, totals) if s < 0), key=lambda r: r.vec, reverse=True)
    zeros = p.n - len(plus) - len(minus)
    u = (1,) * len(plus) + (-1,) * len(minus) + (0,) * zeros
    rows = tuple(plus) + tuple(minus) + (zero_row(p.m),) * zeros
    return MinimalForm(p.m, u, rows, constant)


def zero_factor_rank(p: Parameter) -> int:
    """Number of zero entries in the minimal form's sign vector."""
    return minimal_form(p).rank()


def zero_factor_reduce(p: Parameter) -> Union[Parameter, ZeroReduction]:
    """Minimal form with its zero rows deleted; same realized function.

    When everything cancels, the sentinel carrying the surviving constant is
    returned instead of a width-0 parameter.
    """
    mf = minimal_form(p)
    keep = [i for i, x in enumerate(mf.u) if x != 0]
    if not keep:
        return ZeroReduction(mf.constant)
    return Parameter(
        Architecture(mf.m, len(keep), 1),
        (tuple(Fraction(mf.u[i]) for i in keep),),
        tuple(mf.rows[i].a for i in keep),
        tuple(mf.rows[i].b for i in keep),
        (mf.constant,),
    )


def minimal_form_to_json(mf: MinimalForm) -> dict:
    return {
        "u": list(mf.u),
        "rows": [{"a": [format_rational(x) for x in r.a], "b": format_rational(r.b)} for r in mf.rows],
        "C": format_rational(mf.constant),
    }
