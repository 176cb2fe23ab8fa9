"""Deciding functional equality and constructing symmetry witnesses.

For single-output parameters the decision reduces the stacked difference
``p1 (-) p2`` to minimal form.  The realized functions are equal iff either
the reduction vanishes entirely (sign vector zero, constant zero), or the
surviving rows split into (r, -r) pairs whose positive halves have linear
parts summing to zero and biases summing to the negated constant: that last
pattern is exactly how ``relu(x) - relu(-x) == x`` lets a reduced sum of
kinks be affine, and it is the only way.

The certificate returned is a proof object: re-checking it against the
reduced difference is mechanical, and the test suite does so.

The witness constructors (`flip`, `collapse_pair`, `absorb_zero_row`) each
produce a parameter realizing the same function by a different mechanism
than the group action; every output is re-certified through the decision
procedure before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import DimensionError, IndexRangeError, PreconditionError, WidthCapError
from .canon import minimal_form
from .param import Parameter, ominus, project, replace_out_column
from .rational import (
    Vector,
    ZERO,
    format_rational,
    pos_ratio,
    vec_add,
    vec_is_zero,
    vec_neg,
    vec_scale,
)

FLIP_WIDTH_CAP = 22


@dataclass(frozen=True)
class ZeroCertificate:
    """The stacked difference reduces to nothing: same rewrite class."""

    kind = "zero"


@dataclass(frozen=True)
class MirroredCertificate:
    """The reduced difference is a mirrored block summing to an exact zero.

    ``pairs`` are (plus-row, minus-row) index pairs into the reduced
    difference's minimal form; ``sum_a`` and ``sum_b_plus_c`` are the two
    vanishing sums over the plus half.
    """

    pairs: Tuple[Tuple[int, int], ...]
    sum_a: Vector
    sum_b_plus_c: Fraction

    kind = "mirrored"


Certificate = Union[ZeroCertificate, MirroredCertificate]


def equivalent_k1(p1: Parameter, p2: Parameter) -> Optional[Certificate]:
    """Certificate that two single-output parameters realize one function.

    Widths may differ.  Returns None when the functions differ.
    """
    if p1.k != 1 or p2.k != 1:
        raise DimensionError("equivalence certificate requires single-output parameters")
    if p1.m != p2.m:
        raise DimensionError(f"input dimensions differ: {p1.m} vs {p2.m}")
    diff = minimal_form(ominus(p1, p2))
    if all(x == 0 for x in diff.u):
        return ZeroCertificate() if diff.constant == 0 else None
    plus = [i for i, x in enumerate(diff.u) if x == 1]
    minus = [i for i, x in enumerate(diff.u) if x == -1]
    if len(plus) != len(minus):
        return None
    # each plus row has at most one candidate mirror: minus rows are
    # pairwise non-proportional after reduction
    unmatched = set(minus)
    pairs: List[Tuple[int, int]] = []
    for i in plus:
        mirror = diff.rows[i].neg()
        j = next((j for j in minus if j in unmatched and diff.rows[j] == mirror), None)
        if j is None:
            return None
        unmatched.discard(j)
        pairs.append((i, j))
    sum_a = (ZERO,) * diff.m
    sum_b = ZERO
    for i in plus:
        sum_a = vec_add(sum_a, diff.rows[i].a)
        sum_b += diff.rows[i].b
    total = sum_b + diff.constant
    if not vec_is_zero(sum_a) or total != 0:
        return None
    return MirroredCertificate(tuple(pairs), sum_a, total)


def equivalent(p1: Parameter, p2: Parameter) -> Tuple[bool, Tuple[Optional[Certificate], ...]]:
    """Output-wise equality decision; true iff every output certifies."""
    if p1.m != p2.m:
        raise DimensionError(f"input dimensions differ: {p1.m} vs {p2.m}")
    if p1.k != p2.k:
        raise DimensionError(f"output dimensions differ: {p1.k} vs {p2.k}")
    certs = tuple(equivalent_k1(project(p1, t), project(p2, t)) for t in range(p1.k))
    return all(c is not None for c in certs), certs


def _certify(before: Parameter, after: Parameter, what: str) -> Parameter:
    ok, _ = equivalent(before, after)
    if not ok:  # must never fire; guards the orientation conventions
        raise RuntimeError(f"{what} produced a non-equivalent parameter")
    return after


def flip(p: Parameter, subset: Sequence[int]) -> Parameter:
    """Negate the rows of a subset whose weighted linear parts cancel.

    Requires ``sum(M[t][i] * a_i for i in subset) == 0`` for every output t;
    then each selected row flips sign and each constant absorbs the matching
    bias sum, leaving the realized function unchanged.
    """
    sel = sorted(set(subset))
    if not sel:
        raise PreconditionError("flip subset must be nonempty")
    if sel[0] < 0 or sel[-1] >= p.n:
        raise IndexRangeError(f"flip subset out of range for n={p.n}")
    for t in range(p.k):
        residual = (ZERO,) * p.m
        for i in sel:
            residual = vec_add(residual, vec_scale(p.M[t][i], p.A[i]))
        if not vec_is_zero(residual):
            raise PreconditionError(
                f"weighted rows do not cancel on output {t}: "
                f"residual ({', '.join(format_rational(x) for x in residual)})"
            )
    chosen = set(sel)
    A = tuple(vec_neg(p.A[i]) if i in chosen else p.A[i] for i in range(p.n))
    b = tuple(-p.b[i] if i in chosen else p.b[i] for i in range(p.n))
    c = tuple(p.c[t] + sum((p.M[t][i] * p.b[i] for i in sel), ZERO) for t in range(p.k))
    return _certify(p, Parameter(p.arch, p.M, A, b, c), "flip")


def flip_subsets(p: Parameter, width_cap: int = FLIP_WIDTH_CAP) -> List[Tuple[int, ...]]:
    """All nonempty subsets satisfying flip's cancellation, shortlex-sorted.

    Meet-in-the-middle over the joint weighted-row vectors, so the cost is
    2^(n/2) rather than 2^n; still refuses above the width cap.
    """
    if p.n > width_cap:
        raise WidthCapError(f"subset sweep over n={p.n} exceeds width cap {width_cap}")
    # neuron i's contribution, flattened across all outputs
    w = [tuple(p.M[t][i] * p.A[i][s] for t in range(p.k) for s in range(p.m)) for i in range(p.n)]
    dim = p.k * p.m
    zero = (ZERO,) * dim

    half = p.n // 2
    right = list(range(half, p.n))
    right_sums: Dict[Vector, List[Tuple[int, ...]]] = {}
    for mask in range(1 << len(right)):
        total = zero
        members = []
        for pos, i in enumerate(right):
            if mask >> pos & 1:
                total = vec_add(total, w[i])
                members.append(i)
        right_sums.setdefault(total, []).append(tuple(members))

    found: List[Tuple[int, ...]] = []
    for mask in range(1 << half):
        total = zero
        members = []
        for i in range(half):
            if mask >> i & 1:
                total = vec_add(total, w[i])
                members.append(i)
        need = vec_neg(total)
        for tail in right_sums.get(need, ()):
            if members or tail:
                found.append(tuple(members) + tail)
    found.sort(key=lambda s: (len(s), s))
    return found


def collapse_pair(p: Parameter, i: int, j: int) -> Parameter:
    """Fold neuron j into neuron i when row_j is a positive multiple of row_i.

    With ``row_j == mu * row_i``, positive homogeneity moves j's outgoing
    weights onto i scaled by ``mu`` and zeroes column j; the coefficient is
    always derived from the rows themselves and the result re-certified, so
    no orientation convention can drift.
    """
    if i == j:
        raise PreconditionError("collapse requires two distinct neurons")
    for idx in (i, j):
        if not 0 <= idx < p.n:
            raise IndexRangeError(f"neuron index {idx} out of range for n={p.n}")
    mu = pos_ratio(p.row(i).vec, p.row(j).vec)
    if mu is None:
        raise PreconditionError(f"rows {i} and {j} are not positively proportional")
    merged = tuple(p.M[t][i] + mu * p.M[t][j] for t in range(p.k))
    out = replace_out_column(replace_out_column(p, i, merged), j, (ZERO,) * p.k)
    return _certify(p, out, "collapse_pair")


def absorb_zero_row(p: Parameter, i: int) -> Parameter:
    """Retire a neuron with zero linear part into the constants.

    The neuron contributes the constant ``out * relu(b_i)``; that moves into
    c, and the neuron's column and bias are zeroed.
    """
    if not 0 <= i < p.n:
        raise IndexRangeError(f"neuron index {i} out of range for n={p.n}")
    if not vec_is_zero(p.A[i]):
        raise PreconditionError(f"neuron {i} has a nonzero linear part")
    gain = max(ZERO, p.b[i])
    c = tuple(p.c[t] + p.M[t][i] * gain for t in range(p.k))
    out = Parameter(p.arch, p.M, p.A, p.b[:i] + (ZERO,) + p.b[i + 1 :], c)
    out = replace_out_column(out, i, (ZERO,) * p.k)
    return _certify(p, out, "absorb_zero_row")


def certificate_to_json(cert: Optional[Certificate]) -> Optional[dict]:
    if cert is None:
        return None
    if isinstance(cert, ZeroCertificate):
        return {"kind": "zero"}
    return {
        "kind": "mirrored",
        "pairs": [[i + 1, j + 1] for i, j in cert.pairs],
        "sum_a": [format_rational(x) for x in cert.sum_a],
        "sum_b_plus_C": format_rational(cert.sum_b_plus_c),
    }
