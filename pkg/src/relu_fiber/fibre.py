"""Genericity certificates and the fibre verdict.

A single-output parameter is *certified* when (C1) every outgoing weight is
nonzero, (C2) the affine rows are pairwise linearly independent over the
reals, and (C3) no signed subset of the weighted rows cancels: for every
sign vector beta in {0, +1, -1}^n (beta nonzero, enumerated once per
{beta, -beta} pair), ``sum(beta_i * v_i * a_i) != 0``.  Certified parameters
have a fibre that is exactly one orbit of the permutation/scaling group,
acted on freely: every other parameter realizing the same function is
reachable by the group action alone.  Multi-output parameters certify
through their single-output slices.

The verdict cascade orders cheap certain answers first.  A NotIsomorphic
verdict always ships a concrete witness: a parameter that provably realizes
the same function yet lies outside the orbit, machine-checked on both counts
before it is emitted.  When no witness survives the check, the verdict is an
honest Unknown carrying the violated certificate condition; it is never
upgraded heuristically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from .equivalence import FLIP_WIDTH_CAP, equivalent, flip, flip_subsets, absorb_zero_row, collapse_pair
from .errors import DimensionError, WidthCapError
from .group import GroupElement, act, same_orbit, stabilizer_rows
from .param import Parameter, parameter_to_json, project, replace_row
from .rational import AffRow, ONE, ZERO, Vector, lin_dep, vec_add, vec_is_zero, vec_sub, zero_row

BETA_WIDTH_CAP = 12

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Certified:
    pass


@dataclass(frozen=True)
class Violation:
    """A failed certificate condition with its witnessing data.

    ``output`` is the 0-based output whose slice failed; ``index`` witnesses
    C1, ``pair`` witnesses C2, ``beta`` witnesses C3.
    """

    condition: str  # "C1" | "C2" | "C3"
    output: int = 0
    index: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None
    beta: Optional[Tuple[int, ...]] = None


GenericityResult = Union[Certified, Violation]


@dataclass(frozen=True)
class FibreVerdict:
    state: str
    witness: Optional[Parameter] = None
    violation: Optional[Violation] = None


def sign_vectors(n: int) -> Iterator[Tuple[int, ...]]:
    """All nonzero sign vectors, one per {beta, -beta} pair.

    Canonical order: digit order (0, 1, -1) per coordinate, skipping vectors
    whose first nonzero entry is -1.
    """
    beta = [0] * n

    def rec(i: int, started: bool) -> Iterator[Tuple[int, ...]]:
        if i == n:
            if started:
                yield tuple(beta)
            return
        for digit in (0, 1, -1) if started else (0, 1):
            beta[i] = digit
            yield from rec(i + 1, started or digit != 0)
            beta[i] = 0

    yield from rec(0, False)


def _beta_violation(weighted: List[Vector], dim: int) -> Optional[Tuple[int, ...]]:
    """First sign vector (canonical order) whose weighted sum vanishes."""
    n = len(weighted)
    zero = (ZERO,) * dim
    beta = [0] * n

    def rec(i: int, acc: Vector, started: bool) -> Optional[Tuple[int, ...]]:
        if i == n:
            return tuple(beta) if started and acc == zero else None
        for digit in (0, 1, -1) if started else (0, 1):
            if digit == 0:
                nxt = acc
            elif digit == 1:
                nxt = vec_add(acc, weighted[i])
            else:
                nxt = vec_sub(acc, weighted[i])
            beta[i] = digit
            hit = rec(i + 1, nxt, started or digit != 0)
            if hit is not None:
                return hit
            beta[i] = 0
        return None

    return rec(0, zero, False)


def genericity_certificate_k1(p: Parameter, width_cap: int = BETA_WIDTH_CAP) -> GenericityResult:
    """Check C1-C3 for a single-output parameter; cheap checks first.

    The sign-vector sweep is exponential, so widths above ``width_cap`` are
    refused rather than silently truncated.  Note C3 with a singleton beta
    already forces every linear part to be nonzero.
    """
    if p.k != 1:
        raise DimensionError(f"certificate requires k=1, got k={p.k}")
    if p.n > width_cap:
        raise WidthCapError(f"sign-vector sweep over n={p.n} exceeds width cap {width_cap}")
    v = p.M[0]
    for i in range(p.n):
        if v[i] == 0:
            return Violation("C1", index=i)
    rows = p.rows()
    for i in range(p.n):
        for j in range(i + 1, p.n):
            # dependence with any sign, zero rows included
            if lin_dep(rows[i], rows[j]):
                return Violation("C2", pair=(i, j))
    weighted = [tuple(v[i] * x for x in p.A[i]) for i in range(p.n)]
    beta = _beta_violation(weighted, p.m)
    if beta is not None:
        return Violation("C3", beta=beta)
    return Certified()


def genericity_certificate(p: Parameter, width_cap: int = BETA_WIDTH_CAP) -> GenericityResult:
    """Certify every output slice; the first failing slice is reported."""
    for t in range(p.k):
        result = genericity_certificate_k1(project(p, t), width_cap)
        if isinstance(result, Violation):
            return Violation(result.condition, t, result.index, result.pair, result.beta)
    return Certified()


def verdict(
    p: Parameter,
    width_cap: int = BETA_WIDTH_CAP,
    flip_cap: int = FLIP_WIDTH_CAP,
) -> FibreVerdict:
    """Decide whether the fibre is exactly one freely-acted orbit.

    Cascade: a certificate means Isomorphic outright.  Otherwise witness
    candidates are tried in order (folds of proportional rows, retirements
    of degenerate neurons, row replacements behind dead outgoing weights,
    then sign flips of cancelling subsets), and the first candidate that
    both realizes the same function and fails orbit membership is emitted
    as a NotIsomorphic witness.  If every candidate stays inside the orbit,
    the verdict is Unknown with the violated condition attached.
    """
    result = genericity_certificate(p, width_cap)
    if isinstance(result, Certified):
        return FibreVerdict(ISOMORPHIC)
    for w in _witness_candidates(p, flip_cap):
        ok, _ = equivalent(p, w)
        if ok and same_orbit(p, w) is None:
            return FibreVerdict(NOT_ISOMORPHIC, witness=w)
    return FibreVerdict(UNKNOWN, violation=result)


def _witness_candidates(p: Parameter, flip_cap: int) -> Iterator[Parameter]:
    rows_stab = stabilizer_rows(p.A, p.b)
    for i in rows_stab.zero_block:
        if not vec_is_zero(p.out_column(i)):
            # constant neuron: retire it into c
            yield absorb_zero_row(p, i)
        else:
            # fully dead neuron: any row realizes the same function
            yield replace_row(p, i, AffRow((ONE,) + (ZERO,) * (p.m - 1), ZERO))
    for i, j, _lam in rows_stab.pairs:
        if not vec_is_zero(p.out_column(j)):
            yield collapse_pair(p, i, j)
        if not vec_is_zero(p.out_column(i)):
            yield collapse_pair(p, j, i)
    for i in range(p.n):
        if vec_is_zero(p.out_column(i)):
            if not p.row(i).is_zero():
                # silent neuron: blank its row
                yield replace_row(p, i, zero_row(p.m))
        elif vec_is_zero(p.A[i]):
            yield absorb_zero_row(p, i)
    for subset in flip_subsets(p, flip_cap):
        yield flip(p, subset)


# -- deterministic orbit sampling ------------------------------------------------

SCALE_GRID: Tuple[Fraction, ...] = tuple(
    sorted({Fraction(num, den) for num in range(1, 9) for den in range(1, 9)})
)


def random_element(rng: random.Random, n: int) -> GroupElement:
    """A pseudo-random group element with scales from the fixed 1/8..8 grid."""
    perm = list(range(n))
    rng.shuffle(perm)
    scale = tuple(rng.choice(SCALE_GRID) for _ in range(n))
    return GroupElement(tuple(perm), scale)


def orbit_sample(p: Parameter, count: int, seed: int) -> List[Parameter]:
    """Deterministic orbit members of ``p``; same seed, same list."""
    rng = random.Random(seed)
    return [act(random_element(rng, p.n), p) for _ in range(count)]


# -- JSON ------------------------------------------------------------------------


def violation_to_json(v: Violation) -> dict:
    obj: dict = {"condition": v.condition, "output": v.output + 1}
    if v.index is not None:
        obj["index"] = v.index + 1
    if v.pair is not None:
        obj["pair"] = [v.pair[0] + 1, v.pair[1] + 1]
    if v.beta is not None:
        obj["beta"] = list(v.beta)
    return obj


def genericity_to_json(result: GenericityResult) -> dict:
    if isinstance(result, Certified):
        return {"certified": True}
    return {"certified": False, "violation": violation_to_json(result)}


def verdict_to_json(v: FibreVerdict) -> dict:
    obj: dict = {"state": v.state}
    if v.witness is not None:
        obj["witness"] = parameter_to_json(v.witness)
    if v.violation is not None:
        obj["violation"] = violation_to_json(v.violation)
    return obj
