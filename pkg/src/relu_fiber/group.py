"""The hidden-layer symmetry group: permutations with positive scalings.

A group element is a permutation of the ``n`` hidden neurons together with a
positive rational scale attached to each *destination* slot.  Acting on a
parameter, slot ``i`` of the result receives neuron ``perm^-1(i)`` with its
incoming row (and bias) multiplied by ``scale[i]`` and its outgoing weights
divided by ``scale[i]``:

    result.neuron(i) = (out[src] / d_i,  d_i * a[src],  d_i * b[src]),
    src = perm^-1(i),

and the constant term is untouched.  ReLU's positive homogeneity makes the
realized function invariant under this action; that invariance is the
convention that pins down every orientation choice below, and each stabilizer
generator is re-verified through :func:`act` before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionError, InputError
from .param import Parameter
from .rational import AffRow, ONE, format_rational, parse_rational, pos_ratio, vec_is_zero


@dataclass(frozen=True)
class GroupElement:
    perm: Tuple[int, ...]  # perm[j] = destination slot of neuron j (0-based)
    scale: Tuple[Fraction, ...]  # scale[i] = multiplier on the row landing in slot i

    @property
    def n(self) -> int:
        return len(self.perm)


def group_element(perm: Sequence[int], scale: Sequence) -> GroupElement:
    """Build a validated element from a 0-based permutation and scales."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise InputError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    scales = tuple(parse_rational(s) for s in scale)
    if len(scales) != n:
        raise DimensionError(f"need {n} scales, got {len(scales)}")
    if any(s <= 0 for s in scales):
        raise InputError("all scales must be positive")
    return GroupElement(tuple(perm), scales)


def identity_element(n: int) -> GroupElement:
    return GroupElement(tuple(range(n)), (ONE,) * n)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """The element acting as g1 after g2: act(compose(g1, g2), p) == act(g1, act(g2, p))."""
    if g1.n != g2.n:
        raise DimensionError(f"group elements act on different widths: {g1.n} vs {g2.n}")
    perm = tuple(g1.perm[g2.perm[j]] for j in range(g2.n))
    inv1 = _inverse_perm(g1.perm)
    scale = tuple(g1.scale[i] * g2.scale[inv1[i]] for i in range(g1.n))
    return GroupElement(perm, scale)


def inverse(g: GroupElement) -> GroupElement:
    perm = _inverse_perm(g.perm)
    scale = tuple(ONE / g.scale[g.perm[i]] for i in range(g.n))
    return GroupElement(perm, scale)


def _inverse_perm(perm: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(perm)
    for j, i in enumerate(perm):
        inv[i] = j
    return tuple(inv)


def act(g: GroupElement, p: Parameter) -> Parameter:
    """Apply a group element; the realized function is unchanged."""
    if g.n != p.n:
        raise DimensionError(f"element acts on width {g.n}, parameter has width {p.n}")
    src = _inverse_perm(g.perm)
    A = tuple(tuple(g.scale[i] * x for x in p.A[src[i]]) for i in range(p.n))
    b = tuple(g.scale[i] * p.b[src[i]] for i in range(p.n))
    M = tuple(tuple(p.M[t][src[i]] / g.scale[i] for i in range(p.n)) for t in range(p.k))
    return Parameter(p.arch, M, A, b, p.c)


def pair_element(n: int, i: int, j: int, lam: Fraction) -> GroupElement:
    """Transposition of i and j with the inverse-pair scaling (1/lam, lam).

    This is the element that fixes a parameter whose rows satisfy
    ``row_j == lam * row_i`` with out-columns ``col_i == lam * col_j``.
    """
    perm = list(range(n))
    perm[i], perm[j] = j, i
    scale = [ONE] * n
    scale[i] = ONE / lam
    scale[j] = lam
    return GroupElement(tuple(perm), tuple(scale))


# -- stabilizers ---------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerDescription:
    """Generators of a stabilizer: scaled transpositions plus a dead block.

    ``pairs`` holds triples ``(i, j, lam)`` with ``i < j``; each converts via
    :func:`pair_element` into an element fixing the stabilized object.
    ``zero_block`` lists the indices whose data is entirely zero; every
    permutation and scaling confined to those indices fixes the object.
    """

    n: int
    pairs: Tuple[Tuple[int, int, Fraction], ...]
    zero_block: Tuple[int, ...]

    def is_trivial(self) -> bool:
        return not self.pairs and not self.zero_block

    def elements(self) -> Tuple[GroupElement, ...]:
        return tuple(pair_element(self.n, i, j, lam) for i, j, lam in self.pairs)


def stabilizer(p: Parameter) -> StabilizerDescription:
    """All scaled-transposition generators fixing the parameter exactly.

    A pair (i, j) contributes iff rows satisfy ``row_j == lam * row_i`` while
    the out-columns co-transform as ``col_i == lam * col_j`` for the same
    positive ``lam``; when both rows are zero the columns alone force the
    ratio.  Indices whose entire neuron triple is zero form the dead block
    and are excluded from the pair search.
    """
    zero_block = tuple(i for i in range(p.n) if p.neuron(i).is_zero())
    dead = set(zero_block)
    pairs: List[Tuple[int, int, Fraction]] = []
    for i in range(p.n):
        if i in dead:
            continue
        for j in range(i + 1, p.n):
            if j in dead:
                continue
            lam = _pair_ratio(p, i, j)
            if lam is None:
                continue
            g = pair_element(p.n, i, j, lam)
            if act(g, p) != p:  # convention drift guard; must never fire
                raise RuntimeError(f"stabilizer generator failed verification: pair ({i}, {j})")
            pairs.append((i, j, lam))
    return StabilizerDescription(p.n, tuple(pairs), zero_block)


def _pair_ratio(p: Parameter, i: int, j: int) -> Optional[Fraction]:
    ri, rj = p.row(i), p.row(j)
    ci, cj = p.out_column(i), p.out_column(j)
    if not ri.is_zero() or not rj.is_zero():
        lam = pos_ratio(ri.vec, rj.vec)
        if lam is None:
            return None
        return lam if ci == tuple(lam * x for x in cj) else None
    # both rows zero, at least one column nonzero: the columns force lam
    return pos_ratio(cj, ci)


def stabilizer_rows(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> StabilizerDescription:
    """Stabilizer of the incoming rows alone, ignoring outgoing weights."""
    n = len(A)
    if len(b) != n:
        raise DimensionError(f"A has {n} rows but b has {len(b)} entries")
    rows = tuple(AffRow(tuple(a), bi) for a, bi in zip(A, b))
    zero_block = tuple(i for i in range(n) if rows[i].is_zero())
    dead = set(zero_block)
    pairs: List[Tuple[int, int, Fraction]] = []
    for i in range(n):
        if i in dead:
            continue
        for j in range(i + 1, n):
            if j in dead:
                continue
            lam = pos_ratio(rows[i].vec, rows[j].vec)
            if lam is not None:
                pairs.append((i, j, lam))
    return StabilizerDescription(n, tuple(pairs), zero_block)


# -- orbit membership ----------------------------------------------------------


def same_orbit(p1: Parameter, p2: Parameter) -> Optional[GroupElement]:
    """A group element g with act(g, p1) == p2, or None if none exists.

    Each neuron of ``p1`` can land only on a slot whose row is a positive
    multiple of its own (the multiple then forced, and the out-column must
    scale inversely); dead neurons can land only on dead slots.  The search
    backtracks over slot assignments in index order, so ties inside a class
    of mutually proportional neurons resolve deterministically and the
    first-found witness is returned.
    """
    if p1.arch != p2.arch:
        raise DimensionError(f"architectures differ: {p1.arch} vs {p2.arch}")
    n = p1.n

    def fit(i: int, j: int) -> Optional[Fraction]:
        r1, r2 = p1.row(i), p2.row(j)
        o1, o2 = p1.out_column(i), p2.out_column(j)
        if not r1.is_zero():
            d = pos_ratio(r1.vec, r2.vec)
            if d is None:
                return None
            return d if o1 == tuple(d * y for y in o2) else None
        if not r2.is_zero():
            return None
        # both rows zero: the out-columns pin the scale (or leave it free)
        if vec_is_zero(o1):
            return ONE if vec_is_zero(o2) else None
        return pos_ratio(o2, o1)

    assign: List[Optional[Tuple[int, Fraction]]] = [None] * n
    used = [False] * n

    def search(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            d = fit(i, j)
            if d is None:
                continue
            assign[i] = (j, d)
            used[j] = True
            if search(i + 1):
                return True
            used[j] = False
        assign[i] = None
        return False

    if not search(0):
        return None
    perm = tuple(slot for slot, _ in assign)  # type: ignore[misc]
    scale = [ONE] * n
    for slot, d in assign:  # type: ignore[misc]
        scale[slot] = d
    g = GroupElement(perm, tuple(scale))
    if act(g, p1) != p2:  # must never fire: fit() checked every coordinate
        raise RuntimeError("orbit witness failed verification")
    return g


# -- JSON ----------------------------------------------------------------------


def group_element_to_json(g: GroupElement) -> dict:
    return {
        "perm": [i + 1 for i in g.perm],
        "scale": [format_rational(s) for s in g.scale],
    }


def group_element_from_json(obj) -> GroupElement:
    if not isinstance(obj, dict) or set(obj) != {"perm", "scale"}:
        raise InputError('group element must be {"perm": [...], "scale": [...]}')
    perm = [i - 1 for i in obj["perm"]]
    return group_element(perm, obj["scale"])


def stabilizer_to_json(s: StabilizerDescription) -> dict:
    return {
        "pairs": [[i + 1, j + 1, format_rational(lam)] for i, j, lam in s.pairs],
        "zero_block": [i + 1 for i in s.zero_block],
        "group": f"⟨S⟩ × H_{len(s.zero_block)}",
    }
