"""Exact evaluation of realized functions and independent equality oracles.

Everything here works directly from the parameter data, never through the
canonicalization machinery, so these functions can serve as independent
cross-checks for it.  In one input variable the realized function is
continuous piecewise-linear with kinks confined to the pre-activation roots
``-b_i / a_i``; comparing two such functions at every candidate kink, at one
interior point of each bounded gap, and at two probes past each extreme
(pinning the affine tails) decides equality outright.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionError
from .param import Parameter
from .rational import Vector, ZERO, vec_dot


def evaluate(p: Parameter, x: Sequence) -> Vector:
    """The realized function at a point, exactly."""
    if len(x) != p.m:
        raise DimensionError(f"point has dimension {len(x)}, parameter expects {p.m}")
    xs = tuple(Fraction(v) for v in x)
    acts = [max(ZERO, vec_dot(p.A[i], xs) + p.b[i]) for i in range(p.n)]
    return tuple(
        sum((p.M[t][i] * acts[i] for i in range(p.n)), ZERO) + p.c[t] for t in range(p.k)
    )


def activation_pattern(p: Parameter, x: Sequence) -> str:
    """Signs of the n pre-activations at a point, as a '+0-' string."""
    if len(x) != p.m:
        raise DimensionError(f"point has dimension {len(x)}, parameter expects {p.m}")
    xs = tuple(Fraction(v) for v in x)
    signs = []
    for i in range(p.n):
        pre = vec_dot(p.A[i], xs) + p.b[i]
        signs.append("+" if pre > 0 else "-" if pre < 0 else "0")
    return "".join(signs)


def _breakpoints(p: Parameter) -> List[Fraction]:
    return [-p.b[i] / p.A[i][0] for i in range(p.n) if p.A[i][0] != 0]


def exact_equal_1d(p1: Parameter, p2: Parameter) -> bool:
    """Complete equality decision for m = 1, k = 1 parameters.

    Widths may differ.  This is a full decision procedure, not a sampler.
    """
    for p in (p1, p2):
        if p.m != 1 or p.k != 1:
            raise DimensionError("the 1-D oracle requires m = 1 and k = 1")
    points = sorted(set(_breakpoints(p1) + _breakpoints(p2)))
    if not points:
        probes = [Fraction(-1), ZERO, Fraction(1)]
    else:
        probes = list(points)
        probes.extend((points[t] + points[t + 1]) / 2 for t in range(len(points) - 1))
        probes.extend((points[0] - 2, points[0] - 1, points[-1] + 1, points[-1] + 2))
    return all(evaluate(p1, (t,)) == evaluate(p2, (t,)) for t in probes)


def equal_on_samples(
    p1: Parameter, p2: Parameter, count: int, seed: int
) -> Tuple[bool, Optional[Vector]]:
    """Exact comparison on seeded integer sample points.

    Returns ``(True, None)`` when no counterexample is found, or
    ``(False, point)`` with the first point where the values differ; a False
    answer is conclusive, a True answer is not.
    """
    if p1.m != p2.m:
        raise DimensionError(f"input dimensions differ: {p1.m} vs {p2.m}")
    if p1.k != p2.k:
        raise DimensionError(f"output dimensions differ: {p1.k} vs {p2.k}")
    rng = random.Random(seed)
    for _ in range(count):
        x = tuple(Fraction(rng.randint(-1000, 1000)) for _ in range(p1.m))
        if evaluate(p1, x) != evaluate(p2, x):
            return False, x
    return True, None
