"""Shared fixtures: worked examples and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from relu_fiber import act, collapse_pair, flip, make_parameter
from relu_fiber.fibre import SCALE_GRID, random_element

# the worked pair: same realized function, different orbits
F1 = make_parameter(
    2, 3, 1,
    [["1", "1", "1"]],
    [["1", "1"], ["-1", "0"], ["0", "-1"]],
    ["-2", "-1", "-1"],
    ["-6"],
)
F2 = make_parameter(
    2, 3, 1,
    [["1", "1", "1"]],
    [["-1", "-1"], ["1", "0"], ["0", "1"]],
    ["2", "1", "1"],
    ["-10"],
)

F1_JSON = (
    '{"m":2,"n":3,"k":1,"M":[["1","1","1"]],'
    '"A":[["1","1"],["-1","0"],["0","-1"]],"b":["-2","-1","-1"],"c":["-6"]}'
)
F2_JSON = (
    '{"m":2,"n":3,"k":1,"M":[["1","1","1"]],'
    '"A":[["-1","-1"],["1","0"],["0","1"]],"b":["2","1","1"],"c":["-10"]}'
)

# minimal-form example table (constants chosen where the table leaves them free)
T1 = make_parameter(
    3, 3, 1,
    [["0", "0", "0"]],
    [["1", "2", "3"], ["4", "5", "6"], ["7", "8", "9"]],
    ["1", "2", "3"],
    ["5"],
)
T2 = make_parameter(
    3, 3, 1,
    [["2", "3", "-1"]],
    [["4", "4", "4"], ["1", "1", "1"], ["5", "2", "1"]],
    ["0", "0", "0"],
    ["5"],
)
T3 = make_parameter(
    3, 3, 1,
    [["1", "1", "-1"]],
    [["2", "4", "0"], ["1", "1", "3"], ["0", "0", "0"]],
    ["7", "2", "3"],
    ["7"],
)
T4 = make_parameter(
    3, 3, 1,
    [["1", "1", "-1"]],
    [["0", "36", "0"], ["1", "7", "3"], ["10", "5", "15"]],
    ["63", "2", "45"],
    ["8"],
)


def rand_parameter(rng: random.Random, m: int, n: int, k: int, lo: int = -20, hi: int = 20, nonzero: bool = False):
    """Random integer-entry parameter; optionally excluding zero entries."""

    def entry():
        while True:
            v = rng.randint(lo, hi)
            if v != 0 or not nonzero:
                return v

    return make_parameter(
        m, n, k,
        [[entry() for _ in range(n)] for _ in range(k)],
        [[entry() for _ in range(m)] for _ in range(n)],
        [entry() for _ in range(n)],
        [entry() for _ in range(k)],
    )


def structured_parameter(rng: random.Random, m: int, n: int, k: int):
    """Random parameter with planted degeneracies for stabilizer tests.

    With some probability: a pair of neurons made stabilizer-compatible
    (rows scaled one way, columns the other), a pair with only the rows
    proportional, a fully zero neuron, or a zero row.
    """
    from relu_fiber.param import replace_out_column, replace_row
    from relu_fiber.rational import ZERO, vec_scale, zero_row

    p = rand_parameter(rng, m, n, k, lo=-9, hi=9)
    moves = rng.randint(0, max(1, n - 1))
    for _ in range(moves):
        kind = rng.randrange(4)
        i, j = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        lam = rng.choice(SCALE_GRID)
        if kind == 0 and i != j:
            # full stabilizer pair: row_j = lam * row_i, col_i = lam * col_j
            p = replace_row(p, j, p.row(i).scale(lam))
            p = replace_out_column(p, i, vec_scale(lam, p.out_column(j)))
        elif kind == 1 and i != j:
            # rows proportional only; columns left alone
            p = replace_row(p, j, p.row(i).scale(lam))
        elif kind == 2:
            p = replace_row(p, i, zero_row(m))
            p = replace_out_column(p, i, (ZERO,) * k)
        else:
            p = replace_row(p, i, zero_row(m))
    return p


def equivalent_pair_1d(rng: random.Random, n_max: int = 5):
    """A constructed pair of m=1, k=1 parameters realizing one function.

    Mechanisms: an orbit move, a fold of proportional rows, a retired
    zero-linear-part neuron, or a sign flip of a subset with cancelling
    weighted slopes.
    """
    kind = rng.randrange(4)
    n = rng.randint(2, n_max)
    if kind == 0:
        p = rand_parameter(rng, 1, n, 1, lo=-9, hi=9)
        return p, act(random_element(rng, n), p)
    if kind == 1:
        p = rand_parameter(rng, 1, n, 1, lo=-9, hi=9)
        from relu_fiber.param import replace_row

        lam = rng.choice(SCALE_GRID)
        p = replace_row(p, n - 1, p.row(0).scale(lam))
        return p, collapse_pair(p, 0, n - 1)
    if kind == 2:
        from relu_fiber import absorb_zero_row
        from relu_fiber.param import replace_row
        from relu_fiber.rational import AffRow, ZERO

        p = rand_parameter(rng, 1, n, 1, lo=-9, hi=9)
        p = replace_row(p, 0, AffRow((ZERO,), Fraction(rng.randint(-5, 5))))
        return p, absorb_zero_row(p, 0)
    # planted flip subset: the last selected slope cancels the others
    from relu_fiber.param import replace_row
    from relu_fiber.rational import AffRow

    size = rng.randint(1, n)
    subset = sorted(rng.sample(range(n), size))
    p = rand_parameter(rng, 1, n, 1, lo=-9, hi=9, nonzero=True)
    v = p.M[0]
    head = sum(v[i] * p.A[i][0] for i in subset[:-1])
    last = subset[-1]
    a_last = -head / v[last]  # forces sum(v_i * a_i) over the subset to vanish
    p = replace_row(p, last, AffRow((a_last,), p.b[last]))
    return p, flip(p, subset)
