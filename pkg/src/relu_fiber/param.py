"""Parameter data model for one-hidden-layer ReLU networks.

A parameter of architecture ``(m, n, k)`` is the exact-rational data
``(M, A, b, c)`` realizing ``x -> M @ relu(A @ x + b) + c``: ``M`` is k-by-n,
``A`` is n-by-m, ``b`` has length n and ``c`` length k.  Column ``i`` of
``M``, row ``i`` of ``A`` and entry ``b_i`` together form hidden neuron
``i``; all of the symmetry machinery in this package works on those neuron
triples, so the :class:`Neuron` view is the unit the other modules consume.

Parameters are immutable values.  Every operation here is pure, and all
indices in the Python API are 0-based; the JSON wire format is 1-based where
it mentions indices at all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import (
    ArchitectureError,
    DimensionError,
    IndexRangeError,
    MalformedRationalError,
    SchemaError,
)
from .rational import (
    AffRow,
    Vector,
    format_rational,
    vec,
)


@dataclass(frozen=True)
class Architecture:
    m: int  # input dimension
    n: int  # hidden width
    k: int  # output dimension


@dataclass(frozen=True)
class Parameter:
    arch: Architecture
    M: Tuple[Vector, ...]  # k rows of length n
    A: Tuple[Vector, ...]  # n rows of length m
    b: Vector  # length n
    c: Vector  # length k

    @property
    def m(self) -> int:
        return self.arch.m

    @property
    def n(self) -> int:
        return self.arch.n

    @property
    def k(self) -> int:
        return self.arch.k

    def row(self, i: int) -> AffRow:
        return AffRow(self.A[i], self.b[i])

    def rows(self) -> Tuple[AffRow, ...]:
        return tuple(self.row(i) for i in range(self.n))

    def out_column(self, i: int) -> Vector:
        return tuple(self.M[t][i] for t in range(self.k))

    def neuron(self, i: int) -> "Neuron":
        return Neuron(self.out_column(i), self.row(i))

    def neurons(self) -> Tuple["Neuron", ...]:
        return tuple(self.neuron(i) for i in range(self.n))


@dataclass(frozen=True)
class Neuron:
    """Derived view of one hidden unit: outgoing weights and incoming row."""

    out: Vector
    row: AffRow

    def is_zero(self) -> bool:
        return self.row.is_zero() and all(x == 0 for x in self.out)


def make_parameter(m: int, n: int, k: int, M, A, b, c) -> Parameter:
    """Build a normalized Parameter, checking every dimension.

    Entries may be ints, ``p/q`` strings or Fractions.
    """
    for name, value in (("m", m), ("n", n), ("k", k)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ArchitectureError(f"architecture field {name} must be an integer >= 1, got {value!r}")
    M_t = _matrix(M, k, n, "M")
    A_t = _matrix(A, n, m, "A")
    b_t = _vector(b, n, "b")
    c_t = _vector(c, k, "c")
    return Parameter(Architecture(m, n, k), M_t, A_t, b_t, c_t)


def _matrix(rows, nrows: int, ncols: int, name: str) -> Tuple[Vector, ...]:
    if not isinstance(rows, (list, tuple)) or len(rows) != nrows:
        raise DimensionError(f"{name} must have {nrows} rows", path=f"$.{name}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != ncols:
            raise DimensionError(f"{name} row must have {ncols} entries", path=f"$.{name}[{i}]")
        try:
            out.append(vec(row))
        except MalformedRationalError as exc:
            raise MalformedRationalError(str(exc), path=f"$.{name}[{i}]") from exc
    return tuple(out)


def _vector(values, length: int, name: str) -> Vector:
    if not isinstance(values, (list, tuple)) or len(values) != length:
        raise DimensionError(f"{name} must have {length} entries", path=f"$.{name}")
    try:
        return vec(values)
    except MalformedRationalError as exc:
        raise MalformedRationalError(str(exc), path=f"$.{name}") from exc


# -- JSON wire format ---------------------------------------------------------

_FIELDS = ("m", "n", "k", "M", "A", "b", "c")


def validate_parameter(obj) -> Parameter:
    """Validate a decoded JSON object against the parameter schema."""
    if not isinstance(obj, dict):
        raise SchemaError("parameter must be a JSON object", path="$")
    for field in _FIELDS:
        if field not in obj:
            raise SchemaError("missing field", path=f"$.{field}")
    for field in obj:
        if field not in _FIELDS:
            raise SchemaError("unknown field", path=f"$.{field}")
    return make_parameter(obj["m"], obj["n"], obj["k"], obj["M"], obj["A"], obj["b"], obj["c"])


def parameter_to_json(p: Parameter) -> dict:
    return {
        "m": p.m,
        "n": p.n,
        "k": p.k,
        "M": [[format_rational(x) for x in row] for row in p.M],
        "A": [[format_rational(x) for x in row] for row in p.A],
        "b": [format_rational(x) for x in p.b],
        "c": [format_rational(x) for x in p.c],
    }


def parse_parameter(text: str) -> Parameter:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return validate_parameter(obj)


def serialize_parameter(p: Parameter, compact: bool = False) -> str:
    obj = parameter_to_json(p)
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)


# -- structural operations ----------------------------------------------------


def project(p: Parameter, t: int) -> Parameter:
    """Single-output slice: keep output ``t`` (0-based), sharing A and b."""
    if not 0 <= t < p.k:
        raise IndexRangeError(f"output index {t} out of range for k={p.k}")
    return Parameter(Architecture(p.m, p.n, 1), (p.M[t],), p.A, p.b, (p.c[t],))


def ominus(p1: Parameter, p2: Parameter) -> Parameter:
    """Stack two single-output parameters so the result realizes f1 - f2.

    The second block's outgoing weights are negated and the constants
    subtracted; widths may differ.
    """
    if p1.k != 1 or p2.k != 1:
        raise DimensionError("ominus requires single-output parameters")
    if p1.m != p2.m:
        raise DimensionError(f"input dimensions differ: {p1.m} vs {p2.m}")
    v = p1.M[0] + tuple(-x for x in p2.M[0])
    return Parameter(
        Architecture(p1.m, p1.n + p2.n, 1),
        (v,),
        p1.A + p2.A,
        p1.b + p2.b,
        (p1.c[0] - p2.c[0],),
    )


def replace_row(p: Parameter, i: int, row: AffRow) -> Parameter:
    """Copy of ``p`` with hidden row ``i`` (and its bias) replaced."""
    if not 0 <= i < p.n:
        raise IndexRangeError(f"neuron index {i} out of range for n={p.n}")
    if row.dim != p.m:
        raise DimensionError(f"replacement row has dimension {row.dim}, expected {p.m}")
    A = p.A[:i] + (row.a,) + p.A[i + 1 :]
    b = p.b[:i] + (row.b,) + p.b[i + 1 :]
    return Parameter(p.arch, p.M, A, b, p.c)


def replace_out_column(p: Parameter, i: int, column: Sequence[Fraction]) -> Parameter:
    """Copy of ``p`` with outgoing column ``i`` replaced."""
    if not 0 <= i < p.n:
        raise IndexRangeError(f"neuron index {i} out of range for n={p.n}")
    if len(column) != p.k:
        raise DimensionError(f"column has length {len(column)}, expected {p.k}")
    M = tuple(row[:i] + (column[t],) + row[i + 1 :] for t, row in enumerate(p.M))
    return Parameter(p.arch, M, p.A, p.b, p.c)
