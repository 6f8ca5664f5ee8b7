"""Exact rational matrices and the elimination primitives everything else uses.

Scalars are ``fractions.Fraction`` values throughout, so echelon forms, ranks
and solvability decisions are exact.  Pivoting is deterministic (first nonzero
entry in column order), which makes every canonical form reproducible byte for
byte; subspace equality downstream is therefore a genuine decision procedure,
not a tolerance check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, str, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/([+-]?\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; the result is reduced and has q > 0."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"bad rational literal {text!r}")
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(match.group(1)), denominator)


def format_rational(value: Fraction) -> str:
    """Render as ``p/q``, omitting the denominator when it is 1."""
    return str(value)


def vector(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, row-major.  Zero-extent shapes are legal."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix extent")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "Matrix":
        data = [vector(r) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("rows of unequal length")
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with row length")
        else:
            width = 0 if cols is None else cols
        flat = tuple(x for r in data for x in r)
        return cls(len(data), width, flat)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[Scalar]], rows: Optional[int] = None) -> "Matrix":
        data = [vector(c) for c in cols]
        if data:
            height = len(data[0])
            if any(len(c) != height for c in data):
                raise ValueError("columns of unequal length")
            if rows is not None and rows != height:
                raise ValueError("explicit row count disagrees with column length")
        else:
            height = 0 if rows is None else rows
        flat = tuple(data[j][i] for i in range(height) for j in range(len(data)))
        return cls(height, len(data), flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column_tuples(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.cols, self.rows, flat)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("hstack requires matching row counts")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, tuple(flat))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("vstack requires matching column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.cols
        flat = []
        for i in range(self.rows):
            lrow = self.row(i)
            for j in range(ocols):
                acc = _ZERO
                for k in range(self.cols):
                    a = lrow[k]
                    if a:
                        acc += a * other.entries[k * ocols + j]
                flat.append(acc)
        return Matrix(self.rows, ocols, tuple(flat))

    def matvec(self, v: Sequence[Scalar]) -> tuple[Fraction, ...]:
        x = vector(v)
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} does not match {self.cols} columns")
        out = []
        for i in range(self.rows):
            acc = _ZERO
            for a, b in zip(self.row(i), x):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


class EchelonForm(NamedTuple):
    matrix: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


def _rref_inplace(data: list[list[Fraction]], cols: int) -> tuple[int, list[int]]:
    """Reduce ``data`` to RREF in place; returns (rank, pivot columns).

    Pivot choice is the first row with a nonzero entry in column order, so the
    result is deterministic for equal input.
    """
    rank = 0
    pivots: list[int] = []
    nrows = len(data)
    for col in range(cols):
        pivot_row = None
        for r in range(rank, nrows):
            if data[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            data[rank], data[pivot_row] = data[pivot_row], data[rank]
        prow = data[rank]
        lead = prow[col]
        if lead != 1:
            for j in range(col, cols):
                if prow[j]:
                    prow[j] /= lead
        for r in range(nrows):
            if r == rank:
                continue
            row = data[r]
            f = row[col]
            if f:
                row[col] = _ZERO
                for j in range(col + 1, cols):
                    p = prow[j]
                    if p:
                        row[j] = row[j] - f * p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots


def canonical_echelon(m: Matrix) -> EchelonForm:
    """Reduced row echelon form of ``m``, with rank and pivot columns."""
    data = m.row_lists()
    rank, pivots = _rref_inplace(data, m.cols)
    reduced = Matrix(m.rows, m.cols, tuple(x for row in data for x in row))
    return EchelonForm(reduced, rank, tuple(pivots))


def rank(m: Matrix) -> int:
    return canonical_echelon(m).rank


def nullspace(m: Matrix) -> Matrix:
    """Basis of ``{x : m x = 0}`` as columns.

    The basis comes from the RREF free-variable parametrization with free
    columns taken in increasing order: column for free variable f has a 1 in
    position f, the negated reduced entries in the pivot positions, and zeros
    elsewhere.  Column count is always ``cols - rank``.
    """
    reduced, nrank, pivots = canonical_echelon(m)
    pivot_set = set(pivots)
    cols = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        cols.append(v)
    return Matrix.from_cols(cols, rows=m.cols)


def solve_linear(m: Matrix, b: Sequence[Scalar]) -> Optional[tuple[Fraction, ...]]:
    """A particular solution of ``m x = b`` (free variables 0), or None.

    None is returned exactly when the system is inconsistent.
    """
    rhs = vector(b)
    if len(rhs) != m.rows:
        raise ValueError(f"right-hand side length {len(rhs)} does not match {m.rows} rows")
    data = [list(m.row(i)) + [rhs[i]] for i in range(m.rows)]
    _, pivots = _rref_inplace(data, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [_ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = data[r][m.cols]
    return tuple(x)
