"""Exact rational matrices with fraction-free elimination."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

logger = logging.getLogger(__name__)

# RationalScalar: Fraction keeps numerator/denominator reduced with denominator > 0.
Rational = Fraction


def to_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an exact value ("p/q" strings included) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        """Build from a list of rows; `cols` is required when there are no rows."""
        data = [[to_rational(x) for x in row] for row in rows]
        width = cols if cols is not None else (len(data[0]) if data else 0)
        for row in data:
            if len(row) != width:
                raise ValueError("ragged rows")
        return cls(len(data), width, tuple(x for row in data for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RationalMatrix:
        """Build from a list of columns of length `rows`."""
        return cls.from_rows(columns, cols=rows).transpose()

    @classmethod
    def from_sparse_columns(
        cls, columns: Sequence[dict[int, Fraction]], rows: int
    ) -> RationalMatrix:
        """Build from columns given as {row index: value} maps."""
        entries = [Fraction(0)] * (rows * len(columns))
        width = len(columns)
        for j, column in enumerate(columns):
            for i, value in column.items():
                entries[i * width + j] = to_rational(value)
        return cls(rows, width, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], cols=size
        )

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def scale_row(self, i: int, factor: int | Fraction) -> RationalMatrix:
        rows = self.row_list()
        rows[i] = [x * factor for x in rows[i]]
        return RationalMatrix.from_rows(rows, cols=self.cols)

    def swap_rows(self, i: int, j: int) -> RationalMatrix:
        rows = self.row_list()
        rows[i], rows[j] = rows[j], rows[i]
        return RationalMatrix.from_rows(rows, cols=self.cols)

    def to_json(self) -> list[list[str]]:
        """Rows of "p/q" strings."""
        return [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data: list[list[str]], cols: int | None = None) -> RationalMatrix:
        return cls.from_rows(data, cols=cols)


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row; zero rows are dropped."""
    result = []
    for row in rows:
        if not any(row):
            continue
        scale = lcm(*(x.denominator for x in row))
        result.append([x.numerator * (scale // x.denominator) for x in row])
    return result


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination; pivots are the first nonzero entry in column order."""
    rank = 0
    previous = 1
    nrows = len(rows)
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot_line = rows[rank]
        pivot = pivot_line[col]
        for i in range(rank + 1, nrows):
            line = rows[i]
            factor = line[col]
            if factor == 0:
                # Entries stay minors of the original matrix, so the division is exact.
                if pivot != previous:
                    rows[i] = [x * pivot // previous for x in line]
                continue
            rows[i] = [
                (pivot * x - factor * p) // previous for x, p in zip(line, pivot_line)
            ]
        previous = pivot
        rank += 1
    return rank


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    # Eliminate along the shorter side; rank(m) == rank(m^T).
    source = m if m.rows <= m.cols else m.transpose()
    rows = _integer_rows(source.row(i) for i in range(source.rows))
    result = _bareiss_rank(rows, source.cols)
    if m.rows * m.cols > 10_000:
        logger.debug("rank of %dx%d matrix: %d", m.rows, m.cols, result)
    return result


def image_codim(m: RationalMatrix) -> int:
    """Codimension of the column space inside a codomain of dimension `rows`."""
    return m.rows - rank(m)


def _reduced_row_echelon(
    rows: list[list[Fraction]], ncols: int
) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inverse = 1 / rows[r][c]
        rows[r] = [x * inverse for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def cokernel_basis(m: RationalMatrix) -> list[list[Fraction]]:
    """Linearly independent functionals on the codomain that vanish on the image.

    These span the left null space of `m`; there are exactly image_codim(m) of them.
    """
    if m.rows == 0:
        return []
    system = m.transpose().row_list()
    reduced, pivots = _reduced_row_echelon(system, m.rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.rows):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * m.rows
        vector[free] = Fraction(1)
        for line, pivot in zip(reduced, pivots):
            vector[pivot] = -line[free]
        basis.append(vector)
    return basis
