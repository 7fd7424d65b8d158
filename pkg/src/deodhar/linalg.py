"""Exact linear algebra over the rationals for flag computations.

Matrices are immutable, square, and store ``fractions.Fraction`` entries.
Determinants clear denominators row by row and then run fraction-free
Bareiss elimination on the integer part, which keeps intermediate values
small; every other routine is direct Gaussian arithmetic on `Fraction`.

Index sets for minors are 1-based, strictly increasing tuples.  Two
invertible matrices represent the same complete flag when they differ by an
invertible upper-triangular factor on the right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, InputError
from .weyl import Permutation

__all__ = [
    "Rational",
    "RatMatrix",
    "rational_from_json",
    "rational_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "flag_equal",
    "bruhat_position",
    "opposite_position",
    "unipotent_representative",
]

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise InputError(f"cannot interpret {x!r} as a rational number")


def rational_from_json(x) -> Fraction:
    """Accepts "p/q" or "n" strings, and plain integers."""
    return _as_fraction(x)


def rational_to_json(x: Fraction) -> str:
    """Formats as "p/q", or "n" when the denominator is 1."""
    return str(x)


def _check_index_set(ix: Sequence[int], d: int) -> tuple[int, ...]:
    ix = tuple(ix)
    for a in ix:
        if not 1 <= a <= d:
            raise InputError(f"index {a} out of range 1..{d}")
    if any(ix[k] >= ix[k + 1] for k in range(len(ix) - 1)):
        raise InputError(f"index set must be strictly increasing: {ix!r}")
    return ix


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class RatMatrix:
    """An immutable square matrix of rationals.  Entry access is 1-based."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        d = len(self.rows)
        if d == 0:
            raise InputError("matrix must have at least one row")
        if any(len(r) != d for r in self.rows):
            raise InputError("matrix must be square")

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "RatMatrix":
        return RatMatrix(tuple(tuple(_as_fraction(x) for x in r) for r in rows))

    @staticmethod
    def identity(d: int) -> "RatMatrix":
        return RatMatrix(
            tuple(
                tuple(Fraction(1 if r == c else 0) for c in range(d))
                for r in range(d)
            )
        )

    @property
    def d(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        if not (1 <= i <= self.d and 1 <= j <= self.d):
            raise InputError(f"entry ({i},{j}) out of range for size {self.d}")
        return self.rows[i - 1][j - 1]

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.d != other.d:
            raise InputError("size mismatch in matrix product")
        d = self.d
        cols = list(zip(*other.rows))
        return RatMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def det(self) -> Fraction:
        """Determinant via denominator clearing and integer Bareiss steps."""
        scale = 1
        m: list[list[int]] = []
        for row in self.rows:
            lcm = math.lcm(*(x.denominator for x in row)) if row else 1
            scale *= lcm
            m.append([int(x * lcm) for x in row])
        return Fraction(_bareiss_det(m), scale)

    def minor(self, row_set: Sequence[int], col_set: Sequence[int]) -> Fraction:
        """Determinant of the submatrix on the given 1-based index sets.

        Both sets must be strictly increasing and of equal size; the empty
        minor is 1.
        """
        rows = _check_index_set(row_set, self.d)
        cols = _check_index_set(col_set, self.d)
        if len(rows) != len(cols):
            raise InputError("minor needs equally many rows and columns")
        if not rows:
            return Fraction(1)
        sub = RatMatrix(
            tuple(tuple(self.rows[r - 1][c - 1] for c in cols) for r in rows)
        )
        return sub.det()

    def inverse(self) -> "RatMatrix":
        d = self.d
        work = [list(r) + [Fraction(int(k == r_ix)) for k in range(d)]
                for r_ix, r in enumerate(self.rows)]
        for col in range(d):
            pivot = next((r for r in range(col, d) if work[r][col] != 0), None)
            if pivot is None:
                raise DomainError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            pv = work[col][col]
            work[col] = [x / pv for x in work[col]]
            for r in range(d):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return RatMatrix(tuple(tuple(row[d:]) for row in work))

    def is_upper_triangular(self) -> bool:
        return all(
            self.rows[r][c] == 0 for r in range(self.d) for c in range(r)
        )

    def is_upper_unipotent(self) -> bool:
        return self.is_upper_triangular() and all(
            self.rows[k][k] == 1 for k in range(self.d)
        )

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self.rows
        )
        return f"RatMatrix[{body}]"


def matrix_from_json(data) -> RatMatrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix JSON must be a list of lists")
    return RatMatrix.from_rows(data)


def matrix_to_json(m: RatMatrix) -> list[list[str]]:
    return [[rational_to_json(x) for x in row] for row in m.rows]


def flag_equal(a: RatMatrix, b: RatMatrix) -> bool:
    """Whether two invertible matrices span the same complete flag.

    True exactly when a^{-1} b is upper triangular.
    """
    if a.d != b.d:
        raise InputError("size mismatch in flag comparison")
    return (a.inverse() * b).is_upper_triangular()


def _column_reduce(g: RatMatrix, bottom: bool) -> tuple[list[list[Fraction]], Permutation]:
    """Greedy pivot sweep by columns, clearing each pivot row to the right.

    With ``bottom`` the pivot is the lowest nonzero entry of the running
    column, which is invariant under upper-triangular factors on either
    side; without it the pivot is the highest nonzero entry, invariant under
    a lower-triangular factor on the left and an upper one on the right.
    """
    d = g.d
    m = [list(row) for row in g.rows]
    images = [0] * d
    for j in range(d):
        rows_with_value = [r for r in range(d) if m[r][j] != 0]
        if not rows_with_value:
            raise DomainError("matrix is singular")
        p = max(rows_with_value) if bottom else min(rows_with_value)
        images[j] = p + 1
        pivot = m[p][j]
        for r in range(d):
            m[r][j] /= pivot
        for j2 in range(j + 1, d):
            f = m[p][j2]
            if f != 0:
                for r in range(d):
                    m[r][j2] -= f * m[r][j]
    return m, Permutation(tuple(images))


def bruhat_position(g: RatMatrix) -> Permutation:
    """The permutation w with g in B+ w B+ (B+ the upper-triangular group)."""
    return _column_reduce(g, bottom=True)[1]


def opposite_position(g: RatMatrix) -> Permutation:
    """The permutation v with g in B- v B+ (B- the lower-triangular group)."""
    return _column_reduce(g, bottom=False)[1]


def unipotent_representative(g: RatMatrix) -> tuple[RatMatrix, Permutation]:
    """An upper-unipotent z and w = bruhat_position(g) with z w B+ = g B+.

    Column j of the reduced matrix has its lowest nonzero entry, pinned to
    1, in row w(j); regrouping those columns as columns w(j) of z yields the
    unipotent witness.
    """
    m, w = _column_reduce(g, bottom=True)
    d = g.d
    z = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        target = w(j + 1) - 1
        for r in range(d):
            z[r][target] = m[r][j]
    out = RatMatrix(tuple(tuple(row) for row in z))
    if not out.is_upper_unipotent():
        raise DomainError("matrix is singular")
    return out, w
