"""Exact rational linear algebra helpers (common)."""

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from .errors import ArgumentError, DimensionError


RationalVector = Tuple[Fraction, ...]
Number = Union[int, Fraction]


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Parse an exact rational; strings are `p`, `p/q` or a finite decimal."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ArgumentError(f"not an exact rational: {value!r}")
    raise ArgumentError(f"not an exact rational: {value!r}")


def to_vector(values: Sequence[Union[int, str, Fraction]], n: Optional[int] = None) -> RationalVector:
    vec = tuple(to_fraction(v) for v in values)
    if n is not None and len(vec) != n:
        raise DimensionError(f"expected {n} coordinates, got {len(vec)}")
    return vec


def parse_vector(text: str, n: Optional[int] = None) -> RationalVector:
    """`1/2,1/3,0` -> (1/2, 1/3, 0)."""
    parts = [p for p in text.replace(' ', '').split(',') if p]
    return to_vector(parts, n)


def format_rational(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_vector(vec: Sequence[Number]) -> str:
    return ','.join(format_rational(x) for x in vec)


def constant_vector(value: Number, n: int) -> RationalVector:
    return tuple(Fraction(value) for _ in range(n))


def is_integral(vec: Sequence[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in vec)


def _integer_rows(rows: Sequence[Sequence[Number]]) -> List[List[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = reduce(lcm, (f.denominator for f in fracs), 1)
        out.append([int(f * scale) for f in fracs])
    return out


def solve_exact(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> Optional[RationalVector]:
    """Solve a square system by fraction-free (Bareiss) elimination.

    Returns None when the matrix is singular.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise DimensionError("solve_exact needs a square system")
    m = _integer_rows([list(row) + [b] for row, b in zip(matrix, rhs)])
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return None
            m[k], m[swap] = m[swap], m[k]
        pivot = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    x: List[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return tuple(x)


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank over the rationals."""
    if not rows:
        return 0
    return int(sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                              for x in row] for row in rows]).rank())


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of the points plus one; 0 for no points."""
    if not points:
        return 0
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) + 1


def in_affine_hull(x: Sequence[Number], points: Sequence[Sequence[Number]]) -> bool:
    if not points:
        return False
    base = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    target = [Fraction(a) - Fraction(b) for a, b in zip(x, base)]
    if not any(target):
        return True
    return rank(diffs + [target]) == rank(diffs)


def dot(a: Sequence[Number], b: Sequence[Number]) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))
