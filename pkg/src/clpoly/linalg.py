"""Exact Gauss-Jordan elimination over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """Solve ``A x = b`` exactly.

    ``A`` may have more rows than columns.  Returns ``None`` for an
    inconsistent system and raises ``ArithmeticError`` when the solution is
    not unique.
    """
    n = len(rows[0]) if rows else 0
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_row = 0
    for col in range(n):
        piv = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError(f"singular system (no pivot in column {col})")
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        pr = m[pivot_row]
        inv = 1 / pr[col]
        for k in range(col, n + 1):
            pr[k] *= inv
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                row = m[r]
                for k in range(col, n + 1):
                    row[k] -= f * pr[k]
        pivot_row += 1
    for r in range(pivot_row, len(m)):
        if m[r][n] != 0:
            return None
    return [m[i][n] for i in range(n)]


def det(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            out = -out
        out *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for k in range(col, n):
                    m[r][k] -= f * m[col][k]
    return out
