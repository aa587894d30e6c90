"""Exact rational linear algebra.

Rationals are :class:`fractions.Fraction`; matrices are lists of rows.
Elimination is fraction-free (Bareiss) on integer rows obtained by clearing
denominators row by row, so intermediate entries stay integral and bounded.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RatMatrix = Sequence[Sequence[Fraction]]


def as_rational(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point input is not accepted")
    return Fraction(value)


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    rows = []
    for row in M:
        row = [as_rational(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        rows.append([int(v * den) for v in row])
    return rows


def bareiss_echelon(M: RatMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the echelon rows (integers) and the list of pivot columns.
    """
    A = _integer_rows(M)
    if not A:
        return [], []
    n_rows, n_cols = len(A), len(A[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, n_rows):
            a_ic = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (piv * row_i[j] - a_ic * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: RatMatrix) -> int:
    """Exact rank of a rational matrix."""
    return len(bareiss_echelon(M)[1])


def nullspace_dimension(M: RatMatrix, n_cols: int | None = None) -> int:
    """``cols - rank``.  ``n_cols`` is required when ``M`` has no rows."""
    if n_cols is None:
        if not M:
            raise ValueError("n_cols is required for an empty matrix")
        n_cols = len(M[0])
    return n_cols - rank(M)


def nullspace(M: RatMatrix, n_cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace, one rational vector per free column."""
    if n_cols is None:
        n_cols = len(M[0])
    if not M:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    E, pivots = bareiss_echelon(M)
    # reduce to RREF over the rationals; E is small
    R = [[Fraction(v) for v in row] for row in E]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pv = R[k][c]
        R[k] = [v / pv for v in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [a - f * b for a, b in zip(R[i], R[k])]
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -R[k][fc]
        basis.append(v)
    return basis


def solve(M: RatMatrix, b: Sequence) -> list[Fraction] | None:
    """One exact solution of ``M x = b`` or None if inconsistent."""
    aug = [list(row) + [as_rational(bi)] for row, bi in zip(M, b)]
    n = len(M[0])
    E, pivots = bareiss_echelon(aug)
    if pivots and pivots[-1] == n:
        return None
    R = [[Fraction(v) for v in row] for row in E]
    x = [Fraction(0)] * n
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        s = R[k][n] - sum(R[k][j] * x[j] for j in range(c + 1, n))
        x[c] = s / R[k][c]
    return x


def primitive(v: Iterable) -> list[int]:
    """Smallest positive rescaling of ``v`` that is integral with gcd 1.

    The sign is kept: a positive multiple is returned, so callers that need a
    canonical orientation must pass a correctly oriented vector.
    """
    v = [as_rational(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("cannot normalize the zero vector")
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]
