"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fraction; all routines are pure and return
fresh objects. Used for every structural predicate in the package, where
floating tolerances would turn exact dichotomies into guesses.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = list[Fraction]
Matrix = list[Row]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


def as_matrix(rows: Iterable[Sequence]) -> Matrix:
    return [[as_fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Sequence]) -> Matrix:
    """Reduced row echelon form; zero rows dropped, pivots normalized to 1."""
    m = as_matrix(rows)
    if not m:
        return []
    ncols = len(m[0])
    out: Matrix = []
    pivot_row = 0
    for col in range(ncols):
        pick = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                pick = r
                break
        if pick is None:
            continue
        m[pivot_row], m[pick] = m[pick], m[pivot_row]
        pv = m[pivot_row][col]
        m[pivot_row] = [x / pv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    for row in m[:pivot_row]:
        out.append(row)
    return out


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the right null space of the matrix, as RREF rows."""
    m = as_matrix(rows)
    if not m:
        if ncols is None:
            return []
        return identity(ncols)
    n = len(m[0]) if ncols is None else ncols
    red = rref(m)
    pivots = []
    for row in red:
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    free = [j for j in range(n) if j not in pivots]
    basis: Matrix = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[j]
        basis.append(v)
    return rref(basis)


def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Row:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def in_row_space(rows: Iterable[Sequence], v: Sequence) -> bool:
    base = [list(r) for r in as_matrix(rows)]
    r0 = rank(base)
    base.append([as_fraction(x) for x in v])
    return rank(base) == r0


def solve(a: Iterable[Sequence], b: Sequence) -> Row | None:
    """One exact solution of A x = b, or None if inconsistent."""
    m = as_matrix(a)
    rhs = [as_fraction(x) for x in b]
    if not m:
        return None if any(x != 0 for x in rhs) else []
    n = len(m[0])
    aug = [row + [t] for row, t in zip(m, rhs)]
    red = rref(aug)
    x = [Fraction(0)] * n
    for row in red:
        piv = next((j for j, v in enumerate(row) if v != 0), None)
        if piv is None:
            continue
        if piv == n:
            return None
        x[piv] = row[n]
    return x
