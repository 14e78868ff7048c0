"""Small exact linear algebra over the rationals.

Only what the rest of the package needs: a nullspace basis by row
reduction, and a Fourier-Motzkin search for a strictly positive vector
in a rational subspace.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of the solution space of ``rows . x = 0``.

    Gaussian elimination with exact rationals; the basis vectors follow
    the usual free-column construction and are deterministic.
    """
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivot_col_of_row: list[int] = []
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_idx, len(matrix)):
            if matrix[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[row_idx], matrix[pivot] = matrix[pivot], matrix[row_idx]
        inv = 1 / matrix[row_idx][col]
        matrix[row_idx] = [v * inv for v in matrix[row_idx]]
        for r in range(len(matrix)):
            if r != row_idx and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row_idx])]
        pivot_col_of_row.append(col)
        row_idx += 1
        if row_idx == len(matrix):
            break
    pivot_cols = set(pivot_col_of_row)
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, col in enumerate(pivot_col_of_row):
            vec[col] = -matrix[r][free]
        basis.append(tuple(vec))
    return basis


def strictly_positive_solution(rows: Sequence[Sequence[Fraction]]) -> list[Fraction] | None:
    """Some ``lam`` with ``rows . lam > 0`` componentwise strict, or None.

    Fourier-Motzkin elimination on the homogeneous strict system; a
    witness is recovered by back-substitution (midpoints between the
    tightest bounds, which always exist over the rationals).
    """
    if not rows:
        return []
    nvar = len(rows[0])
    return _eliminate([tuple(Fraction(x) for x in row) for row in rows], nvar)


def _eliminate(ineqs: list[tuple], k: int) -> list[Fraction] | None:
    if k == 0:
        # Leftover rows read 0 > 0: infeasible.
        return None if ineqs else []
    lows, highs, rest = [], [], []
    for row in ineqs:
        c = row[k - 1]
        head = row[:k - 1]
        if c == 0:
            rest.append(head)
        elif c > 0:
            lows.append(tuple(-x / c for x in head))   # lam_k > dot(head', lam')
        else:
            highs.append(tuple(-x / c for x in head))  # lam_k < dot(head', lam')
    for low in lows:
        for high in highs:
            rest.append(tuple(u - l for u, l in zip(high, low)))
    sub = _eliminate(rest, k - 1)
    if sub is None:
        return None
    lo = max((sum(c * v for c, v in zip(row, sub)) for row in lows), default=None)
    hi = min((sum(c * v for c, v in zip(row, sub)) for row in highs), default=None)
    if lo is None and hi is None:
        value = Fraction(0)
    elif hi is None:
        value = lo + 1
    elif lo is None:
        value = hi - 1
    else:
        value = (lo + hi) / 2
    return sub + [value]
