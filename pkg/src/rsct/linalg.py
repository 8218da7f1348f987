"""Fraction-free Gaussian elimination over the integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass
class Echelon:
    rank: int
    # Original row indices: the first ``rank`` are pivot rows, the rest reduced to zero.
    row_order: list[int]
    pivot_columns: list[int]
    matrix: list[list[int]]

    @property
    def dependent_rows(self) -> list[int]:
        return self.row_order[self.rank:]


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> Echelon:
    """Row echelon form by Bareiss elimination.

    Every intermediate entry is a minor of the input, so each division by
    the previous pivot is exact and entries stay integral.
    """
    M = [[int(x) for x in r] for r in rows]
    m = len(M)
    ncols = len(M[0]) if M else 0
    if any(len(r) != ncols for r in M):
        raise ValueError("ragged matrix")
    order = list(range(m))
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            order[r], order[p] = order[p], order[r]
        piv = M[r][c]
        top = M[r]
        for i in range(r + 1, m):
            row = M[i]
            lead = row[c]
            if lead:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - lead * top[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return Echelon(r, order, pivots, M)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    return bareiss_echelon(rows).rank
