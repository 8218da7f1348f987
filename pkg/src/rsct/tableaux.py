"""Fillings of Young and composition diagrams.

A :class:`Filling` is a shape together with row-major cell entries drawn from
``1..n``.  The validators decide whether a filling is a semistandard Young
tableau (SSYT) or a row-strict composition tableau (RSCT); the enumerators
list all of them for a given shape.

RSCT conditions, with rows indexed top to bottom:

1. every row strictly decreases left to right;
2. the first column weakly increases top to bottom;
3. triple rule: pad each row with zeros to the width of the diagram, giving
   ``Ybar``.  For rows ``i < j`` and columns ``k >= 2``,
   ``Ybar[j][k] > Ybar[i][k]`` implies ``Ybar[j][k] >= Ybar[i][k-1]``.
   Padding zeros take part in the comparisons.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import CompositionShape, PartitionShape, compositions_of, rearrange, transpose

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Filling:
    shape: CompositionShape
    rows: Rows
    n: int

    def __post_init__(self) -> None:
        shape = self.shape
        if not isinstance(shape, CompositionShape):
            shape = CompositionShape(tuple(shape))
            object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(int(e) for e in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise ValueError("n must be positive")
        if tuple(len(r) for r in rows) != shape.parts:
            raise ValueError(f"row lengths {tuple(len(r) for r in rows)} do not match shape {shape.parts}")
        for row in rows:
            for e in row:
                if not 1 <= e <= self.n:
                    raise ValueError(f"entry {e} outside [1, {self.n}]")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int, partition: bool = False) -> Filling:
        rows = tuple(tuple(r) for r in rows)
        parts = tuple(len(r) for r in rows)
        shape = PartitionShape(parts) if partition else CompositionShape(parts)
        return cls(shape, rows, n)

    @property
    def num_cells(self) -> int:
        return sum(self.shape.parts)

    def column(self, k: int) -> tuple[int, ...]:
        """Entries of column ``k`` (0-based), top to bottom, skipping short rows."""
        return tuple(row[k] for row in self.rows if len(row) > k)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(k) for k in range(max(self.shape.parts, default=0))]

    def padded(self) -> list[list[int]]:
        """Rows padded with zeros to a rectangle of the diagram's width."""
        w = max(self.shape.parts, default=0)
        return [list(r) + [0] * (w - len(r)) for r in self.rows]

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict | str) -> Filling:
        if isinstance(data, str):
            data = json.loads(data)
        rows = tuple(tuple(r) for r in data["rows"])
        shape = tuple(data.get("shape", [len(r) for r in rows]))
        return cls(CompositionShape(shape), rows, int(data["n"]))

    def to_latex(self) -> str:
        body = " \\\\\n".join(" & ".join(str(e) for e in row) for row in self.rows)
        return "\\begin{ytableau}\n" + body + "\n\\end{ytableau}"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


def validate_ssyt(f: Filling) -> bool:
    """Rows weakly increase, columns strictly increase downward."""
    rows = f.rows
    if any(a < b for a, b in zip(f.shape.parts, f.shape.parts[1:])):
        return False
    for row in rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(lower[c] <= upper[c] for c in range(len(lower))):
            return False
    return True


def validate_rsct(f: Filling) -> bool:
    rows = f.rows
    for row in rows:
        if any(a <= b for a, b in zip(row, row[1:])):
            return False
    firsts = [row[0] for row in rows]
    if any(a > b for a, b in zip(firsts, firsts[1:])):
        return False
    Y = f.padded()
    width = len(Y[0]) if Y else 0
    for j in range(len(Y)):
        for i in range(j):
            for k in range(1, width):
                if Y[j][k] > Y[i][k] and Y[j][k] < Y[i][k - 1]:
                    return False
    return True


def enumerate_ssyt(lam: PartitionShape | Sequence[int], n: int) -> list[Filling]:
    """All SSYT of shape ``lam`` with entries in ``1..n``, in row-major lexicographic order."""
    shape = lam if isinstance(lam, PartitionShape) else PartitionShape(tuple(lam))
    parts = shape.parts
    cells = [(r, c) for r, p in enumerate(parts) for c in range(p)]
    grid = [[0] * p for p in parts]
    out: list[Filling] = []

    def rec(idx: int) -> None:
        if idx == len(cells):
            out.append(Filling(shape, tuple(tuple(r) for r in grid), n))
            return
        r, c = cells[idx]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # Column below still needs room for strictly larger entries.
        below = sum(1 for p in parts[r + 1:] if p > c)
        for v in range(lo, n - below + 1):
            grid[r][c] = v
            rec(idx + 1)
        grid[r][c] = 0

    rec(0)
    return out


def enumerate_rsct(alpha: CompositionShape | Sequence[int], n: int) -> list[Filling]:
    """All RSCT of shape ``alpha`` with entries in ``1..n``.

    Fills column by column, top to bottom, checking the triple rule as each
    cell is placed.  Output is sorted by rows.
    """
    shape = alpha if isinstance(alpha, CompositionShape) else CompositionShape(tuple(alpha))
    parts = shape.parts
    if any(p > n for p in parts):
        return []
    width = max(parts, default=0)
    grid = [[0] * width for _ in parts]
    cells = [(r, k) for k in range(width) for r, p in enumerate(parts) if p > k]
    out: list[Filling] = []

    def ok(j: int, k: int, v: int) -> bool:
        if k == 0:
            return True
        for i in range(j):
            if v > grid[i][k] and v < grid[i][k - 1]:
                return False
        return True

    def rec(idx: int) -> None:
        if idx == len(cells):
            out.append(Filling(shape, tuple(tuple(grid[r][:p]) for r, p in enumerate(parts)), n))
            return
        j, k = cells[idx]
        # Remaining cells of the row must strictly decrease down to at least 1.
        lo = parts[j] - k
        if k == 0:
            hi = n
            if j:
                lo = max(lo, grid[j - 1][0])
        else:
            hi = grid[j][k - 1] - 1
        for v in range(lo, hi + 1):
            if ok(j, k, v):
                grid[j][k] = v
                rec(idx + 1)
        grid[j][k] = 0

    rec(0)
    out.sort(key=lambda f: f.rows)
    return out


def content(f: Filling) -> tuple[int, ...]:
    """Multiplicity of each value ``1..n`` in ``f``."""
    counts = Counter(e for row in f.rows for e in row)
    return tuple(counts.get(v, 0) for v in range(1, f.n + 1))


def sort_and_transpose(y: Filling) -> Filling:
    """Sort rows by length (stable, longest first), then swap rows and columns.

    Sends an RSCT of shape ``alpha`` to a filling of
    ``transpose(rearrange(alpha))`` whose columns are the rows of ``y``.
    """
    ordered = sorted(y.rows, key=len, reverse=True)
    width = len(ordered[0]) if ordered else 0
    rows = tuple(tuple(r[k] for r in ordered if len(r) > k) for k in range(width))
    shape = transpose(rearrange(y.shape))
    return Filling(shape, rows, y.n)


def iter_rsct(n: int, max_cells: int) -> Iterator[Filling]:
    """Every RSCT with at most ``max_cells`` cells and parts at most ``n``."""
    for m in range(1, max_cells + 1):
        for alpha in compositions_of(m, max_part=n):
            yield from enumerate_rsct(alpha, n)
