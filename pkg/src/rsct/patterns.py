"""Anti-diagonal patterns and their passage to and from tableaux.

An anti-diagonal pattern is an ``n x n`` matrix ``L`` of non-negative
integers whose row suffix sums interlace:

    sum(L[i+1][p:]) <= sum(L[i][p+1:])      for every row i < n and column p

(1-based: ``sum_{j>=p} L[i+1][j] <= sum_{j>=p+1} L[i][j]``).  Row ``i`` of
``L`` records the contents of column ``i`` of a row-strict composition
tableau: ``L[i][j]`` copies of ``j``.  The suffix-sum transform turns ``L``
into a Gel'fand-Tsetlin pattern.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .poly import Monomial
from .shapes import CompositionShape
from .tableaux import Filling

Matrix = tuple[tuple[int, ...], ...]
Reading = Literal["interlacing", "literal"]


def _as_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def _is_square(m: Sequence[Sequence[int]]) -> bool:
    n = len(m)
    return n > 0 and all(len(row) == n for row in m)


def _suffix_sums(row: Sequence[int]) -> list[int]:
    out = [0] * (len(row) + 1)
    for j in range(len(row) - 1, -1, -1):
        out[j] = out[j + 1] + row[j]
    return out


def _top_row_condition(m: Matrix) -> bool:
    # Largest column k with a non-zero top entry must be empty in row 2.
    if len(m) < 2:
        return True
    nz = [k for k, x in enumerate(m[0]) if x]
    return not nz or m[1][nz[-1]] == 0


def _interlaces(m: Matrix) -> bool:
    for upper, lower in zip(m, m[1:]):
        su, sl = _suffix_sums(upper), _suffix_sums(lower)
        if any(sl[p] > su[p + 1] for p in range(len(upper))):
            return False
    return True


def _literal_sums(m: Matrix) -> bool:
    # Truncated sums: lower row runs p..n-i-1, upper row p+1..n-i (1-based).
    n = len(m)
    for i in range(1, n):
        for p in range(1, n + 1):
            lhs = sum(m[i][j - 1] for j in range(p, n - i))
            rhs = sum(m[i - 1][j - 1] for j in range(p + 1, n - i + 1))
            if lhs > rhs:
                return False
    return True


def validate_ad(m: Sequence[Sequence[int]], reading: Reading = "interlacing") -> bool:
    """Whether ``m`` is an anti-diagonal pattern.

    ``reading="literal"`` swaps the interlacing condition for truncated
    partial sums whose upper limit shrinks with the row index.  It is kept
    only for comparison and is not used anywhere else.
    """
    if not _is_square(m):
        return False
    try:
        mat = _as_matrix(m)
    except (TypeError, ValueError):
        return False
    if any(x < 0 for row in mat for x in row):
        return False
    if not _top_row_condition(mat):
        return False
    if reading == "interlacing":
        return _interlaces(mat)
    if reading == "literal":
        return _literal_sums(mat)
    raise ValueError(f"unknown reading {reading!r}")


@dataclass(frozen=True)
class ADPattern:
    entries: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_matrix(self.entries))
        if not validate_ad(self.entries):
            raise ValueError(f"not an anti-diagonal pattern: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, n: int) -> ADPattern:
        return cls(((0,) * n,) * n)

    def __add__(self, other: ADPattern) -> ADPattern:
        return ADPattern(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class GTPattern:
    """Rows weakly decrease; ``G[i+1][p] <= G[i][p+1]`` (0 past the last column)."""

    entries: Matrix

    def __post_init__(self) -> None:
        m = _as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        if not _is_square(m):
            raise ValueError("GT pattern must be a square matrix")
        if any(x < 0 for row in m for x in row):
            raise ValueError("GT pattern entries must be non-negative")
        if any(a < b for row in m for a, b in zip(row, row[1:])):
            raise ValueError(f"GT pattern rows must weakly decrease: {m}")
        for upper, lower in zip(m, m[1:]):
            shifted = upper[1:] + (0,)
            if any(lo > up for lo, up in zip(lower, shifted)):
                raise ValueError(f"GT pattern rows do not interlace: {m}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def ad_to_gt(lam: ADPattern) -> GTPattern:
    return GTPattern(tuple(tuple(_suffix_sums(row)[:-1]) for row in lam.entries))


def gt_to_ad(gam: GTPattern) -> ADPattern:
    rows = []
    for row in gam.entries:
        padded = row + (0,)
        diffs = tuple(padded[j] - padded[j + 1] for j in range(len(row)))
        if any(d < 0 for d in diffs):
            raise ValueError(f"negative difference in GT row {row}")
        rows.append(diffs)
    return ADPattern(tuple(rows))


class PlacementError(ValueError):
    """A copy could not be placed while building a tableau from a pattern."""


def pattern_to_tableau(lam: ADPattern | Sequence[Sequence[int]], columns: int | None = None) -> Filling:
    """Build the row-strict composition tableau encoded by ``lam``.

    Column 1 receives ``lam[1][k]`` copies of ``k`` for ``k = 1..n`` in
    order, top down.  For each later column ``i``, row ``i`` of ``lam`` is
    scanned right to left; each copy of ``j`` goes into the topmost row whose
    entry in column ``i-1`` exceeds ``j`` and whose column ``i`` cell is still
    empty.  ``columns`` stops after that many columns (for inspection).
    """
    if not isinstance(lam, ADPattern):
        lam = ADPattern(lam)
    rows = tuple(tuple(r) for r in _place(lam.entries, columns))
    return Filling(CompositionShape(tuple(len(r) for r in rows)), rows, lam.n)


def _place(L: Matrix, columns: int | None = None) -> list[list[int]]:
    n = len(L)
    grid = [[k] for k in range(1, n + 1) for _ in range(L[0][k - 1])]
    for i in range(1, n if columns is None else min(columns, n)):
        for j in range(n, 0, -1):
            for _ in range(L[i][j - 1]):
                for row in grid:
                    if len(row) == i and row[i - 1] > j:
                        row.append(j)
                        break
                else:
                    raise PlacementError(f"no slot for a copy of {j} in column {i + 1}")
    return grid


def monomial_to_pattern(m: Monomial) -> ADPattern:
    """Read the exponent matrix of ``m`` as an anti-diagonal pattern.

    Raises ``ValueError`` if the matrix is not one, which means ``m`` is not
    the initial monomial of any row-strict composition tableau.
    """
    return ADPattern(tuple(tuple(r) for r in m.as_matrix()))


def tableau_to_pattern(y: Filling) -> Matrix:
    """Column-content matrix: entry ``(i, j)`` counts copies of ``j`` in column ``i``."""
    n = y.n
    rows = []
    for i in range(n):
        col = y.column(i)
        rows.append(tuple(col.count(j) for j in range(1, n + 1)))
    return tuple(rows)


def iter_matrices(n: int, max_total: int) -> Iterator[Matrix]:
    """All non-negative ``n x n`` integer matrices with entry sum at most ``max_total``."""
    cells = n * n

    def rec(k: int, budget: int) -> Iterator[tuple[int, ...]]:
        if k == cells:
            yield ()
            return
        for v in range(budget + 1):
            for rest in rec(k + 1, budget - v):
                yield (v,) + rest

    for flat in rec(0, max_total):
        yield tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n))


def iter_patterns(n: int, max_total: int, reading: Reading = "interlacing") -> Iterator[Matrix]:
    for m in iter_matrices(n, max_total):
        if validate_ad(m, reading):
            yield m


def phi_injectivity_experiment(n: int, max_total: int) -> dict:
    """Apply the tableau construction to every small pattern and look for collisions.

    Also counts patterns accepted by the literal reading but rejected by the
    interlacing one, and how the construction fares on those.
    """
    seen: dict[tuple, Matrix] = {}
    collisions = []
    failures = []
    total = 0
    for m in iter_patterns(n, max_total):
        total += 1
        try:
            y = pattern_to_tableau(m)
        except PlacementError as exc:
            failures.append({"matrix": [list(r) for r in m], "error": str(exc)})
            continue
        key = y.rows
        if key in seen:
            collisions.append({"a": [list(r) for r in seen[key]], "b": [list(r) for r in m]})
        else:
            seen[key] = m
    literal_only = [m for m in iter_patterns(n, max_total, "literal") if not validate_ad(m)]
    literal_failures = 0
    for m in literal_only:
        try:
            _place(m)
        except PlacementError:
            literal_failures += 1
    return {
        "n": n,
        "max_total": max_total,
        "patterns": total,
        "distinct_tableaux": len(seen),
        "collisions": collisions,
        "placement_failures": failures,
        "injective": not collisions and not failures,
        "literal_only_patterns": len(literal_only),
        "literal_only_placement_failures": literal_failures,
    }


def parse_matrix(raw: str) -> list[list[int]]:
    """Parse a matrix from JSON (array, or object with a ``matrix`` key) or ``"0,2,4;1,3,0"``."""
    text = raw.strip()
    if text.startswith("[") or text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["matrix"]
        rows = data
    else:
        rows = [[int(x) for x in chunk.split(",")] for chunk in text.split(";") if chunk.strip()]
    if not rows or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"malformed matrix: {raw!r}")
    return [[int(x) for x in r] for r in rows]
