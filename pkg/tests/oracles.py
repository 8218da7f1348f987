"""Independent reference implementations used only by the tests.

Nothing here imports the code paths it is used to check.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator, Sequence


def all_fillings(shape: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = sum(shape)
    for vals in itertools.product(range(1, n + 1), repeat=cells):
        it = iter(vals)
        yield tuple(tuple(next(it) for _ in range(p)) for p in shape)


def is_ssyt(rows) -> bool:
    for r in rows:
        for a, b in zip(r, r[1:]):
            if a > b:
                return False
    for c in range(len(rows[0]) if rows else 0):
        col = [r[c] for r in rows if len(r) > c]
        for a, b in zip(col, col[1:]):
            if a >= b:
                return False
    return True


def is_rsct(rows) -> bool:
    """Direct transcription of the three RSCT conditions on the zero-padded rectangle."""
    if not rows:
        return True
    for r in rows:
        for a, b in zip(r, r[1:]):
            if not a > b:
                return False
    for a, b in zip(rows, rows[1:]):
        if not a[0] <= b[0]:
            return False
    w = max(len(r) for r in rows)
    pad = {(i, k): (rows[i][k] if k < len(rows[i]) else 0) for i in range(len(rows)) for k in range(w)}
    for i, j in itertools.combinations(range(len(rows)), 2):
        for k in range(1, w):
            if pad[j, k] > pad[i, k] and not pad[j, k] >= pad[i, k - 1]:
                return False
    return True


def brute_ssyt(shape, n):
    return sorted(f for f in all_fillings(shape, n) if is_ssyt(f))


def brute_rsct(shape, n):
    return sorted(f for f in all_fillings(shape, n) if is_rsct(f))


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def leibniz_minor(cols: Sequence[int]) -> dict[tuple[tuple[int, int, int], ...], int]:
    """Determinant of rows 1..k, columns ``cols`` as {sorted (i, j, e) triples: coeff}."""
    k = len(cols)
    out: dict = {}
    for perm in itertools.permutations(range(k)):
        exps: dict[tuple[int, int], int] = {}
        for row, t in enumerate(perm, 1):
            key = (row, cols[t])
            exps[key] = exps.get(key, 0) + 1
        mono = tuple(sorted((i, j, e) for (i, j), e in exps.items()))
        out[mono] = out.get(mono, 0) + perm_sign(perm)
    return {m: c for m, c in out.items() if c}


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    m, ncols = len(M), len(M[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def random_ad_pattern(rng: random.Random, n: int, top_max: int = 6) -> list[list[int]]:
    """Random matrix satisfying the suffix-sum interlacing, built right to left per row."""
    rows = [[rng.randint(0, top_max) for _ in range(n)]]
    for _ in range(1, n):
        upper = rows[-1]
        up_suffix = [sum(upper[p:]) for p in range(n + 1)]
        row = [0] * n
        acc = 0
        for p in range(n - 1, -1, -1):
            room = up_suffix[p + 1] - acc
            v = rng.randint(0, room) if room > 0 else 0
            if rng.random() < 0.3:
                v = 0
            row[p] = v
            acc += v
        rows.append(row)
    return rows


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -5, hi: int = 5) -> list[list[int]]:
    if rng.random() < 0.4 and min(rows, cols) > 1:
        # Force rank deficiency through a product of thinner factors.
        k = rng.randint(1, min(rows, cols) - 1)
        A = [[rng.randint(lo, hi) for _ in range(k)] for _ in range(rows)]
        B = [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(k)]
        return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(cols)] for i in range(rows)]
    return [[rng.randint(lo, hi) if rng.random() < 0.7 else 0 for _ in range(cols)] for _ in range(rows)]
