"""Sparse polynomials with integer coefficients in the variables ``z[i,j]``.

A :class:`Monomial` keeps its ``n x n`` exponent matrix flattened in the
precedence order

    z[1,n], z[1,n-1], ..., z[1,1], z[2,n], ..., z[2,1], ..., z[n,1]

(row-major, columns descending within a row).  Lexicographic comparison of
that tuple is the anti-diagonal term order, so ``max`` over monomials and
sorting need no extra key.  Polynomials keep their terms sorted in
descending order; the leading term is the first one.
"""

from __future__ import annotations

import json
import operator
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence


def _flat_index(n: int, i: int, j: int) -> int:
    # 1-based (i, j) -> slot in precedence order
    return (i - 1) * n + (n - j)


class Monomial:
    """Monic monomial in ``z[i,j]``, ``1 <= i, j <= n``."""

    __slots__ = ("n", "exps", "_hash")

    def __init__(self, n: int, exps: Sequence[int]):
        exps = tuple(exps)
        if len(exps) != n * n:
            raise ValueError(f"expected {n * n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        self.n = n
        self.exps = exps
        self._hash = hash((n, exps))

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls(n, (0,) * (n * n))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Monomial:
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise ValueError("exponent matrix must be square")
        exps = [0] * (n * n)
        for i, row in enumerate(matrix, 1):
            for j, e in enumerate(row, 1):
                exps[_flat_index(n, i, j)] = int(e)
        return cls(n, exps)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]) -> Monomial:
        """Build from ``(i, j, e)`` or ``(i, j)`` entries (1-based); repeats add up."""
        exps = [0] * (n * n)
        for t in triples:
            i, j = int(t[0]), int(t[1])
            e = int(t[2]) if len(t) > 2 else 1
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"variable z[{i},{j}] outside n={n}")
            exps[_flat_index(n, i, j)] += e
        return cls(n, exps)

    def exponent(self, i: int, j: int) -> int:
        return self.exps[_flat_index(self.n, i, j)]

    def as_matrix(self) -> list[list[int]]:
        n = self.n
        return [[self.exponent(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def triples(self) -> list[tuple[int, int, int]]:
        """Non-zero ``(i, j, e)`` in precedence order."""
        n = self.n
        out = []
        for idx, e in enumerate(self.exps):
            if e:
                out.append((idx // n + 1, n - idx % n, e))
        return out

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return Monomial(self.n, map(operator.add, self.exps, other.exps))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.n == other.n and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        parts = []
        for i, j, e in self.triples():
            name = _var_name(self.n, i, j)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _var_name(n: int, i: int, j: int) -> str:
    return f"z{i}{j}" if n < 10 else f"z_{i},{j}"


class Polynomial:
    """Immutable sparse polynomial; terms sorted by descending monomial."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if m.n != n:
                raise ValueError(f"dimension mismatch: monomial over n={m.n} in polynomial over n={n}")
            acc[m] = acc.get(m, 0) + int(c)
        self.n = n
        self._terms = dict(
            sorted(((m, c) for m, c in acc.items() if c), key=lambda t: t[0].exps, reverse=True)
        )

    @classmethod
    def constant(cls, n: int, c: int = 1) -> Polynomial:
        return cls(n, {Monomial.one(n): c})

    @classmethod
    def variable(cls, n: int, i: int, j: int) -> Polynomial:
        return cls(n, {Monomial.from_triples(n, [(i, j)]): 1})

    @property
    def terms(self) -> list[tuple[Monomial, int]]:
        return list(self._terms.items())

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def _check(self, other: Polynomial) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.n, acc)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(m)
            if body == "1":
                text = str(mag)
            else:
                text = body if mag == 1 else f"{mag}*{body}"
            if k == 0:
                out.append(text if c > 0 else f"-{text}")
            else:
                out.append(f"{sign} {text}")
        return " ".join(out)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self._terms.items()):
            factors = []
            for i, j, e in m.triples():
                sub = f"{i}{j}" if self.n < 10 else f"{i},{j}"
                factors.append(f"z_{{{sub}}}" + (f"^{{{e}}}" if e > 1 else ""))
            body = "".join(factors)
            mag = abs(c)
            text = (str(mag) if mag != 1 or not body else "") + body
            if k == 0:
                out.append(text if c > 0 else f"-{text}")
            else:
                out.append(("- " if c < 0 else "+ ") + text)
        return " ".join(out)

    def to_json(self) -> list[dict]:
        """Term list, descending; coefficients as strings to keep big ints exact."""
        return [
            {"coeff": str(c), "exps": [list(t) for t in m.triples()]}
            for m, c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, n: int, data: list | str) -> Polynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(n, [(Monomial.from_triples(n, t["exps"]), int(t["coeff"])) for t in data])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def determinant(cols: Sequence[int], n: int) -> Polynomial:
    """Minor of the generic ``n x n`` matrix on rows ``1..k`` and columns ``cols``.

    Columns are used in the order given, so swapping two of them flips the
    sign.  A repeated column gives the zero polynomial.
    """
    cols = tuple(int(c) for c in cols)
    if len(cols) > n:
        raise ValueError(f"minor of size {len(cols)} exceeds n={n}")
    if any(not 1 <= c <= n for c in cols):
        raise ValueError(f"column index outside [1, {n}] in {cols}")
    if len(set(cols)) != len(cols):
        return Polynomial(n)
    return _minor(n, cols)


@lru_cache(maxsize=4096)
def _minor(n: int, cols: tuple[int, ...]) -> Polynomial:
    k = len(cols)
    if k == 0:
        return Polynomial.constant(n)
    # Laplace expansion along the last row.
    acc: dict[Monomial, int] = {}
    for t, c in enumerate(cols):
        sign = -1 if (k - 1 + t) % 2 else 1
        var = Monomial.from_triples(n, [(k, c)])
        for m, coeff in _minor(n, cols[:t] + cols[t + 1:]):
            prod = m * var
            acc[prod] = acc.get(prod, 0) + sign * coeff
    return Polynomial(n, acc)


def column_degrees(m: Monomial) -> tuple[int, ...]:
    return tuple(sum(m.exponent(i, j) for i in range(1, m.n + 1)) for j in range(1, m.n + 1))


def row_degrees(m: Monomial) -> tuple[int, ...]:
    return tuple(sum(m.exponent(i, j) for j in range(1, m.n + 1)) for i in range(1, m.n + 1))


def multidegree_by_column(p: Polynomial) -> tuple[int, ...] | None:
    """Common column-degree vector of all terms, or ``None`` if terms disagree.

    The zero polynomial and constants give the zero vector.
    """
    if p.is_zero():
        return (0,) * p.n
    degs = {column_degrees(m) for m in p.monomials()}
    return degs.pop() if len(degs) == 1 else None


def multidegree_by_row(p: Polynomial) -> tuple[int, ...] | None:
    if p.is_zero():
        return (0,) * p.n
    degs = {row_degrees(m) for m in p.monomials()}
    return degs.pop() if len(degs) == 1 else None
