"""Plücker coordinates, Plücker monomials of fillings, and leading terms.

``Delta_I`` is the top-justified ``|I| x |I|`` minor of the generic matrix
``[z[i,j]]`` on column set ``I``.  A filling of a Young diagram gives one
factor per column; a row-strict composition tableau gives one factor per
row.  Index lists are stored sorted ascending, which fixes the sign of each
factor.

The term order is lexicographic with precedence
``z[1,n] > z[1,n-1] > ... > z[1,1] > z[2,n] > ... > z[n,1]``.  Row 1 of a
minor then takes its largest column, row 2 the next largest and so on, so
the anti-diagonal product is the initial term of every minor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from typing import Literal, Sequence

from .poly import Monomial, Polynomial, determinant
from .tableaux import Filling

Orientation = Literal["row", "column"]


@dataclass(frozen=True)
class PlueckerMonomialSpec:
    """Product of Plücker coordinates, one per index list in ``factors``."""

    factors: tuple[tuple[int, ...], ...]
    n: int
    orientation: Orientation = "row"

    def __post_init__(self) -> None:
        factors = tuple(tuple(sorted(int(c) for c in f)) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        if self.orientation not in ("row", "column"):
            raise ValueError(f"orientation must be 'row' or 'column', got {self.orientation!r}")
        for f in factors:
            if not f:
                raise ValueError("empty index list")
            if len(f) > self.n:
                raise ValueError(f"index list {f} longer than n={self.n}")
            if f[0] < 1 or f[-1] > self.n:
                raise ValueError(f"index list {f} has entries outside [1, {self.n}]")

    @property
    def vanishes(self) -> bool:
        """True when some factor repeats an index."""
        return any(len(set(f)) != len(f) for f in self.factors)

    def to_json(self) -> dict:
        return {"factors": [list(f) for f in self.factors], "orientation": self.orientation}

    @classmethod
    def from_json(cls, data: dict | str, n: int) -> PlueckerMonomialSpec:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(f) for f in data["factors"]), n, data.get("orientation", "row"))

    def __str__(self) -> str:
        return "*".join("D[" + ",".join(map(str, f)) + "]" for f in self.factors) or "1"


def monomial_from_tab(f: Filling) -> PlueckerMonomialSpec:
    """One factor per column of a Young-diagram filling."""
    return PlueckerMonomialSpec(tuple(f.columns()), f.n, "column")


def monomial_from_rsct(y: Filling) -> PlueckerMonomialSpec:
    """One factor per row of a composition-diagram filling."""
    return PlueckerMonomialSpec(y.rows, y.n, "row")


def expand(spec: PlueckerMonomialSpec) -> Polynomial:
    if spec.vanishes:
        return Polynomial(spec.n)
    return reduce(
        lambda acc, f: acc * determinant(f, spec.n),
        spec.factors,
        Polynomial.constant(spec.n),
    )


@dataclass(frozen=True)
class AntidiagonalOrder:
    n: int

    def key(self, m: Monomial) -> tuple[int, ...]:
        if m.n != self.n:
            raise ValueError(f"monomial over n={m.n} compared under order for n={self.n}")
        return m.exps

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as ``a`` is below, equal to, or above ``b``."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def compare(a: Monomial, b: Monomial, order: AntidiagonalOrder | None = None) -> int:
    return (order or AntidiagonalOrder(a.n)).compare(a, b)


def leading_term(p: Polynomial, order: AntidiagonalOrder | None = None) -> Monomial:
    """Largest monomial of ``p`` under the anti-diagonal order."""
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    if order is not None and order.n != p.n:
        raise ValueError(f"order for n={order.n} applied to polynomial over n={p.n}")
    return p.leading()[0]


def antidiagonal_monomial(cols: Sequence[int], n: int) -> Monomial:
    """``prod z[i, a_i]`` with ``a_1 > a_2 > ...`` the columns sorted descending."""
    return Monomial.from_triples(n, [(i, c) for i, c in enumerate(sorted(cols, reverse=True), 1)])


def initial_monomial(y: Filling) -> Monomial:
    """Leading monomial of the expanded Plücker monomial of an RSCT."""
    return leading_term(expand(monomial_from_rsct(y)))


def parse_factors(raw: str) -> list[tuple[int, ...]]:
    """Parse ``"1,2,3;3,7;4,7,8"`` (or a JSON list of lists)."""
    text = raw.strip()
    if text.startswith("["):
        return [tuple(int(c) for c in f) for f in json.loads(text)]
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(tuple(int(c) for c in chunk.split(",")))
        except ValueError as exc:
            raise ValueError(f"invalid index list {chunk!r}") from exc
    return out
