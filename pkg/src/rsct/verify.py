"""Desk-scale checks of the RSCT basis theorem and its supporting identities.

Each ``check_*`` function returns a :class:`VerificationReport`; a failing
report always carries a witness.
"""

from __future__ import annotations

import functools
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .linalg import bareiss_echelon
from .patterns import (
    PlacementError,
    monomial_to_pattern,
    pattern_to_tableau,
    tableau_to_pattern,
    validate_ad,
)
from .pluecker import expand, initial_monomial, leading_term, monomial_from_rsct, monomial_from_tab
from .poly import multidegree_by_column
from .shapes import PartitionShape, composition_fiber, partitions_of, transpose
from .tableaux import Filling, content, enumerate_rsct, enumerate_ssyt, iter_rsct

MAX_NONZEROS = 200_000
MAX_ROWS = 5_000


class GuardExceeded(RuntimeError):
    """A check would build a matrix beyond the configured size limits."""

    def __init__(self, message: str, sizing: dict):
        super().__init__(message)
        self.sizing = sizing


@dataclass(frozen=True)
class SymmetricPolynomial:
    """Generating polynomial in ``x_1..x_n``: exponent vector -> positive count."""

    n: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_counts(cls, n: int, counts: Counter | dict) -> SymmetricPolynomial:
        return cls(n, tuple(sorted(((tuple(k), int(v)) for k, v in counts.items() if v), reverse=True)))

    @classmethod
    def from_fillings(cls, n: int, fillings: Iterable[Filling]) -> SymmetricPolynomial:
        return cls.from_counts(n, Counter(content(f) for f in fillings))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __add__(self, other: SymmetricPolynomial) -> SymmetricPolynomial:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        acc = Counter(self.as_dict())
        acc.update(other.as_dict())
        return SymmetricPolynomial.from_counts(self.n, acc)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.terms:
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps, 1) if e) or "1"
            out.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(out)


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    passed: bool
    counts: dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError(f"failing report for {self.check} needs a witness")

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "outcome": "pass" if self.passed else "fail",
            "counts": self.counts,
            "witness": self.witness,
            "notes": self.notes,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _partition(lam: PartitionShape | Sequence[int]) -> PartitionShape:
    return lam if isinstance(lam, PartitionShape) else PartitionShape(tuple(lam))


def schur_polynomial(lam: PartitionShape | Sequence[int], n: int) -> SymmetricPolynomial:
    return SymmetricPolynomial.from_fillings(n, enumerate_ssyt(lam, n))


def row_strict_polynomial(alpha: Sequence[int], n: int) -> SymmetricPolynomial:
    return SymmetricPolynomial.from_fillings(n, enumerate_rsct(alpha, n))


def hook_content_dimension(lam: PartitionShape | Sequence[int], n: int) -> int:
    """Number of SSYT of shape ``lam`` with entries in ``1..n``, by the hook content formula."""
    parts = tuple(lam)
    cols = transpose(parts).parts
    num, den = 1, 1
    for r, p in enumerate(parts):
        for c in range(p):
            num *= n + c - r
            den *= (p - c - 1) + (cols[c] - r - 1) + 1
    if num <= 0:
        return 0
    q, rem = divmod(num, den)
    assert rem == 0, (parts, n)
    return q


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - t0
        return report

    return wrapper


@_timed
def check_schur_identity(lam: PartitionShape | Sequence[int], n: int) -> VerificationReport:
    """Schur polynomial equals the sum of row-strict quasisymmetric polynomials over the fiber."""
    lam = _partition(lam)
    fiber = composition_fiber(lam, n)
    lhs = schur_polynomial(lam, n)
    rhs = SymmetricPolynomial.from_counts(n, {})
    for alpha in fiber:
        rhs = rhs + row_strict_polynomial(alpha, n)
    passed = lhs == rhs
    witness = None
    if not passed:
        a, b = lhs.as_dict(), rhs.as_dict()
        diff = {str(list(k)): [a.get(k, 0), b.get(k, 0)] for k in sorted(set(a) | set(b)) if a.get(k, 0) != b.get(k, 0)}
        witness = {"differing_coefficients": diff}
    return VerificationReport(
        "identity",
        {"lambda": list(lam.parts), "n": n},
        passed,
        {"fiber_size": len(fiber), "terms": len(lhs.terms), "ssyt": lhs.total(), "rsct": rhs.total()},
        witness,
    )


@_timed
def check_cardinality(lam: PartitionShape | Sequence[int], n: int) -> VerificationReport:
    """#SSYT(lam) equals the total number of RSCT over the fiber of ``lam``."""
    lam = _partition(lam)
    fiber = composition_fiber(lam, n)
    ssyt = len(enumerate_ssyt(lam, n))
    per_alpha = {",".join(map(str, a.parts)): len(enumerate_rsct(a, n)) for a in fiber}
    rsct = sum(per_alpha.values())
    dim = hook_content_dimension(lam, n)
    passed = ssyt == rsct == dim
    witness = None if passed else {"ssyt": ssyt, "rsct": rsct, "hook_content": dim}
    return VerificationReport(
        "cardinality",
        {"lambda": list(lam.parts), "n": n},
        passed,
        {"ssyt": ssyt, "rsct": rsct, "hook_content": dim, "per_composition": per_alpha},
        witness,
    )


def sigma_tableaux(lam: PartitionShape | Sequence[int], n: int) -> list[Filling]:
    """All RSCT over the compositions in the fiber of ``lam``."""
    return [y for alpha in composition_fiber(lam, n) for y in enumerate_rsct(alpha, n)]


@_timed
def check_basis(
    lam: PartitionShape | Sequence[int],
    n: int,
    max_rows: int = MAX_ROWS,
    max_nonzeros: int = MAX_NONZEROS,
    compare_ssyt: bool = True,
) -> VerificationReport:
    """Certify that the RSCT Plücker monomials of ``lam`` are a basis.

    Sub-checks:

    (a) their number equals the hook content dimension;
    (b) their leading monomials are pairwise distinct;
    (c) the coefficient matrix has full row rank (fraction-free elimination);
    (d) restricted to leading-monomial columns, that matrix is upper
        triangular with diagonal entries +1 or -1.  The sign comes from
        storing each factor's columns in ascending order: the anti-diagonal
        term of a k x k minor then carries sign (-1)^(k(k-1)/2).

    With ``compare_ssyt`` the SSYT Plücker monomials are stacked underneath
    and the joint rank must not grow, i.e. both sets span the same space.
    """
    lam = _partition(lam)
    params = {"lambda": list(lam.parts), "n": n}
    tableaux = sigma_tableaux(lam, n)
    dim = hook_content_dimension(lam, n)
    if len(tableaux) > max_rows:
        raise GuardExceeded(
            f"{len(tableaux)} rows exceeds guard {max_rows}",
            {**params, "rows": len(tableaux), "max_rows": max_rows},
        )
    polys = [expand(monomial_from_rsct(y)) for y in tableaux]
    nonzeros = sum(len(p) for p in polys)
    if nonzeros > max_nonzeros:
        raise GuardExceeded(
            f"{nonzeros} non-zero entries exceeds guard {max_nonzeros}",
            {**params, "rows": len(tableaux), "nonzeros": nonzeros, "max_nonzeros": max_nonzeros},
        )
    counts: dict[str, Any] = {"sigma": len(tableaux), "dimension": dim, "nonzeros": nonzeros}
    failures: dict[str, Any] = {}

    # (a)
    size_ok = len(tableaux) == dim
    if not size_ok:
        failures["size"] = {"sigma": len(tableaux), "dimension": dim}

    # (b)
    leads = [leading_term(p) for p in polys]
    first_seen: dict = {}
    clash = None
    for idx, m in enumerate(leads):
        if m in first_seen and clash is None:
            clash = (first_seen[m], idx)
        first_seen.setdefault(m, idx)
    distinct_ok = clash is None
    if not distinct_ok:
        a, b = clash
        failures["leading_terms"] = {
            "tableaux": [tableaux[a].to_json(), tableaux[b].to_json()],
            "monomial": str(leads[a]),
        }
    counts["distinct_leading_terms"] = len(first_seen)

    # Rows by descending leading term, columns by descending monomial.
    order = sorted(range(len(polys)), key=lambda i: leads[i].exps, reverse=True)
    columns = sorted({m for p in polys for m in p.monomials()}, key=lambda m: m.exps, reverse=True)
    col_index = {m: c for c, m in enumerate(columns)}
    matrix = []
    for i in order:
        row = [0] * len(columns)
        for m, c in polys[i]:
            row[col_index[m]] = c
        matrix.append(row)
    counts["columns"] = len(columns)

    # (c)
    ech = bareiss_echelon(matrix) if matrix else None
    rank = ech.rank if ech else 0
    counts["rank"] = rank
    rank_ok = rank == len(polys)
    if not rank_ok:
        failures["rank"] = {
            "rank": rank,
            "rows": len(polys),
            "dependent": [tableaux[order[r]].to_json() for r in ech.dependent_rows],
        }

    # (d)
    lead_cols = [col_index[leads[i]] for i in order]
    tri_ok = True
    diag = []
    for r, row in enumerate(matrix):
        diag.append(row[lead_cols[r]])
        if any(row[lead_cols[s]] for s in range(r)):
            tri_ok = False
            failures.setdefault("triangularity", {"row": r, "tableau": tableaux[order[r]].to_json()})
    if any(d not in (1, -1) for d in diag):
        tri_ok = False
        failures.setdefault("diagonal", {"entries": sorted(set(diag))})
    counts["diagonal_signs"] = {"+1": diag.count(1), "-1": diag.count(-1)}

    passed = size_ok and distinct_ok and rank_ok and tri_ok

    if compare_ssyt:
        ssyt_polys = [expand(monomial_from_tab(t)) for t in enumerate_ssyt(lam, n)]
        extra = sorted({m for p in ssyt_polys for m in p.monomials()} - set(col_index), key=lambda m: m.exps, reverse=True)
        for m in extra:
            col_index[m] = len(col_index)
        width = len(col_index)
        joint = [row + [0] * (width - len(row)) for row in matrix]
        for p in ssyt_polys:
            row = [0] * width
            for m, c in p:
                row[col_index[m]] = c
            joint.append(row)
        joint_rank = bareiss_echelon(joint).rank if joint else 0
        counts["ssyt"] = len(ssyt_polys)
        counts["joint_rank"] = joint_rank
        if joint_rank != rank:
            passed = False
            failures["span"] = {"rank": rank, "joint_rank": joint_rank}

    notes = ["diagonal is +-1: factors use ascending column order"]
    return VerificationReport("basis", params, passed, counts, failures or None, notes)


@_timed
def check_roundtrip(n: int, max_cells: int) -> VerificationReport:
    """Leading monomial -> pattern -> tableau recovers every RSCT.

    Along the way: each pattern passes ``validate_ad`` and equals the
    column-content matrix of the tableau, so its column sums are the content
    and its row sums the column lengths.
    """
    checked = 0
    failures = []
    for y in iter_rsct(n, max_cells):
        checked += 1
        lead = initial_monomial(y)
        matrix = lead.as_matrix()
        problem = None
        if not validate_ad(matrix):
            problem = "pattern invalid"
        elif tuple(map(tuple, matrix)) != tableau_to_pattern(y):
            problem = "pattern differs from column contents"
        elif [sum(col) for col in zip(*matrix)] != list(content(y)):
            problem = "column sums differ from content"
        elif [sum(row) for row in matrix] != [len(y.column(i)) for i in range(n)]:
            problem = "row sums differ from column lengths"
        else:
            try:
                back = pattern_to_tableau(monomial_to_pattern(lead))
            except PlacementError as exc:
                problem = f"placement failed: {exc}"
            else:
                if back.rows != y.rows:
                    problem = "round trip differs"
        if problem:
            failures.append({"tableau": y.to_json(), "problem": problem, "matrix": matrix})
            if len(failures) >= 10:
                break
    passed = not failures
    return VerificationReport(
        "roundtrip",
        {"n": n, "max_cells": max_cells},
        passed,
        {"rsct": checked, "failures": len(failures)},
        failures or None,
    )


@_timed
def check_rigidity(n: int, max_cells: int) -> VerificationReport:
    """Per-column multisets of entries determine an RSCT."""
    seen: dict[tuple, Filling] = {}
    clashes = []
    total = 0
    for y in iter_rsct(n, max_cells):
        total += 1
        key = tuple(tuple(sorted(c)) for c in y.columns())
        if key in seen:
            clashes.append([seen[key].to_json(), y.to_json()])
        else:
            seen[key] = y
    passed = not clashes
    return VerificationReport(
        "rigidity",
        {"n": n, "max_cells": max_cells},
        passed,
        {"rsct": total, "distinct_column_contents": len(seen)},
        clashes[:10] or None,
    )


@_timed
def check_weights(n: int, max_cells: int) -> VerificationReport:
    """Column multidegree of each expanded RSCT Plücker monomial equals its content."""
    failures = []
    total = 0
    for y in iter_rsct(n, max_cells):
        total += 1
        deg = multidegree_by_column(expand(monomial_from_rsct(y)))
        if deg != content(y):
            failures.append({"tableau": y.to_json(), "multidegree": None if deg is None else list(deg)})
    return VerificationReport(
        "weights",
        {"n": n, "max_cells": max_cells},
        not failures,
        {"rsct": total},
        failures[:10] or None,
    )


def partitions_up_to(max_m: int, n: int) -> list[PartitionShape]:
    return [lam for m in range(1, max_m + 1) for lam in partitions_of(m, max_length=n)]
