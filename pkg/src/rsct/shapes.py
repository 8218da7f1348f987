"""Partitions, compositions and the shape maps between them.

A composition is read as a composition diagram with ``parts[i]`` cells in
row ``i``.  ``rearrange`` sorts a composition into a partition and
``transpose`` swaps rows and columns of a Young diagram; the fiber
``composition_fiber(lam, n)`` collects every composition whose
sorted-then-transposed shape is ``lam``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence


def _as_parts(parts: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(p) for p in parts)
    # Trailing zeros are padding; interior zeros are not allowed.
    while out and out[-1] == 0:
        out = out[:-1]
    if any(p <= 0 for p in out):
        raise ValueError(f"parts must be positive integers, got {tuple(parts)}")
    return out


@dataclass(frozen=True, eq=False)
class CompositionShape:
    """Finite sequence of positive integers; row ``i`` has ``parts[i]`` cells.

    ``n_bound`` is the ambient dimension.  When given, every part must be at
    most ``n_bound``.  It does not take part in equality.
    """

    parts: tuple[int, ...]
    n_bound: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", _as_parts(self.parts))
        if self.n_bound is not None:
            if self.n_bound < 1:
                raise ValueError("n_bound must be positive")
            if any(p > self.n_bound for p in self.parts):
                raise ValueError(f"composition {self.parts} has a part larger than n={self.n_bound}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CompositionShape):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True, eq=False)
class PartitionShape(CompositionShape):
    """Weakly decreasing composition.

    ``n_bound`` bounds the number of parts, not their size.
    """

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", _as_parts(self.parts))
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {self.parts}")
        if self.n_bound is not None:
            if self.n_bound < 1:
                raise ValueError("n_bound must be positive")
            if len(self.parts) > self.n_bound:
                raise ValueError(f"partition {self.parts} has more than n={self.n_bound} parts")


def length(shape: CompositionShape | Sequence[int]) -> int:
    """Number of rows."""
    return len(tuple(shape))


def width(shape: CompositionShape | Sequence[int]) -> int:
    """Largest part (0 for the empty shape)."""
    return max(tuple(shape), default=0)


def rearrange(alpha: CompositionShape | Sequence[int]) -> PartitionShape:
    return PartitionShape(tuple(sorted(alpha, reverse=True)))


def transpose(lam: PartitionShape | Sequence[int]) -> PartitionShape:
    parts = tuple(lam)
    if not parts:
        return PartitionShape(())
    return PartitionShape(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of ``items`` in lexicographic order."""
    pool = sorted(items)
    counts: dict[int, int] = {}
    for x in pool:
        counts[x] = counts.get(x, 0) + 1
    values = sorted(counts)
    prefix: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(prefix) == len(pool):
            yield tuple(prefix)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec()
                prefix.pop()
                counts[v] += 1

    return rec()


def composition_fiber(lam: PartitionShape | Sequence[int], n: int) -> list[CompositionShape]:
    """All compositions ``alpha`` with parts at most ``n`` and ``transpose(rearrange(alpha)) == lam``.

    Output is in lexicographic order of the part sequence.  Empty when some
    column of ``lam`` is longer than ``n``.
    """
    cols = transpose(lam).parts
    if any(c > n for c in cols):
        return []
    return [CompositionShape(p, n_bound=n) for p in multiset_permutations(cols)]


def partitions_of(m: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[PartitionShape]:
    """Partitions of ``m`` in reverse lexicographic order."""

    def rec(rest: int, cap: int, slots: int | None) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for head in range(min(rest, cap), 0, -1):
            for tail in rec(rest - head, head, None if slots is None else slots - 1):
                yield (head,) + tail

    for p in rec(m, m if max_part is None else max_part, max_length):
        yield PartitionShape(p)


def compositions_of(m: int, max_part: int | None = None) -> Iterator[CompositionShape]:
    """Compositions of ``m`` with every part at most ``max_part``, lexicographic."""
    cap = m if max_part is None else max_part

    def rec(rest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for head in range(1, min(rest, cap) + 1):
            for tail in rec(rest - head):
                yield (head,) + tail

    for p in rec(m):
        yield CompositionShape(p)


def parse_shape(raw: str) -> tuple[int, ...]:
    """Parse ``"4,2,3"`` (or a JSON array) into a tuple of ints."""
    text = raw.strip().strip("[]()")
    if not text:
        return ()
    try:
        return tuple(int(chunk) for chunk in text.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid shape: {raw!r}") from exc
