"""Schubert cells of Gr(k, n) as Young diagrams and the weak Bruhat graph.

Conventions
-----------
A cell is a partition ``rows = (l_1, ..., l_k)`` listed bottom-to-top, so the
rows are weakly *increasing* and ``0 <= l_j <= n - k``.  The Schubert symbol
(pivot set) is ``i_j = l_j + j``.  Boxes are addressed ``(row, col)`` with
row 1 at the bottom and col 1 at the left; box ``(r, c)`` carries the simple
reflection ``s_{r + c - 1}``.  Adding that box to a diagram is the cover
``w -> s_{r+c-1} w`` in the weak order.

Reduced words are stored in *application order*: the first letter is the
first box added along a path from the empty diagram.  As a product of simple
reflections the word reads right to left, see :func:`word_as_product`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

from .errors import CapacityError, RangeError, ValidationError

DEFAULT_CAPACITY = 16


@dataclass(frozen=True, order=True)
class GrassmannShape:
    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise ValidationError(f"k and n must be integers, got {self.k!r}, {self.n!r}")
        if not 1 <= self.k < self.n:
            raise RangeError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def num_cells(self) -> int:
        return comb(self.n, self.k)

    def check_capacity(self, capacity: int | None = DEFAULT_CAPACITY) -> None:
        if capacity is not None and self.n > capacity:
            raise CapacityError(
                f"Gr({self.k},{self.n}) exceeds the size guard n <= {capacity}"
            )

    def __str__(self):
        return f"Gr({self.k},{self.n})"


@dataclass(frozen=True, order=True)
class Partition:
    """Young diagram with rows listed bottom-to-top (weakly increasing)."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not isinstance(r, int) or r < 0 for r in rows):
            raise ValidationError(f"rows must be nonnegative integers: {rows}")
        if any(a > b for a, b in zip(rows, rows[1:])):
            raise ValidationError(f"rows must weakly increase bottom-to-top: {rows}")

    @classmethod
    def empty(cls, k: int) -> Partition:
        return cls((0,) * k)

    @classmethod
    def from_top_rows(cls, top_rows: Sequence[int], k: int) -> Partition:
        """Build from the usual top-first listing, e.g. ``(3, 1)`` with k=2.

        Missing rows are padded with zeros at the bottom.
        """
        top = [r for r in top_rows if r]
        if len(top) > k:
            raise ValidationError(f"{tuple(top_rows)} has more than {k} rows")
        return cls(tuple([0] * (k - len(top)) + top[::-1]))

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    def top_rows(self) -> tuple[int, ...]:
        """Nonzero rows, longest first (display order)."""
        return tuple(r for r in reversed(self.rows) if r)

    def fits(self, shape: GrassmannShape) -> bool:
        return len(self.rows) == shape.k and (not self.rows or self.rows[-1] <= shape.width)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.rows, start=1):
            for c in range(1, length + 1):
                yield r, c

    def addable_rows(self, width: int) -> list[int]:
        """Rows (1-based) that can receive one more box inside a k x width box."""
        out = []
        k = len(self.rows)
        for r in range(1, k + 1):
            cur = self.rows[r - 1]
            bound = self.rows[r] if r < k else width
            if cur < bound:
                out.append(r)
        return out

    def add_box(self, row: int) -> Partition:
        rows = list(self.rows)
        rows[row - 1] += 1
        return Partition(tuple(rows))

    def contains(self, other: Partition) -> bool:
        return all(a >= b for a, b in zip(self.rows, other.rows))

    def __str__(self):
        top = self.top_rows()
        return "(" + ",".join(map(str, top)) + ")" if top else "()"


@dataclass(frozen=True)
class SchubertSymbol:
    pivots: tuple[int, ...]

    def __post_init__(self):
        pivots = tuple(self.pivots)
        object.__setattr__(self, "pivots", pivots)
        if any(not isinstance(p, int) for p in pivots):
            raise ValidationError(f"pivots must be integers: {pivots}")
        if any(a >= b for a, b in zip(pivots, pivots[1:])):
            raise ValidationError(f"pivots must be strictly increasing: {pivots}")


@dataclass(frozen=True)
class CoverEdge:
    source: Partition
    target: Partition
    box_row: int
    box_col: int

    @property
    def reflection_index(self) -> int:
        return self.box_row + self.box_col - 1


@dataclass(frozen=True)
class BruhatGraph:
    shape: GrassmannShape
    levels: tuple[tuple[Partition, ...], ...]
    edges: tuple[CoverEdge, ...]

    @cached_property
    def position(self) -> dict[Partition, int]:
        """Index of each cell inside its level (canonical column order)."""
        return {lam: i for level in self.levels for i, lam in enumerate(level)}

    @cached_property
    def out_edges(self) -> dict[Partition, tuple[CoverEdge, ...]]:
        out: dict[Partition, list[CoverEdge]] = {lam: [] for level in self.levels for lam in level}
        for e in self.edges:
            out[e.source].append(e)
        return {lam: tuple(es) for lam, es in out.items()}

    def cells(self) -> Iterator[Partition]:
        for level in self.levels:
            yield from level

    @cached_property
    def _edges_by_degree(self) -> dict[int, list[CoverEdge]]:
        out: dict[int, list[CoverEdge]] = {}
        for e in self.edges:
            out.setdefault(e.source.size, []).append(e)
        return out

    def edges_from_degree(self, degree: int) -> list[CoverEdge]:
        return list(self._edges_by_degree.get(degree, ()))

    @property
    def top_cell(self) -> Partition:
        return self.levels[-1][0]


def _check_fits(lam: Partition, shape: GrassmannShape) -> None:
    if not lam.fits(shape):
        raise ValidationError(f"{lam.rows} does not fit in the {shape.k}x{shape.width} box")


def partitions_in_box(k: int, width: int) -> list[tuple[int, ...]]:
    """All weakly increasing k-tuples with entries in 0..width, lexicographic."""
    return list(itertools.combinations_with_replacement(range(width + 1), k))


def _levels(shape: GrassmannShape) -> list[list[Partition]]:
    levels: list[list[Partition]] = [[] for _ in range(shape.dimension + 1)]
    for t in partitions_in_box(shape.k, shape.width):
        levels[sum(t)].append(Partition(t))
    return levels


def enumerate_cells(shape: GrassmannShape, degree: int) -> list[Partition]:
    if not 0 <= degree <= shape.dimension:
        raise RangeError(f"degree {degree} outside 0..{shape.dimension} for {shape}")
    return [Partition(t) for t in partitions_in_box(shape.k, shape.width) if sum(t) == degree]


def all_cells(shape: GrassmannShape) -> list[Partition]:
    """Every cell, ordered by degree and lexicographically within a degree."""
    return [lam for level in _levels(shape) for lam in level]


def partition_to_symbol(lam: Partition, shape: GrassmannShape) -> SchubertSymbol:
    _check_fits(lam, shape)
    return SchubertSymbol(tuple(l + j for j, l in enumerate(lam.rows, start=1)))


def symbol_to_partition(symbol: SchubertSymbol, shape: GrassmannShape) -> Partition:
    pivots = symbol.pivots
    if len(pivots) != shape.k:
        raise ValidationError(f"symbol {pivots} must have {shape.k} entries")
    if pivots and (pivots[0] < 1 or pivots[-1] > shape.n):
        raise ValidationError(f"symbol {pivots} not contained in 1..{shape.n}")
    return Partition(tuple(i - j for j, i in enumerate(pivots, start=1)))


def build_bruhat_graph(
    shape: GrassmannShape, *, capacity: int | None = DEFAULT_CAPACITY
) -> BruhatGraph:
    shape.check_capacity(capacity)
    levels = tuple(tuple(level) for level in _levels(shape))
    edges = []
    for level in levels:
        for lam in level:
            for r in reversed(lam.addable_rows(shape.width)):
                c = lam.rows[r - 1] + 1
                edges.append(CoverEdge(lam, lam.add_box(r), r, c))
    return BruhatGraph(shape, levels, tuple(edges))


def apply_word(word: Sequence[int], shape: GrassmannShape) -> Partition:
    """Follow ``word`` as a path from the empty diagram through the lattice.

    Each letter must add exactly one box carrying that label; otherwise the
    word is not a reduced word of a Grassmannian permutation.
    """
    lam = Partition.empty(shape.k)
    for step, i in enumerate(word):
        for r in lam.addable_rows(shape.width):
            if r + lam.rows[r - 1] == i:
                lam = lam.add_box(r)
                break
        else:
            raise ValidationError(
                f"letter s_{i} at position {step} adds no box to {lam.rows} in {shape}"
            )
    return lam


def canonical_reduced_word(lam: Partition, shape: GrassmannShape) -> tuple[int, ...]:
    """Row-by-row word, top row first, each row read left to right.

    As a product this is ``w = w_1 w_2 ... w_k`` with
    ``w_j = s_{i_j - 1} ... s_j``.
    """
    _check_fits(lam, shape)
    word: list[int] = []
    for j in range(shape.k, 0, -1):
        word.extend(range(j, j + lam.rows[j - 1]))
    return tuple(word)


def word_as_product(word: Sequence[int]) -> str:
    """Render an application-order word as a product, e.g. ``s1 s4 s3 s2``."""
    return " ".join(f"s{i}" for i in reversed(word)) or "e"


def lattice_paths(lam: Partition, shape: GrassmannShape, limit: int) -> list[tuple[int, ...]]:
    """Up to ``limit`` reduced words of ``lam``, one per saturated chain from the empty diagram.

    Depth-first, preferring higher rows, so the first word is the canonical one.
    """
    _check_fits(lam, shape)
    if limit < 1:
        raise RangeError("limit must be positive")
    out: list[tuple[int, ...]] = []
    word: list[int] = []

    def dfs(mu: Partition) -> None:
        if len(out) >= limit:
            return
        if mu == lam:
            out.append(tuple(word))
            return
        for r in reversed(mu.addable_rows(shape.width)):
            if mu.rows[r - 1] < lam.rows[r - 1]:
                word.append(r + mu.rows[r - 1])
                dfs(mu.add_box(r))
                word.pop()
                if len(out) >= limit:
                    return

    dfs(Partition.empty(shape.k))
    return out
