"""Exact linear algebra: GF(2) elimination on int bitsets and integer Smith form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import FalsificationError, ValidationError


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    entries: frozenset[tuple[int, int]]

    def __post_init__(self):
        entries = frozenset(self.entries)
        object.__setattr__(self, "entries", entries)
        for r, c in entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValidationError(f"entry {(r, c)} outside {self.rows}x{self.cols}")

    @classmethod
    def identity(cls, m: int) -> BinaryMatrix:
        return cls(m, m, frozenset((i, i) for i in range(m)))

    def row_bits(self) -> list[int]:
        bits = [0] * self.rows
        for r, c in self.entries:
            bits[r] |= 1 << c
        return bits

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c in self.entries:
            dense[r][c] = 1
        return dense


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row vectors packed as ints."""
    basis: dict[int, int] = {}  # leading bit -> reduced row
    for v in rows:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


def rank_mod2(m: BinaryMatrix) -> int:
    return gf2_rank(m.row_bits())


def solve_mod2(equations: Sequence[tuple[int, int]], nvars: int) -> list[int]:
    """Solve ``mask . x = rhs`` over GF(2); each equation is ``(mask, rhs)``.

    Free variables are set to 0, so the returned solution is deterministic.
    Raises :class:`FalsificationError` when the system is inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}  # pivot column -> (mask, rhs)
    for mask, rhs in equations:
        for col, (pmask, prhs) in pivots.items():
            if (mask >> col) & 1:
                mask ^= pmask
                rhs ^= prhs
        if not mask:
            if rhs:
                raise FalsificationError("inconsistent GF(2) system")
            continue
        col = mask.bit_length() - 1
        for pc, (pmask, prhs) in list(pivots.items()):
            if (pmask >> col) & 1:
                pivots[pc] = (pmask ^ mask, prhs ^ rhs)
        pivots[col] = (mask, rhs)
    x = [0] * nvars
    # fully reduced: each pivot row holds its pivot plus free columns only
    for col, (_, rhs) in pivots.items():
        x[col] = rhs
    return x


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    f = a[i][t] // p
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    f = a[t][j] // p
                    for row in a:
                        row[j] -= f * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # a remainder smaller than the pivot survived: move it to the corner
            _, pi, pj = min(
                [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            )
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # a diagonal matrix has the same invariant factors as its gcd/lcm normalisation
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)] for row in a]
