"""Incidence graphs and integral (co)homology of real Grassmannians.

The cellular coboundary of Gr(k, n) joins a cell only to the cells one box
larger, with incidence number 0 or +-2.  A cover edge is *double* (incidence
+-2) when the weight of the diagram does not change across it: ``eta`` for
constant coefficients, ``eta*`` for the twisted local system.

Two routes compute the groups:

* the fast path halves the coboundary and reduces mod 2; with ``c_j`` cells
  and ``r_j = rank_2(delta_j / 2)``, ``H^j = Z^(c_j - r_j - r_{j-1}) + Z_2^r_{j-1}``;
* the oracle fixes explicit signs (solved so that ``delta o delta = 0``),
  builds the integer coboundaries and takes Smith normal forms.

The fast path assumes the halved coboundaries have unit invariant factors;
the oracle is what confirms it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .checkered import FillVariant, box_letter, weight
from .errors import FalsificationError, RangeError, ValidationError
from .linalg import BinaryMatrix, int_matmul, rank_mod2, smith_normal_form, solve_mod2
from .schubert import DEFAULT_CAPACITY, BruhatGraph, CoverEdge, GrassmannShape, build_bruhat_graph

ORACLE_CAPACITY = 10

FAST_PATH = "f2-fast-path"
SNF_ORACLE = "snf-oracle"


class EdgeClass(enum.Enum):
    SINGLE = "single"
    DOUBLE = "double"


class Coefficients(enum.Enum):
    CONSTANT = "constant"
    TWISTED = "twisted"

    @property
    def variant(self) -> FillVariant:
        return FillVariant.STANDARD if self is Coefficients.CONSTANT else FillVariant.SHIFTED


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic torsion of the listed orders."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(sorted(self.torsion))
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0 or any(t < 2 for t in torsion):
            raise ValidationError(f"bad group data: rank {self.free_rank}, torsion {torsion}")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValidationError(f"torsion {torsion} is not an invariant-factor chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["ℤ"] * self.free_rank + [f"ℤ{_subscript(t)}" for t in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


def _subscript(n: int) -> str:
    return str(n).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))


@dataclass(frozen=True)
class CohomologyTable:
    shape: GrassmannShape
    coefficients: Coefficients
    groups: tuple[AbelianGroup, ...]
    provenance: str
    indexing: str = "cohomological"
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.groups) != self.shape.dimension + 1:
            raise ValueError("table length must be k(n-k)+1")

    @property
    def free_ranks(self) -> list[int]:
        return [g.free_rank for g in self.groups]

    def same_groups(self, other: CohomologyTable) -> bool:
        return self.groups == other.groups

    def __str__(self):
        sym = "H^" if self.indexing == "cohomological" else "H_"
        return "\n".join(f"{sym}{j} = {g}" for j, g in enumerate(self.groups))


@dataclass(frozen=True)
class WeightedLattice:
    graph: BruhatGraph
    variant: FillVariant
    edge_class: dict[CoverEdge, EdgeClass]

    @property
    def shape(self) -> GrassmannShape:
        return self.graph.shape

    @property
    def double_edges(self) -> list[CoverEdge]:
        return [e for e in self.graph.edges if self.edge_class[e] is EdgeClass.DOUBLE]

    def is_double(self, e: CoverEdge) -> bool:
        return self.edge_class[e] is EdgeClass.DOUBLE


@dataclass(frozen=True)
class SignedIncidenceMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int]

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense


@lru_cache(maxsize=64)
def _graph(shape: GrassmannShape, capacity: int | None) -> BruhatGraph:
    return build_bruhat_graph(shape, capacity=capacity)


def classify_edges(
    shape: GrassmannShape,
    variant: FillVariant,
    *,
    capacity: int | None = DEFAULT_CAPACITY,
) -> WeightedLattice:
    graph = _graph(shape, capacity)
    w = {lam: weight(lam, shape, variant) for lam in graph.cells()}
    classes = {}
    for e in graph.edges:
        by_weight = w[e.source] == w[e.target]
        by_letter = box_letter(e.reflection_index, shape.k, variant) == "1"
        if by_weight != by_letter:
            raise FalsificationError(f"edge {e} classified inconsistently in {shape}")
        classes[e] = EdgeClass.DOUBLE if by_weight else EdgeClass.SINGLE
    return WeightedLattice(graph, variant, classes)


def _check_degree(lattice: WeightedLattice, degree: int) -> None:
    if not 0 <= degree <= lattice.shape.dimension:
        raise RangeError(f"degree {degree} outside 0..{lattice.shape.dimension}")


def boundary_matrix_mod2(lattice: WeightedLattice, degree: int) -> BinaryMatrix:
    """``delta_degree / 2`` mod 2; rows are degree-j cells, columns degree-(j+1) cells."""
    _check_degree(lattice, degree)
    g = lattice.graph
    rows = len(g.levels[degree])
    cols = len(g.levels[degree + 1]) if degree < lattice.shape.dimension else 0
    entries = frozenset(
        (g.position[e.source], g.position[e.target])
        for e in g.edges_from_degree(degree)
        if lattice.is_double(e)
    )
    return BinaryMatrix(rows, cols, entries)


def _table_from_ranks(shape, coefficients, counts, ranks, provenance, notes=()):
    groups = []
    for j, c in enumerate(counts):
        r_in = ranks[j - 1] if j else 0
        groups.append(AbelianGroup(c - ranks[j] - r_in, (2,) * r_in))
    return CohomologyTable(shape, coefficients, tuple(groups), provenance, notes=tuple(notes))


def _as_coefficients(c: Coefficients | FillVariant) -> Coefficients:
    if isinstance(c, FillVariant):
        return Coefficients.CONSTANT if c is FillVariant.STANDARD else Coefficients.TWISTED
    return c


def cohomology(
    shape: GrassmannShape,
    variant: FillVariant | Coefficients = FillVariant.STANDARD,
    *,
    capacity: int | None = DEFAULT_CAPACITY,
) -> CohomologyTable:
    coeffs = _as_coefficients(variant)
    lattice = classify_edges(shape, coeffs.variant, capacity=capacity)
    counts = [len(level) for level in lattice.graph.levels]
    ranks = [rank_mod2(boundary_matrix_mod2(lattice, j)) for j in range(shape.dimension + 1)]
    notes = []
    if shape.n > ORACLE_CAPACITY:
        notes.append("unverified beyond oracle range")
    return _table_from_ranks(shape, coeffs, counts, ranks, FAST_PATH, notes)


def solve_signs(lattice: WeightedLattice) -> dict[CoverEdge, int]:
    """Signs on double edges making the integral coboundary square to zero.

    Every pair of cells two degrees apart must be joined by an even number
    of double-edge paths; a pair joined by two paths yields one GF(2)
    equation asking the product of the four signs to be -1.
    """
    doubles = lattice.double_edges
    index = {e: i for i, e in enumerate(doubles)}
    by_source: dict = {}
    for e in doubles:
        by_source.setdefault(e.source, []).append(e)
    paths: dict = {}
    for a in doubles:
        for b in by_source.get(a.target, ()):
            paths.setdefault((a.source, b.target), []).append((a, b))
    equations = []
    for (x, z), ps in paths.items():
        if len(ps) != 2:
            raise FalsificationError(
                f"{len(ps)} double-edge paths {x.rows} -> {z.rows} in {lattice.shape}; "
                "the coboundary cannot square to zero"
            )
        mask = 0
        for a, b in ps:
            mask ^= (1 << index[a]) ^ (1 << index[b])
        equations.append((mask, 1))
    x = solve_mod2(equations, len(doubles))
    return {e: -1 if x[index[e]] else 1 for e in doubles}


def signed_incidence_matrix(
    lattice: WeightedLattice, signs: dict[CoverEdge, int], degree: int
) -> SignedIncidenceMatrix:
    """Integer coboundary ``delta_degree`` as a (cells_j x cells_{j+1}) matrix."""
    _check_degree(lattice, degree)
    g = lattice.graph
    rows = len(g.levels[degree])
    cols = len(g.levels[degree + 1]) if degree < lattice.shape.dimension else 0
    entries = {
        (g.position[e.source], g.position[e.target]): 2 * signs[e]
        for e in g.edges_from_degree(degree)
        if lattice.is_double(e)
    }
    return SignedIncidenceMatrix(rows, cols, entries)


def cohomology_snf_oracle(
    shape: GrassmannShape,
    variant: FillVariant | Coefficients = FillVariant.STANDARD,
    *,
    max_n: int = ORACLE_CAPACITY,
) -> CohomologyTable:
    """Full integer route; raises :class:`FalsificationError` on any disagreement."""
    shape.check_capacity(max_n)
    coeffs = _as_coefficients(variant)
    lattice = classify_edges(shape, coeffs.variant, capacity=None)
    signs = solve_signs(lattice)
    top = shape.dimension
    deltas = [signed_incidence_matrix(lattice, signs, j).to_dense() for j in range(top + 1)]
    for j in range(top):
        product = int_matmul(deltas[j], deltas[j + 1])
        if any(any(row) for row in product):
            raise FalsificationError(f"delta_{j+1} o delta_{j} != 0 in {shape} ({coeffs.value})")
    factors = [smith_normal_form(d) for d in deltas]
    groups = []
    for j, level in enumerate(lattice.graph.levels):
        if any(d != 2 for d in factors[j]):
            raise FalsificationError(f"invariant factors {factors[j]} of delta_{j} in {shape}")
        incoming = factors[j - 1] if j else []
        free = len(level) - len(factors[j]) - len(incoming)
        groups.append(AbelianGroup(free, tuple(incoming)))
    table = CohomologyTable(shape, coeffs, tuple(groups), SNF_ORACLE)
    fast = cohomology(shape, coeffs, capacity=None)
    if not table.same_groups(fast):
        raise FalsificationError(
            f"oracle/fast-path mismatch for {shape} ({coeffs.value}):\n{table}\nvs\n{fast}"
        )
    return table


def homology(shape: GrassmannShape, *, capacity: int | None = DEFAULT_CAPACITY) -> CohomologyTable:
    """Integral homology by duality with constant (n even) or twisted (n odd) cohomology."""
    return reverse_to_homology(cohomology(shape, dual_coefficients(shape), capacity=capacity))


def dual_coefficients(shape: GrassmannShape) -> Coefficients:
    return Coefficients.CONSTANT if shape.n % 2 == 0 else Coefficients.TWISTED


def reverse_to_homology(table: CohomologyTable) -> CohomologyTable:
    """``H_j = H^{top - j}`` for the table with the orientation-matching coefficients."""
    if table.coefficients is not dual_coefficients(table.shape) or table.indexing != "cohomological":
        raise RangeError(
            f"{table.shape} homology is dual to {dual_coefficients(table.shape).value} cohomology"
        )
    return CohomologyTable(
        table.shape,
        table.coefficients,
        tuple(reversed(table.groups)),
        table.provenance,
        indexing="homological",
        notes=table.notes,
    )


def homology_from_cohomology(table: CohomologyTable) -> tuple[AbelianGroup, ...]:
    """Universal coefficients: ``H_j = free(H^j) + torsion(H^{j+1})``.

    Only valid for constant coefficients; used as an independent check of
    the duality route.
    """
    groups = table.groups
    out = []
    for j, g in enumerate(groups):
        nxt = groups[j + 1].torsion if j + 1 < len(groups) else ()
        out.append(AbelianGroup(g.free_rank, nxt))
    return tuple(out)


def is_orientable(shape: GrassmannShape) -> bool:
    lattice = classify_edges(shape, FillVariant.STANDARD, capacity=None)
    top = lattice.graph.top_cell
    into_top = [e for e in lattice.graph.edges if e.target == top]
    witness_nonzero = any(lattice.is_double(e) for e in into_top)
    orientable = shape.n % 2 == 0
    if witness_nonzero == orientable:
        raise FalsificationError(
            f"{shape}: parity says orientable={orientable} but top-cell incidence "
            f"nonzero={witness_nonzero}"
        )
    return orientable
