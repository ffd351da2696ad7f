"""Cross-checks between independent routes, run shape by shape.

Every check returns a :class:`CheckResult`; nothing here raises on a failed
property.  Exceptions escaping a check are caught and reported as failures
with the message as counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .checkered import (
    FillVariant,
    acts_nontrivially,
    eta_hat,
    sign_action,
    weight,
)
from .cochain import (
    ORACLE_CAPACITY,
    Coefficients,
    classify_edges,
    cohomology,
    cohomology_snf_oracle,
    homology,
    homology_from_cohomology,
    is_orientable,
)
from .errors import RealGrassError
from .qpoly import (
    IntPolynomial,
    euler_characteristic,
    fq_point_count,
    p_closed,
    p_star_closed,
    p_sum,
    parity_case,
    poincare_polynomial,
    reciprocity_check,
)
from .schubert import (
    GrassmannShape,
    apply_word,
    build_bruhat_graph,
    canonical_reduced_word,
    lattice_paths,
    partition_to_symbol,
    symbol_to_partition,
)

PATH_LIMIT = 50
PATH_INDEPENDENCE_MAX_N = 7


@dataclass(frozen=True)
class CheckResult:
    name: str
    shape: GrassmannShape
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "shape": [self.shape.k, self.shape.n],
            "passed": self.passed,
            "counterexample": self.detail or None,
        }


def _first_failure(items: Iterable[tuple[bool, str]]) -> str:
    for ok, why in items:
        if not ok:
            return why
    return ""


def check_cells(shape):
    g = build_bruhat_graph(shape, capacity=None)
    total = sum(len(level) for level in g.levels)
    if total != comb(shape.n, shape.k):
        return f"{total} cells, expected C({shape.n},{shape.k})"
    return _first_failure(
        (lam.size == d and lam.fits(shape), f"{lam.rows} misplaced at degree {d}")
        for d, level in enumerate(g.levels)
        for lam in level
    )


def check_symbols(shape):
    g = build_bruhat_graph(shape, capacity=None)
    return _first_failure(
        (symbol_to_partition(partition_to_symbol(lam, shape), shape) == lam, f"{lam.rows}")
        for lam in g.cells()
    )


def check_edges(shape):
    g = build_bruhat_graph(shape, capacity=None)
    found = [(e.source, e.target) for e in g.edges]
    if len(set(found)) != len(found):
        return "duplicate cover edge"
    cells = list(g.cells())
    brute = {
        (a, b)
        for a in cells
        for b in cells
        if b.size == a.size + 1 and b.contains(a)
    }
    if brute != set(found):
        return f"cover edges differ from containment pairs: {sorted(brute ^ set(found))[:3]}"
    return _first_failure(
        (e.target == e.source.add_box(e.box_row) and e.box_col == e.target.rows[e.box_row - 1],
         f"edge {e.source.rows}->{e.target.rows} box {(e.box_row, e.box_col)}")
        for e in g.edges
    )


def check_canonical_words(shape):
    g = build_bruhat_graph(shape, capacity=None)
    for lam in g.cells():
        word = canonical_reduced_word(lam, shape)
        if len(word) != lam.size or apply_word(word, shape) != lam:
            return f"canonical word {word} does not reach {lam.rows}"
    return ""


def check_eta_hat(shape):
    g = build_bruhat_graph(shape, capacity=None)
    for lam in g.cells():
        for v in FillVariant:
            got = eta_hat(lam, shape, v).eta_hat
            want = weight(lam, shape, v)
            if got != want:
                return f"{lam.rows} {v.value}: eta_hat={got}, weight={want}"
    return ""


def check_path_independence(shape, limit=PATH_LIMIT):
    g = build_bruhat_graph(shape, capacity=None)
    for lam in g.cells():
        words = lattice_paths(lam, shape, limit)
        if any(len(w) != lam.size for w in words):
            return f"word of wrong length for {lam.rows}"
        for v in FillVariant:
            values = {eta_hat(lam, shape, v, w).eta_hat for w in words}
            if len(values) != 1:
                return f"{lam.rows} {v.value}: eta_hat takes values {sorted(values)}"
    return ""


def check_edge_criterion(shape):
    """Sign step along an edge is trivial exactly when the weight is unchanged."""
    g = build_bruhat_graph(shape, capacity=None)
    for v in FillVariant:
        for e in g.edges:
            eps = eta_hat(e.source, shape, v).end
            i = e.reflection_index
            moves = acts_nontrivially(i, eps)
            if shape.n >= 3 and moves != (sign_action(i, eps) != eps):
                return f"sign criterion disagrees with coordinate rule at s_{i}, {eps}"
            same = weight(e.source, shape, v) == weight(e.target, shape, v)
            if moves == same:
                return f"{v.value} edge {e.source.rows}->{e.target.rows} (s_{i}) at {eps}"
    return ""


def check_edge_partition(shape):
    std = set(classify_edges(shape, FillVariant.STANDARD, capacity=None).double_edges)
    sft = set(classify_edges(shape, FillVariant.SHIFTED, capacity=None).double_edges)
    all_edges = set(build_bruhat_graph(shape, capacity=None).edges)
    if std & sft:
        return f"{len(std & sft)} edges double in both variants"
    if std | sft != all_edges:
        return f"{len(all_edges - std - sft)} edges double in neither variant"
    return ""


def check_oracle(shape):
    for c in Coefficients:
        cohomology_snf_oracle(shape, c)  # raises on any disagreement
    return ""


def check_betti(shape):
    ranks = cohomology(shape, capacity=None).free_ranks
    poly = IntPolynomial(tuple(ranks))
    expected = poincare_polynomial(shape)
    if poly != expected:
        return f"free ranks {ranks} vs Poincare polynomial {expected.format('t')}"
    pc = parity_case(shape)
    if pc.case == 1 and expected != p_closed(shape).substitute(2):
        return "P(t) != p(t^2) in case (i)"
    return ""


def check_euler(shape):
    ranks = cohomology(shape, capacity=None).free_ranks
    alt = sum((-1) ** j * r for j, r in enumerate(ranks))
    chi = euler_characteristic(shape)
    return "" if alt == chi else f"alternating rank sum {alt} vs chi {chi}"


def check_duality(shape):
    """Homology by duality must match homology by universal coefficients."""
    dual = homology(shape, capacity=None)
    uct = homology_from_cohomology(cohomology(shape, Coefficients.CONSTANT, capacity=None))
    if dual.groups != uct:
        return f"duality {[str(g) for g in dual.groups]} vs UCT {[str(g) for g in uct]}"
    back = list(reversed(dual.free_ranks))
    if back != cohomology(shape, dual.coefficients, capacity=None).free_ranks:
        return "reversed homology does not reproduce cohomology"
    return ""


def check_orientability(shape):
    return "" if is_orientable(shape) == (shape.n % 2 == 0) else "parity mismatch"


def check_p_closed(shape):
    got, want = p_sum(shape), p_closed(shape)
    if got != want:
        return f"p_sum {got} vs closed {want}"
    if shape.n % 2:
        got, want = p_sum(shape, FillVariant.SHIFTED), p_star_closed(shape)
        if got != want:
            return f"p*_sum {got} vs closed {want}"
    return ""


def check_reciprocity(shape):
    return "" if reciprocity_check(shape) else "q^D p(1/q) != (-1)^{k(n-k)} p(q)"


def check_point_count(shape):
    pc = fq_point_count(shape)
    if pc.shift_exponent < 0:
        return "negative shift exponent"
    if shape.k == 1:
        m = shape.n // 2
        q = IntPolynomial.monomial(1)
        if shape.n % 2 == 0:
            expected = IntPolynomial.monomial(m - 1) * (q ** m - 1)
        else:
            expected = IntPolynomial.monomial(2 * m)
        if pc.full != expected:
            return f"|RP^{shape.n - 1}(F_q)| = {pc.full}, expected {expected}"
    return ""


CHECKS: dict[str, Callable[[GrassmannShape], str]] = {
    "cell_count": check_cells,
    "symbol_round_trip": check_symbols,
    "cover_edges": check_edges,
    "canonical_word": check_canonical_words,
    "eta_hat_equals_weight": check_eta_hat,
    "path_independence": check_path_independence,
    "edge_criterion": check_edge_criterion,
    "edge_partition": check_edge_partition,
    "oracle_vs_fast_path": check_oracle,
    "betti_vs_poincare": check_betti,
    "euler_characteristic": check_euler,
    "duality": check_duality,
    "orientability": check_orientability,
    "p_closed_forms": check_p_closed,
    "reciprocity": check_reciprocity,
    "point_count": check_point_count,
}


def applicable_checks(shape: GrassmannShape) -> list[str]:
    names = list(CHECKS)
    if shape.n > PATH_INDEPENDENCE_MAX_N:
        names.remove("path_independence")
    if shape.n > ORACLE_CAPACITY:
        names.remove("oracle_vs_fast_path")
    return names


def run_checks(shape: GrassmannShape, names: Iterable[str] | None = None) -> list[CheckResult]:
    results = []
    for name in names if names is not None else applicable_checks(shape):
        try:
            detail = CHECKS[name](shape)
        except RealGrassError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, shape, not detail, detail))
    return results


def shapes_up_to(max_n: int) -> list[GrassmannShape]:
    return [GrassmannShape(k, n) for n in range(2, max_n + 1) for k in range(1, n)]


__all__ = ["CHECKS", "CheckResult", "applicable_checks", "run_checks", "shapes_up_to"]
