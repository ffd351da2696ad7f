import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from realgrass import (
    CapacityError,
    GrassmannShape,
    Partition,
    RangeError,
    SchubertSymbol,
    ValidationError,
    build_bruhat_graph,
    canonical_reduced_word,
    enumerate_cells,
    lattice_paths,
    partition_to_symbol,
    symbol_to_partition,
)
from realgrass.schubert import all_cells, apply_word, word_as_product

from conftest import all_shapes, shapes

GR25 = GrassmannShape(2, 5)


def brute_partitions(shape):
    """Every k-tuple in the box that weakly increases, by plain product."""
    out = []
    for t in itertools.product(range(shape.width + 1), repeat=shape.k):
        if all(a <= b for a, b in zip(t, t[1:])):
            out.append(Partition(t))
    return out


def brute_chains(lam, shape):
    """All saturated chains from the empty diagram to lam, via containment only."""
    cells = [mu for mu in brute_partitions(shape) if lam.contains(mu)]
    chains = [[Partition.empty(shape.k)]]
    for _ in range(lam.size):
        chains = [
            c + [mu]
            for c in chains
            for mu in cells
            if mu.size == c[-1].size + 1 and mu.contains(c[-1])
        ]
    return chains


class TestShape:
    def test_dimension(self):
        assert GR25.dimension == 6
        assert GR25.num_cells == 10

    @pytest.mark.parametrize("k,n", [(0, 3), (3, 3), (4, 2), (-1, 5)])
    def test_rejects_bad_shapes(self, k, n):
        with pytest.raises(RangeError):
            GrassmannShape(k, n)

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            build_bruhat_graph(GrassmannShape(1, 17))
        g = build_bruhat_graph(GrassmannShape(1, 17), capacity=None)
        assert len(g.edges) == 16


class TestPartition:
    def test_must_increase_bottom_up(self):
        with pytest.raises(ValidationError):
            Partition((2, 1))

    def test_from_top_rows(self):
        assert Partition.from_top_rows((3, 1), 2) == Partition((1, 3))
        assert Partition.from_top_rows((5, 1, 1), 3) == Partition((1, 1, 5))
        assert Partition.from_top_rows((), 2) == Partition((0, 0))
        assert str(Partition((1, 3))) == "(3,1)"


class TestEnumerateCells:
    def test_degree_zero(self):
        assert enumerate_cells(GR25, 0) == [Partition((0, 0))]

    def test_degree_two(self):
        assert enumerate_cells(GR25, 2) == [Partition((0, 2)), Partition((1, 1))]

    def test_total_is_binomial(self):
        assert sum(len(enumerate_cells(GR25, d)) for d in range(7)) == comb(5, 2)

    @pytest.mark.parametrize("degree", [-1, 7])
    def test_out_of_range(self, degree):
        with pytest.raises(RangeError):
            enumerate_cells(GR25, degree)

    @pytest.mark.parametrize("shape", all_shapes(10), ids=str)
    def test_counts_and_order(self, shape):
        brute = brute_partitions(shape)
        assert sorted(all_cells(shape), key=lambda p: (p.size, p.rows)) == all_cells(shape)
        assert set(all_cells(shape)) == set(brute)
        assert len(all_cells(shape)) == comb(shape.n, shape.k)

    def test_deterministic(self):
        assert all_cells(GrassmannShape(3, 7)) == all_cells(GrassmannShape(3, 7))


class TestSymbols:
    @pytest.mark.parametrize(
        "rows,pivots",
        [((0, 0), (1, 2)), ((3, 3), (4, 5)), ((1, 2), (2, 4))],
    )
    def test_examples(self, rows, pivots):
        assert partition_to_symbol(Partition(rows), GR25) == SchubertSymbol(pivots)
        assert symbol_to_partition(SchubertSymbol(pivots), GR25) == Partition(rows)

    def test_top_cell_symbol(self):
        shape = GrassmannShape(3, 8)
        top = Partition((5, 5, 5))
        assert partition_to_symbol(top, shape).pivots == (6, 7, 8)

    @pytest.mark.parametrize("pivots", [(2, 1), (1, 1), (0, 3), (4, 6), (1, 2, 3)])
    def test_malformed(self, pivots):
        with pytest.raises(ValidationError):
            symbol_to_partition(SchubertSymbol(pivots), GR25)

    @pytest.mark.parametrize("shape", all_shapes(10), ids=str)
    def test_round_trip_all_symbols(self, shape):
        for pivots in itertools.combinations(range(1, shape.n + 1), shape.k):
            sym = SchubertSymbol(pivots)
            lam = symbol_to_partition(sym, shape)
            assert lam.fits(shape)
            assert partition_to_symbol(lam, shape) == sym


class TestBruhatGraph:
    def test_gr25_counts(self):
        g = build_bruhat_graph(GR25)
        assert sum(len(level) for level in g.levels) == 10
        # brute force: pairs (a, b) with b = a plus one box inside the 2x3 box
        cells = brute_partitions(GR25)
        brute = [(a, b) for a in cells for b in cells if b.size == a.size + 1 and b.contains(a)]
        assert len(brute) == 12
        assert len(g.edges) == 12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_projective_space_chain(self, n):
        shape = GrassmannShape(1, n)
        g = build_bruhat_graph(shape)
        assert [(e.source.rows, e.target.rows, e.reflection_index) for e in g.edges] == [
            ((i,), (i + 1,), i + 1) for i in range(n - 1)
        ]

    @pytest.mark.parametrize("k,n", [(1, 4), (2, 5), (3, 7), (4, 6)])
    def test_first_edge_label_is_k(self, k, n):
        g = build_bruhat_graph(GrassmannShape(k, n))
        (first,) = [e for e in g.edges if e.source.size == 0]
        assert first.reflection_index == k
        assert (first.box_row, first.box_col) == (k, 1)

    @pytest.mark.parametrize("shape", all_shapes(9), ids=str)
    def test_edges_are_exactly_the_covers(self, shape):
        g = build_bruhat_graph(shape)
        cells = list(g.cells())
        brute = {(a, b) for a in cells for b in cells if b.size == a.size + 1 and b.contains(a)}
        got = [(e.source, e.target) for e in g.edges]
        assert len(got) == len(set(got))
        assert set(got) == brute
        for e in g.edges:
            assert 1 <= e.reflection_index <= shape.n - 1
            assert e.target.rows[e.box_row - 1] == e.box_col


class TestWords:
    def test_empty(self):
        assert canonical_reduced_word(Partition((0, 0)), GR25) == ()
        assert lattice_paths(Partition((0, 0)), GR25, 5) == [()]

    def test_example_word_product(self):
        lam = Partition((1, 3))
        word = canonical_reduced_word(lam, GR25)
        assert word_as_product(word) == "s1 s4 s3 s2"

    def test_three_paths(self):
        words = lattice_paths(Partition((1, 3)), GR25, 10)
        assert len(words) == 3
        assert {word_as_product(w) for w in words} == {
            "s1 s4 s3 s2",
            "s4 s3 s1 s2",
            "s4 s1 s3 s2",
        }
        assert words[0] == canonical_reduced_word(Partition((1, 3)), GR25)

    def test_single_column_forced(self):
        words = lattice_paths(Partition((1, 1)), GR25, 10)
        assert len(brute_chains(Partition((1, 1)), GR25)) == 1
        assert words == [(2, 1)]

    def test_limit(self):
        lam = Partition((3, 3, 3))
        shape = GrassmannShape(3, 6)
        assert len(lattice_paths(lam, shape, 7)) == 7
        with pytest.raises(RangeError):
            lattice_paths(lam, shape, 0)

    @pytest.mark.parametrize("shape", all_shapes(9), ids=str)
    def test_canonical_word_reaches_cell(self, shape):
        for lam in all_cells(shape):
            word = canonical_reduced_word(lam, shape)
            assert len(word) == lam.size
            assert apply_word(word, shape) == lam

    @pytest.mark.parametrize("shape", all_shapes(6), ids=str)
    def test_paths_match_brute_force_chains(self, shape):
        for lam in all_cells(shape):
            chains = brute_chains(lam, shape)
            words = lattice_paths(lam, shape, 10_000)
            assert len(words) == len(chains)
            assert len(set(words)) == len(words)
            for w in words:
                assert len(w) == lam.size
                assert apply_word(w, shape) == lam

    def test_apply_word_rejects_non_paths(self):
        with pytest.raises(ValidationError):
            apply_word((1,), GR25)  # first box must be s_k = s_2
        with pytest.raises(ValidationError):
            apply_word((2, 2), GR25)


@given(shapes(max_n=9), st.data())
def test_every_path_has_length_of_cell(shape, data):
    cells = all_cells(shape)
    lam = data.draw(st.sampled_from(cells))
    for w in lattice_paths(lam, shape, 20):
        assert len(w) == lam.size
        assert apply_word(w, shape) == lam
