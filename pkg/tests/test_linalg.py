import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from realgrass import BinaryMatrix, FalsificationError, ValidationError, rank_mod2, smith_normal_form
from realgrass.linalg import gf2_rank, int_matmul, solve_mod2


def det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def determinantal_factors(m):
    """Invariant factors as ratios of gcds of t x t minors."""
    rows, cols = len(m), len(m[0]) if m else 0
    d = [1]
    for t in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), t):
            for cs in itertools.combinations(range(cols), t):
                g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        d.append(g)
    return [d[i] // d[i - 1] for i in range(1, len(d))]


def span_size(rows):
    return len({v for v in (_xor(sub) for r in range(len(rows) + 1) for sub in itertools.combinations(rows, r))})


def _xor(vs):
    out = 0
    for v in vs:
        out ^= v
    return out


class TestBinaryMatrix:
    def test_zero_and_identity(self):
        assert rank_mod2(BinaryMatrix(3, 4, frozenset())) == 0
        assert rank_mod2(BinaryMatrix.identity(5)) == 5

    def test_hand_example(self):
        m = BinaryMatrix(2, 2, frozenset({(0, 1), (1, 1)}))
        assert m.to_dense() == [[0, 1], [0, 1]]
        assert rank_mod2(m) == 1

    def test_out_of_bounds(self):
        with pytest.raises(ValidationError):
            BinaryMatrix(2, 2, frozenset({(2, 0)}))

    @given(st.lists(st.integers(0, 2**7 - 1), max_size=7))
    def test_rank_matches_span(self, rows):
        assert 2 ** gf2_rank(rows) == span_size(rows)


class TestSolveMod2:
    @given(st.lists(st.tuples(st.integers(0, 63), st.integers(0, 1)), max_size=8))
    def test_solution_or_inconsistency(self, equations):
        brute = [
            x
            for x in itertools.product((0, 1), repeat=6)
            if all(sum(x[i] for i in range(6) if (m >> i) & 1) % 2 == r for m, r in equations)
        ]
        if not brute:
            with pytest.raises(FalsificationError):
                solve_mod2(equations, 6)
        else:
            assert tuple(solve_mod2(equations, 6)) in brute

    def test_inconsistent(self):
        with pytest.raises(FalsificationError):
            solve_mod2([(0b11, 1), (0b01, 0), (0b10, 0)], 2)


class TestSmithForm:
    def test_trivial_examples(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == []
        assert smith_normal_form([[2, 0], [0, 2]]) == [2, 2]
        assert smith_normal_form([[2, 2]]) == [2]
        assert smith_normal_form([]) == []

    def test_needs_normalisation(self):
        assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
        assert smith_normal_form([[4, 0], [0, 6]]) == [2, 12]

    @settings(max_examples=200)
    @given(
        st.integers(1, 4).flatmap(
            lambda r: st.lists(st.lists(st.integers(-6, 6), min_size=r, max_size=r), min_size=1, max_size=4)
        )
    )
    def test_matches_determinantal_divisors(self, m):
        assert smith_normal_form(m) == determinantal_factors(m)


def test_matmul():
    assert int_matmul([[1, 2], [3, 4]], [[0, 1], [1, 0]]) == [[2, 1], [4, 3]]
    assert int_matmul([[1, 2]], [[3], [4]]) == [[11]]
