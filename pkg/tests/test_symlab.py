import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgg_explorer.errors import DomainError, GuardError
from bgg_explorer.linalg import LinearMapQ
from bgg_explorer.symlab import (
    SymbolX,
    _gauss_rank,
    build_V,
    build_W,
    dual_pairing_check,
    exactness_report,
    plain_sequence_report,
    plain_sigma,
    monomials,
    quaternion_block,
    quaternionic_matrix,
    quaternionic_rank,
    sigma,
    tracefree_dim,
)

GUARDED = [(n, k, l) for n in (2, 3) for k in range(3) for l in range(3)]


def sym_dim(n, d):
    return comb(n + d - 1, d)


def xs(n, lo=-2, hi=2):
    coords = st.lists(st.integers(lo, hi), min_size=n, max_size=n)
    return st.builds(lambda a, b: SymbolX(tuple(a), tuple(b)), coords, coords)


# -- modules ---------------------------------------------------------------


def test_module_dims():
    assert build_W(2, 0, 1, 1).dim == 6
    assert build_W(3, 1, 0, 2).dim == 12
    assert build_W(2, 1, 2, 2).dim == 6
    assert [build_W(2, 0, 0, j).dim for j in range(3)] == [1, 4, 3]


def test_monomials_are_complete():
    assert len(monomials(3, 4)) == sym_dim(3, 4)
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))


@pytest.mark.parametrize("n, k, l", GUARDED)
def test_short_exact_dimension_counts(n, k, l):
    if l == 0:
        return
    for j in range(1, n):
        lhs = build_W(n, k + 1, l - 1, j - 1).dim + build_W(n, k, l, j).dim
        assert lhs == build_W(n, k, 0, j).dim * sym_dim(n, l)


@pytest.mark.parametrize("n, l", [(n, l) for n in (2, 3, 4) for l in (1, 2, 3)])
def test_top_degree_isomorphism(n, l):
    assert tracefree_dim(n, n - 1, l - 1) == comb(n, n) * sym_dim(n, l)


def test_guards():
    with pytest.raises(GuardError):
        build_W(5, 0, 0, 0)
    with pytest.raises(GuardError):
        build_W(2, 3, 3, 0)
    with pytest.raises(DomainError):
        build_W(2, -1, 0, 0)
    with pytest.raises(DomainError):
        build_W(2, 0, 0, 3)
    with pytest.raises(DomainError):
        build_V(2, 0, 3)


# -- symbol maps -----------------------------------------------------------


@pytest.mark.parametrize("n, k, l", GUARDED)
@given(data=st.data())
def test_symbol_squares_to_zero(n, k, l, data):
    X = data.draw(xs(n))
    for j in range(n - 1):
        assert (sigma(n, k, l, j + 1, X) @ sigma(n, k, l, j, X)).is_zero()


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_l_zero_matches_plain_model(n, data):
    X = data.draw(xs(n))
    k = data.draw(st.integers(0, 2))
    for j in range(n):
        assert sigma(n, k, 0, j, X).to_dense() == plain_sigma(n, k + j, j, X).to_dense()


def test_zero_symbol_is_zero_map():
    X = SymbolX.zero(3)
    assert all(sigma(3, 1, 1, j, X).is_zero() for j in range(3))


def test_wrong_sized_symbol():
    with pytest.raises(DomainError):
        sigma(3, 0, 0, 0, SymbolX.standard(2))
    with pytest.raises(DomainError):
        sigma(2, 0, 0, 2, SymbolX.standard(2))
    with pytest.raises(DomainError):
        SymbolX.parse("1,2")


# -- exactness -------------------------------------------------------------


def test_smallest_sequence_is_exact():
    rep = exactness_report(2, 0, 0, SymbolX.standard(2))
    assert rep["exact"] and rep["dims"] == [1, 4, 3] and rep["euler"] == 0


def test_generic_and_degenerate_symbols():
    assert exactness_report(3, 1, 2, SymbolX((1, 2, -1), (0, 1, 3)))["exact"]
    bad = exactness_report(3, 1, 2, SymbolX.parse("1,2,3;2,4,6"))
    assert not bad["exact"] and bad["failing"]
    assert not bad["generic_X"]


@pytest.mark.parametrize("n, k, l", [(2, 0, 1), (2, 1, 1), (2, 2, 0), (3, 0, 1), (3, 1, 1)])
def test_exact_iff_independent(n, k, l):
    grid = list(itertools.product((-1, 0, 1), repeat=n))
    rng = random.Random(n * 100 + k * 10 + l)
    pairs = rng.sample([(a, b) for a in grid for b in grid], 25)
    pairs += [((1,) + (0,) * (n - 1), (2,) + (0,) * (n - 1)), ((0,) * n, (0,) * n)]
    for a, b in pairs:
        X = SymbolX(a, b)
        assert exactness_report(n, k, l, X)["exact"] == X.is_generic()


def test_plain_sequence():
    assert plain_sequence_report(2, 0, SymbolX.standard(2))["exact"]
    assert plain_sequence_report(3, 2, SymbolX((1, 1, 0), (0, 1, 1)))["exact"]
    zero = plain_sequence_report(3, 1, SymbolX.zero(3))
    assert 0 in zero["failing"]


def test_dual_sequence():
    rep = dual_pairing_check(2, 1, 1)
    assert rep["dims_match"] and rep["exact"] and rep["ok"]
    rep = dual_pairing_check(2, 1, 0)
    assert rep["diagram_right_edge"] == list(reversed([build_W(2, 0, 1, j).dim for j in range(3)]))
    assert rep["dims_match"]


@pytest.mark.parametrize("n, k, l", [(2, 0, 2), (2, 2, 1), (3, 1, 0), (3, 0, 2)])
def test_model_dims_match_the_diagram(n, k, l):
    rep = dual_pairing_check(n, k, l)
    assert rep["diagram_left_edge"] == rep["model_left_edge"]
    assert rep["dims_match"]


def test_parallel_ranks_agree():
    X = SymbolX((1, 0, 2), (0, 1, -1))
    assert exactness_report(3, 1, 1, X, jobs=2) == exactness_report(3, 1, 1, X)


# -- quaternions -----------------------------------------------------------


def _realified_rank(rows):
    # a + bi acts on R^2 as [[a, -b], [b, a]]
    dense = []
    for row in rows:
        top, bottom = [], []
        for a, b in row:
            top += [a, -b]
            bottom += [b, a]
        dense += [top, bottom]
    return LinearMapQ.from_dense(dense).rank()


def test_quaternion_blocks():
    one = quaternion_block(1, 0, 0, 0)
    assert one == [[(1, 0), (0, 0)], [(0, 0), (1, 0)]]
    j = quaternion_block(0, 0, 1, 0)
    assert j == [[(0, 0), (-1, 0)], [(1, 0), (0, 0)]]
    assert quaternionic_rank([1, 0, 0, 0, 0, 0, 0, 0], 2) == 2
    assert quaternionic_rank([0, 0, 1, 0, 0, 0, 0, 0], 2) == 2


def test_quaternion_multiplication_is_associative():
    # block(p) block(q) == block(pq) for the basis, so the blocks form a representation
    def mul(x, y):
        return [[_cmul_sum(x[r], [y[0][c], y[1][c]]) for c in range(2)] for r in range(2)]

    i, j, k = quaternion_block(0, 1, 0, 0), quaternion_block(0, 0, 1, 0), quaternion_block(0, 0, 0, 1)
    assert mul(i, j) == k
    assert mul(j, k) == i
    assert mul(i, i) == quaternion_block(-1, 0, 0, 0)


def _cmul_sum(row, col):
    re = sum(a * c - b * d for (a, b), (c, d) in zip(row, col))
    im = sum(a * d + b * c for (a, b), (c, d) in zip(row, col))
    return (re, im)


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_rank_over_gaussian_rationals_matches_realification(v):
    rows = quaternionic_matrix(v, 2)
    assert 2 * _gauss_rank(rows) == _realified_rank(rows)
    if any(v):
        assert quaternionic_rank(v, 2) == 2


def test_gauss_rank_of_dependent_rows():
    rows = [[(1, 1), (2, 0)], [(2, 0), (Fraction(2), Fraction(-2))]]  # second row = (1 - i) * first
    assert _gauss_rank(rows) == 1


def test_zero_quaternion_rejected():
    with pytest.raises(DomainError):
        quaternionic_rank([0] * 4, 1)
    with pytest.raises(DomainError):
        quaternionic_matrix([1, 0, 0], 1)
