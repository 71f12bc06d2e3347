from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from bgg_explorer.linalg import LinearMapQ

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_rank_nullity(dense):
    m = LinearMapQ.from_dense(dense)
    assert m.rank() == m.transpose().rank()
    assert m.rank() + len(m.nullspace()) == m.ncols
    for v in m.nullspace():
        assert not any(m.apply(v).values())


@given(matrices, st.data())
def test_product_matches_dense(dense, data):
    b = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=len(dense[0]), max_size=len(dense[0])))
    prod = (LinearMapQ.from_dense(dense) @ LinearMapQ.from_dense(b)).to_dense()
    expected = [[sum(Fraction(x) * b[t][j] for t, x in enumerate(row)) for j in range(3)] for row in dense]
    assert prod == expected


def test_known_rank():
    assert LinearMapQ.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]]).rank() == 2
    assert LinearMapQ.zero(3, 2).is_zero()
