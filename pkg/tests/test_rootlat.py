from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgg_explorer.errors import DomainError
from bgg_explorer.rootlat import (
    CartanSpec,
    Weight,
    cartan_matrix,
    cartan_pairing,
    half_sum,
    positive_roots,
    root_from_name,
    root_name,
    simple_root,
    to_fundamental_coords,
    to_simple_root_coords,
    weyl_vector,
)

SPECS = [CartanSpec.parse(t) for t in ("A1", "A2", "A3", "A5", "C2", "C3", "C4", "C6")]


@st.composite
def spec_and_weight(draw):
    spec = draw(st.sampled_from(SPECS))
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=spec.rank, max_size=spec.rank))
    return spec, Weight(tuple(coeffs))


def test_c_series_long_root_is_last():
    assert cartan_matrix(CartanSpec.parse("C3")) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


@pytest.mark.parametrize(
    "text, mu, expected",
    [
        ("A5", (0, -4, 3, 0, 1), (-1, -2, 1, 1, 1)),
        ("C4", (0, -5, 4, 0), (-1, -2, 2, 1)),
        ("A2", (1, 0), (Fraction(2, 3), Fraction(1, 3))),
    ],
)
def test_simple_root_coordinates(text, mu, expected):
    assert to_simple_root_coords(CartanSpec.parse(text), Weight(mu)) == expected


def test_weyl_vectors():
    a2 = CartanSpec.parse("A2")
    assert weyl_vector(a2) == Weight((1, 1))
    assert to_simple_root_coords(a2, weyl_vector(a2)) == (1, 1)
    assert weyl_vector(CartanSpec.parse("A5")) == Weight((1,) * 5)
    c4 = CartanSpec.parse("C4")
    assert len(positive_roots(c4)) == 16
    assert half_sum(c4, positive_roots(c4)) == Weight((1, 1, 1, 1))


def test_root_names_round_trip():
    c4 = CartanSpec.parse("C4")
    assert root_from_name(c4, "γ^{2,3}").coeffs == (0, 1, 2, 1)
    assert root_from_name(c4, "β^{1,3}").coeffs == (1, 1, 1, 0)
    for alpha in positive_roots(c4):
        assert root_from_name(c4, root_name(c4, alpha)) == alpha


def test_pairing_rejects_non_roots():
    with pytest.raises(DomainError):
        cartan_pairing(CartanSpec.parse("A3"), Weight((1, 0, 0)), (1, 0, 1))


@pytest.mark.parametrize("r", range(1, 9))
def test_root_counts(r):
    assert len(positive_roots(CartanSpec("A", r))) == r * (r + 1) // 2
    if r >= 2:
        assert len(positive_roots(CartanSpec("C", r))) == r * r


@given(spec_and_weight())
def test_fundamental_round_trip(sw):
    spec, mu = sw
    assert to_fundamental_coords(spec, to_simple_root_coords(spec, mu)) == mu


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_positive_roots_are_nonnegative_integral(spec):
    for alpha in positive_roots(spec):
        assert all(isinstance(c, int) and c >= 0 for c in alpha.coeffs)
        back = to_simple_root_coords(spec, to_fundamental_coords(spec, alpha.coeffs))
        assert back == alpha.coeffs


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_rho_pairs_to_one_on_simple_roots(spec):
    rho = weyl_vector(spec)
    for i in range(1, spec.rank + 1):
        assert cartan_pairing(spec, rho, simple_root(spec, i)) == 1
