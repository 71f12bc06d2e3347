import pytest

from bgg_explorer.errors import ConfigurationError
from bgg_explorer.parabolic import Crossing, grade, grading_from_text, parse_diagram
from bgg_explorer.rootlat import CartanSpec, is_root, positive_roots, root_from_name

GRADINGS = ["A3 x{2}", "A5 x{2}", "A4 x{1,4}", "A6 x{1,6}", "C3 x{2}", "C4 x{2}", "C5 x{2}", "C4 x{1,3}"]


def test_contact_free_a_grading():
    g = grading_from_text("A5 x{2}")
    assert g.k == 1
    expected = {root_from_name(g.spec, f"β^{{{i},{j}}}") for i in (1, 2) for j in range(2, 6)}
    assert set(g.delta_plus_pplus) == expected
    assert g.dims[-1] == 8


def test_a_contact_grading_has_one_top_root():
    g = grading_from_text("A4 x{1,4}")
    assert g.k == 2
    assert [a for a in g.delta_plus_pplus if g.height[a] == 2] == [root_from_name(g.spec, "β^{1,4}")]


def test_c_contact_grading_top_layer():
    g = grading_from_text("C4 x{2}")
    assert g.k == 2
    top = {a for a in g.delta_plus_pplus if g.height[a] == 2}
    assert top == {root_from_name(g.spec, n) for n in ("γ^{1,1}", "γ^{1,2}", "γ^{2,2}")}
    assert g.dims[2] == 3


@pytest.mark.parametrize("text", ["A5 x{9}", "A5 x{}", "B3 x{1}", "A5 {2}", "C1 x{1}"])
def test_bad_diagrams(text):
    with pytest.raises(ConfigurationError):
        grading_from_text(text)


def test_crossing_text_round_trip():
    spec, crossing = parse_diagram("A4 x{4,1}")
    assert str(grade(spec, crossing)) == "A4 x{1,4}"
    assert crossing == Crossing((1, 4))


@pytest.mark.parametrize("text", GRADINGS)
def test_heights_are_additive(text):
    g = grading_from_text(text)
    roots = positive_roots(g.spec)
    for a in roots:
        for b in roots:
            if is_root(g.spec, a + b):
                assert g.height[a + b] == g.height[a] + g.height[b]


@pytest.mark.parametrize("text", GRADINGS)
def test_negative_part_generated_in_degree_one(text):
    g = grading_from_text(text)
    ones = [a for a in g.delta_plus_pplus if g.height[a] == 1]
    for gamma in g.delta_plus_pplus:
        h = g.height[gamma]
        if h >= 2:
            assert any(
                is_root(g.spec, gamma - a) and g.height[gamma - a] == h - 1 for a in ones
            ), gamma


@pytest.mark.parametrize("text", GRADINGS)
def test_dimensions(text):
    g = grading_from_text(text)
    assert g.dims[0] == g.spec.rank + 2 * len(g.delta_plus_g0)
    for i in range(1, g.k + 1):
        assert g.dims[i] == g.dims[-i]
    assert sum(g.dims.values()) == g.spec.dim
    r = g.spec.rank
    assert g.spec.dim == (r * (r + 2) if g.spec.series == "A" else r * (2 * r + 1))
