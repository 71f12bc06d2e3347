import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgg_explorer.bggdiag import bgg_diagram
from bgg_explorer.errors import ConfigurationError, DomainError
from bgg_explorer.families import e0_weight_violations, identified_chains, predicted_chains
from bgg_explorer.hasse import hasse_graph
from bgg_explorer.parabolic import grading_from_text
from bgg_explorer.rootlat import Weight, to_simple_root_coords
from bgg_explorer.vanish import (
    E0Spec,
    all_pair_verdicts,
    check_witness,
    cone_search,
    criterion,
    criterion_real,
    e0_from_names,
    e0_preset,
    find_subcomplexes,
    parse_e0,
    weights_by_strings,
    weights_of_irrep,
)

_GRAPHS = {}


def graph(text):
    if text not in _GRAPHS:
        _GRAPHS[text] = hasse_graph(grading_from_text(text))
    return _GRAPHS[text]


def dominant(rank, top=2):
    return st.lists(st.integers(0, top), min_size=rank, max_size=rank).map(lambda c: Weight(tuple(c)))


def contains(chains, wanted):
    """True when ``wanted`` is a contiguous piece of one of ``chains``."""
    k = len(wanted)
    return any(tuple(c[i:i + k]) == tuple(wanted) for c in chains for i in range(len(c) - k + 1))


# -- weight supports -------------------------------------------------------


def test_small_supports():
    g = grading_from_text("A2 x{2}")
    assert weights_of_irrep(g, Weight.zero(2)) == {Weight.zero(2)}
    assert weights_of_irrep(g, Weight((1, 0))) == {Weight((1, 0)), Weight((-1, 1))}


def test_e0_support_shape():
    g = grading_from_text("A5 x{2}")
    for mu in weights_of_irrep(g, Weight((0, -4, 3, 0, 1))):
        c = to_simple_root_coords(g.spec, mu)
        assert c[:2] == (-1, -2)
        assert all(x.denominator == 1 for x in c)


@pytest.mark.parametrize("text", ["A4 x{2}", "A4 x{1,4}", "C3 x{2}", "C4 x{2}"])
@given(data=st.data())
def test_two_support_computations_agree(text, data):
    d = bgg_diagram(graph(text), data.draw(dominant(graph(text).spec.rank)))
    label = d.node_labels[data.draw(st.integers(0, len(d.node_labels) - 1))]
    assert weights_of_irrep(d.grading, label) == weights_by_strings(d.grading, label)


@pytest.mark.parametrize("text", ["A4 x{2}", "A6 x{2}", "A5 x{1,5}", "C4 x{2}", "C6 x{2}"])
def test_e0_weights_have_the_sign_pattern(text):
    g = grading_from_text(text)
    assert e0_weight_violations(g, e0_from_names(g, ["w_{1,1}"])) == []


# -- cone membership -------------------------------------------------------


def _reachable(gens, bound):
    """Brute force: every nonnegative combination with coordinates <= bound."""
    seen = {tuple(0 for _ in bound)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if all(x <= m for x, m in zip(w, bound)) and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


@pytest.mark.parametrize("text", ["A3 x{2}", "A3 x{1,3}", "C3 x{2}"])
def test_cone_search_matches_brute_force(text):
    g = grading_from_text(text)
    search = cone_search(g)
    gens = [b.coeffs for b in g.delta_plus_pplus]
    bound = (3,) * g.spec.rank
    reach = _reachable(gens, bound)
    for t in itertools.product(range(4), repeat=g.spec.rank):
        found = search.find(t)
        assert (found is not None) == (t in reach)
        if found is not None:
            total = [0] * g.spec.rank
            for b, c in found.items():
                assert c > 0
                for i in range(g.spec.rank):
                    total[i] += c * b[i]
            assert tuple(total) == t


# -- the criterion ---------------------------------------------------------


def test_same_row_pair_is_zero():
    g = grading_from_text("A5 x{2}")
    d = bgg_diagram(graph("A5 x{2}"), "adjoint")
    e0 = e0_from_names(g, ["w_{1,1}"])
    v = criterion(d, e0, "w_{0,0}", "w_{0,2}")
    assert v.provably_zero and v.path_unique and v.witness is None


def test_row_to_diagonal_pair_is_inconclusive():
    g = grading_from_text("A5 x{2}")
    d = bgg_diagram(graph("A5 x{2}"), "adjoint")
    v = criterion(d, e0_from_names(g, ["w_{1,1}"]), "w_{0,0}", "w_{1,1}")
    assert v.verdict == "inconclusive"
    assert check_witness(g, v.witness)


def test_degree_mismatch():
    g = grading_from_text("A5 x{2}")
    d = bgg_diagram(graph("A5 x{2}"), "adjoint")
    with pytest.raises(DomainError):
        criterion(d, e0_from_names(g, ["w_{1,1}"]), "w_{0,0}", "w_{0,1}")


@pytest.mark.parametrize("text", ["A4 x{2}", "A4 x{1,4}", "C4 x{2}"])
@given(data=st.data())
def test_witnesses_are_sound(text, data):
    g = grading_from_text(text)
    d = bgg_diagram(graph(text), data.draw(dominant(g.spec.rank)))
    for v in all_pair_verdicts(d, e0_from_names(g, ["w_{1,1}"])):
        if v.witness:
            assert check_witness(g, v.witness)
            assert v.witness["difference"] == v.differences[0]


@given(dominant(5))
def test_positive_alpha1_difference_is_zero(lam):
    g = grading_from_text("A5 x{2}")
    d = bgg_diagram(graph("A5 x{2}"), lam)
    e0 = e0_from_names(g, ["w_{1,1}"])
    for v in all_pair_verdicts(d, e0):
        if v.differences[0][0] > 0:
            assert v.provably_zero


@pytest.mark.parametrize("text", ["A5 x{2}", "A4 x{1,4}", "C4 x{2}"])
@given(data=st.data())
def test_predicted_chains_are_found(text, data):
    g = grading_from_text(text)
    d = bgg_diagram(graph(text), data.draw(dominant(g.spec.rank)))
    found = [c.nodes for c in find_subcomplexes(d, e0_from_names(g, ["w_{1,1}"]))]
    for chain in predicted_chains(d.graph):
        assert contains(found, chain), chain


def test_found_chains_are_path_unique():
    g = grading_from_text("C4 x{2}")
    d = bgg_diagram(graph("C4 x{2}"), "adjoint")
    for chain in find_subcomplexes(d, e0_from_names(g, ["w_{1,1}"])):
        assert len(chain.orders) == len(chain) - 1
        assert all(v.provably_zero and v.path_unique for v in chain.verdicts)


def test_single_arrow_has_no_chain():
    g = grading_from_text("A1 x{1}")
    d = bgg_diagram(graph("A1 x{1}"), "adjoint")
    assert len(d.graph.arrows) == 1
    assert find_subcomplexes(d, E0Spec((Weight((-2,)),))) == []
    with pytest.raises(ConfigurationError):
        e0_preset(g)  # no degree 2 vertices, so no curvature to keep


# -- identified diagrams ---------------------------------------------------


@given(st.integers(0, 2), st.integers(0, 2))
def test_cr_chains(a, b):
    g = grading_from_text("A4 x{1,4}")
    d = bgg_diagram(graph("A4 x{1,4}"), (a, b, b, a), "cr_hypersurface")
    found = [c.nodes for c in find_subcomplexes(d, e0_from_names(g, ["w_{1,1}"]))]
    for chain in identified_chains(d):
        assert contains(found, chain), chain


def test_self_conjugate_classes_reduce_to_the_complex_test():
    g = grading_from_text("A4 x{1,4}")
    cr = bgg_diagram(graph("A4 x{1,4}"), "adjoint", "cr_hypersurface")
    e0 = e0_from_names(g, ["w_{1,1}"])
    singles = [c[0] for c in cr.classes if len(c) == 1]
    names = [cr.graph.nodes[i].name for i in singles]
    checked = 0
    for s in names:
        for t in names:
            if cr.graph.node(t).length == cr.graph.node(s).length + 2:
                real = criterion_real(cr, e0, s, t)
                assert len(real.differences) == 1
                assert real.verdict == criterion(cr, e0, s, t).verdict
                checked += 1
    assert checked


def test_criterion_real_needs_a_conjugation():
    g = grading_from_text("A5 x{2}")
    d = bgg_diagram(graph("A5 x{2}"), "adjoint")
    with pytest.raises(DomainError):
        criterion_real(d, e0_from_names(g, ["w_{1,1}"]), "w_{0,0}", "w_{0,2}")


# -- E0 selections ---------------------------------------------------------


def test_presets():
    e0 = e0_preset(grading_from_text("A5 x{2}"))
    assert e0.names == ("w_{1,1}",)
    assert "w_{0,2}" in e0.notes[0]
    c4 = e0_preset(grading_from_text("C4 x{2}"))
    assert c4.names == ("w_{1,1}",)
    assert "regularity" in c4.notes[0]


def test_parse_e0():
    g = grading_from_text("A5 x{2}")
    assert parse_e0(g, "w_{1,1}").components == (Weight((0, -4, 3, 0, 1)),)
    assert parse_e0(g, "0,-4,3,0,1").names == ("w_{1,1}",)
    for bad in ("", "w_{0,1}", "1,2,3,4,5", "preset:nope"):
        with pytest.raises((ConfigurationError, DomainError)):
            parse_e0(g, bad)
