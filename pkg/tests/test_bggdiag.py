import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgg_explorer.bggdiag import (
    adjoint_weight,
    affine_act,
    bgg_diagram,
    from_highest_weight,
    is_p_dominant,
    module_dim,
    operator_order,
    to_highest_weight,
)
from bgg_explorer.errors import ConfigurationError, ConsistencyError, DomainError
from bgg_explorer.families import difference_violations
from bgg_explorer.hasse import WeylElt, hasse_graph, weyl_group_elements
from bgg_explorer.liealg import homology_dims
from bgg_explorer.parabolic import grading_from_text
from bgg_explorer.rootlat import Weight, to_simple_root_coords

_GRAPHS = {}


def graph(text):
    if text not in _GRAPHS:
        _GRAPHS[text] = hasse_graph(grading_from_text(text))
    return _GRAPHS[text]


def dominant(rank, top=3):
    return st.lists(st.integers(0, top), min_size=rank, max_size=rank).map(lambda c: Weight(tuple(c)))


def test_affine_action_basics():
    spec = grading_from_text("A5 x{2}").spec
    lam = Weight((1, 2, 0, 0, 1))
    assert affine_act(WeylElt.identity(spec), lam) == lam
    s2 = WeylElt.from_word(spec, [2])
    assert affine_act(s2, Weight.zero(5)) == Weight((1, -2, 1, 0, 0))


def test_adjoint_labels():
    d = bgg_diagram(graph("A5 x{2}"), "adjoint")
    assert d.label("w_{1,1}") == Weight((0, -4, 3, 0, 1))
    assert d.realform.name == "split"
    assert len(d.classes) == 15


def test_module_dims():
    g = grading_from_text("A5 x{2}")
    assert module_dim(g, Weight.zero(5)) == 1
    standard = bgg_diagram(graph("A5 x{2}"), "1,0,0,0,0")
    assert standard.node_dims[0] == 2
    with pytest.raises(DomainError):
        module_dim(g, Weight((0, 0, -1, 0, 0)))


def test_dims_agree_with_brute_force_homology():
    # frozen from the Kostant codifferential oracle
    oracle = [4, 9, 10, 9, 4]
    assert homology_dims(grading_from_text("A3 x{2}"), "adjoint") == oracle
    d = bgg_diagram(graph("A3 x{2}"), "adjoint")
    by_degree = [0] * 5
    for deg, dim in zip(d.node_degree, d.node_dims):
        by_degree[deg] += dim
    assert by_degree == oracle


def test_real_form_classes():
    cr = bgg_diagram(graph("A4 x{1,4}"), "adjoint", "cr_hypersurface")
    assert len(cr.classes) == 12
    qc = bgg_diagram(graph("C4 x{2}"), "adjoint", "quaternionic_contact")
    assert len(qc.classes) == 24 and all(len(c) == 1 for c in qc.classes)


def test_cr_labels_are_closed_under_conjugation():
    cr = bgg_diagram(graph("A4 x{1,4}"), "2,1,1,2", "cr_hypersurface")
    labels = set(cr.node_labels)
    assert {cr.realform.conjugate(cr.spec, mu) for mu in labels} == labels
    for members in cr.classes:
        mus = [cr.node_labels[i] for i in members]
        assert cr.realform.conjugate(cr.spec, mus[0]) == mus[-1]


def test_bad_inputs():
    with pytest.raises(DomainError):
        bgg_diagram(graph("A5 x{2}"), "1,-1,0,0,0")
    with pytest.raises(DomainError):
        bgg_diagram(graph("A5 x{2}"), "1,0,0")
    with pytest.raises(DomainError):
        bgg_diagram(graph("A4 x{1,4}"), "1,0,0,0", "cr_hypersurface")
    with pytest.raises(ConfigurationError):
        bgg_diagram(graph("C4 x{2}"), "adjoint", "cr_hypersurface")


def test_order_of_first_arrows():
    d = bgg_diagram(graph("A5 x{2}"), "0,0,0,0,0")
    assert d.order("w_{0,0}", "w_{0,1}") == 1
    with pytest.raises(DomainError):
        d.order("w_{0,0}", "w_{1,1}")


@given(dominant(5))
def test_first_left_edge_order_is_a2_plus_one(lam):
    d = bgg_diagram(graph("A5 x{2}"), lam)
    arrow = graph("A5 x{2}").arrow("w_{0,0}", "w_{0,1}")
    assert operator_order(d, arrow) == lam[1] + 1


@given(dominant(5))
def test_left_edge_orders(lam):
    d = bgg_diagram(graph("A5 x{2}"), lam)
    row = [d.order(f"w_{{0,{j}}}", f"w_{{0,{j + 1}}}") for j in range(4)]
    assert row == [lam[m] + 1 for m in range(1, 5)]


@pytest.mark.parametrize("text", ["A3 x{2}", "A4 x{1,4}", "C3 x{2}"])
@given(data=st.data())
def test_p_dominance_characterizes_nodes(text, data):
    g = graph(text)
    spec = g.spec
    lam = data.draw(dominant(spec.rank))
    members = {n.elt.action for n in g.nodes}
    for w in weyl_group_elements(spec):
        assert is_p_dominant(g.grading, affine_act(w, lam)) == (w.action in members)


@given(st.data())
def test_affine_action_is_an_action(data):
    spec = grading_from_text("C3 x{2}").spec
    elems = weyl_group_elements(spec)
    w1 = data.draw(st.sampled_from(elems))
    w2 = data.draw(st.sampled_from(elems))
    lam = data.draw(st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(lambda c: Weight(tuple(c))))
    assert affine_act(w1.compose(w2), lam) == affine_act(w1, affine_act(w2, lam))


@pytest.mark.parametrize("text", ["A4 x{2}", "A5 x{2}", "A4 x{1,4}", "A5 x{1,5}", "C4 x{2}", "C5 x{2}"])
@given(data=st.data())
def test_two_step_differences_have_the_family_shape(text, data):
    g = graph(text)
    lam = data.draw(dominant(g.spec.rank, top=2))
    assert difference_violations(bgg_diagram(g, lam)) == []


@given(dominant(4))
def test_highest_weight_conversion_round_trips(lam):
    d = bgg_diagram(graph("A4 x{1,4}"), lam)
    for mu in d.node_labels:
        hw = to_highest_weight(d.grading, mu)
        assert from_highest_weight(d.grading, hw) == mu
        assert module_dim(d.grading, mu) >= 1


def test_orders_are_flagged_on_deeper_gradings():
    assert not bgg_diagram(graph("A5 x{2}"), "adjoint").orders_are_weighted
    assert bgg_diagram(graph("C4 x{2}"), "adjoint").orders_are_weighted


def test_labels_drop_by_order_times_root():
    d = bgg_diagram(graph("C4 x{2}"), "1,2,0,1")
    for a in d.graph.arrows:
        diff = to_simple_root_coords(d.spec, d.node_labels[a.src] - d.node_labels[a.dst])
        c = d.arrow_orders[(a.src, a.dst)]
        assert diff == tuple(c * x for x in a.label.coeffs)


def test_consistency_error_is_distinct():
    assert not issubclass(ConsistencyError, DomainError)
    assert adjoint_weight(grading_from_text("C3 x{2}").spec) == Weight((2, 0, 0))
