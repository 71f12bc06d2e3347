import pytest

from bgg_explorer.bggdiag import bgg_diagram, curvature_kind
from bgg_explorer.errors import DomainError
from bgg_explorer.hasse import hasse_graph
from bgg_explorer.liealg import (
    build_algebra,
    check_algebra_membership,
    check_jacobi,
    codifferential,
    component_homogeneity,
    diagram_weight,
    euler_characteristic,
    harmonic_highest_weights,
    homology_dims,
    kostant_complex,
    representation,
)
from bgg_explorer.parabolic import grading_from_text
from bgg_explorer.rootlat import CartanSpec, Weight

# Codifferential of A2 with the first node crossed, adjoint coefficients, in the
# module's fixed basis order; frozen after the d*d = 0 and homology checks below.
A2_DEGREE_TWO = {(5, 0): -1, (6, 0): -1, (8, 1): 1, (9, 1): 1, (10, 1): 1, (11, 2): -1,
                 (13, 3): -1, (13, 4): -1, (14, 3): 2, (14, 4): -1, (15, 5): 1}
A2_DEGREE_ONE = {(2, 0): 1, (3, 1): -1, (3, 2): -1, (4, 2): -1, (5, 4): 1, (6, 5): -1,
                 (6, 6): 1, (6, 7): 1, (7, 8): 2, (7, 9): -1, (7, 10): -1}


def nonzero(m):
    return {(i, j): int(x) for i, row in enumerate(m.to_dense()) for j, x in enumerate(row) if x}


@pytest.mark.parametrize("text", ["A1", "A2", "A3", "C2", "C3"])
def test_matrix_models(text):
    alg = build_algebra(CartanSpec.parse(text))
    assert alg.dim == alg.spec.dim
    assert check_algebra_membership(alg)
    assert check_jacobi(alg)


def test_pinned_signs():
    g = grading_from_text("A2 x{1}")
    assert nonzero(codifferential(g, "adjoint", 1)) == A2_DEGREE_ONE
    assert nonzero(codifferential(g, "adjoint", 2)) == A2_DEGREE_TWO


@pytest.mark.parametrize(
    "text, rep", [("A2 x{1}", "adjoint"), ("A3 x{2}", "adjoint"), ("A3 x{1,3}", "standard"), ("C3 x{2}", "adjoint")]
)
def test_codifferential_squares_to_zero(text, rep):
    g = grading_from_text(text)
    cx = kostant_complex(g, rep)
    for k in range(2, cx.m + 1):
        assert (cx.codifferential(k - 1) @ cx.codifferential(k)).is_zero()


@pytest.mark.parametrize("text", ["A2 x{1}", "A3 x{2}", "A3 x{1,3}", "C3 x{2}"])
def test_euler_characteristics_agree(text):
    lhs, rhs = euler_characteristic(grading_from_text(text))
    assert lhs == rhs


@pytest.mark.parametrize("text", ["A2 x{1}", "A3 x{2}", "A4 x{2}", "A3 x{1,3}", "C3 x{2}"])
def test_homology_has_one_component_per_node(text):
    g = grading_from_text(text)
    graph = hasse_graph(g)
    k_max = graph.max_length
    total = sum(len(harmonic_highest_weights(g, "adjoint", k)) for k in range(k_max + 1))
    assert total == len(graph.nodes)


def test_homology_dims():
    assert homology_dims(grading_from_text("A2 x{1}"), "adjoint") == [2, 4, 2]
    assert homology_dims(grading_from_text("A3 x{2}"), "standard") == [2, 6, 8, 6, 2]


def test_zeroth_homology_of_defining_representations():
    # lambda_1 labels the 2-dimensional E factor; its dual twin sees the F factor
    g = grading_from_text("A5 x{2}")
    assert homology_dims(g, "dual_standard")[0] == 2
    assert homology_dims(g, "standard")[0] == 4
    d = bgg_diagram(hasse_graph(g), "1,0,0,0,0")
    assert d.node_dims[0] == 2


@pytest.mark.parametrize("text, rep", [("A3 x{2}", "adjoint"), ("A3 x{2}", "standard"), ("A4 x{1,4}", "dual_standard")])
def test_labels_match_diagram(text, rep):
    g = grading_from_text(text)
    d = bgg_diagram(hasse_graph(g), diagram_weight(g.spec, rep))
    for k in range(d.graph.max_length + 1):
        expected = sorted((d.node_labels[n.index] for n in d.nodes_of_degree(k)), key=tuple)
        assert harmonic_highest_weights(g, rep, k) == expected


def test_curvature_tags_match():
    for text in ("A3 x{2}", "C3 x{2}", "A4 x{1,4}"):
        g = grading_from_text(text)
        d = bgg_diagram(hasse_graph(g), "adjoint")
        tags = component_homogeneity(g)
        for n in d.nodes_of_degree(2):
            assert tags[d.node_labels[n.index]] == curvature_kind(d, n)


def test_representation_weights():
    a3 = CartanSpec.parse("A3")
    assert representation(a3, "standard").dim == 4
    assert diagram_weight(a3, "standard") == Weight((0, 0, 1))
    assert diagram_weight(a3, "dual_standard") == Weight((1, 0, 0))
    assert diagram_weight(CartanSpec.parse("C3"), "standard") == Weight((1, 0, 0))


def test_degree_out_of_range():
    with pytest.raises(DomainError):
        codifferential(grading_from_text("A2 x{1}"), "adjoint", 5)
