import pytest

from bgg_explorer.bggdiag import bgg_diagram
from bgg_explorer.families import identified_chains, monotone_chains, rowcol_chains, predicted_chains
from bgg_explorer.hasse import hasse_graph
from bgg_explorer.parabolic import grading_from_text


def graph(text):
    return hasse_graph(grading_from_text(text))


def test_rows_and_columns():
    chains = rowcol_chains(graph("A5 x{2}"))
    assert chains[0] == ("w_{0,0}", "w_{0,1}", "w_{0,2}", "w_{0,3}", "w_{0,4}")
    assert ("w_{0,4}", "w_{1,4}", "w_{2,4}", "w_{3,4}", "w_{4,4}") in chains
    assert len(chains) == 6


def test_up_and_down_paths():
    chains = monotone_chains(graph("A4 x{1,4}"))
    assert len(chains) == 10 and all(len(c) == 4 for c in chains)
    assert ("w_{0,0}", "w_{1,0}", "w_{2,0}", "w_{3,0}") in chains
    assert ("w^{0,3}", "w^{0,2}", "w^{0,1}", "w^{0,0}") in chains


@pytest.mark.parametrize("text", ["C3 x{2}", "C4 x{2}", "A5 x{1,5}", "A6 x{2}"])
def test_chains_are_directed_paths(text):
    g = graph(text)
    for chain in predicted_chains(g):
        assert len(chain) >= 3
        for a, b in zip(chain, chain[1:]):
            assert g.arrow(a, b) is not None


def test_identified_picture():
    d = bgg_diagram(graph("A4 x{1,4}"), "adjoint", "cr_hypersurface")
    chains = identified_chains(d)
    names = {d.class_name(i) for i in range(len(d.classes))}
    assert chains and all(x in names for c in chains for x in c)


def test_unknown_family():
    with pytest.raises(ValueError):
        predicted_chains(graph("A4 x{3}"))
    with pytest.raises(ValueError):
        rowcol_chains(graph("C4 x{2}"))
