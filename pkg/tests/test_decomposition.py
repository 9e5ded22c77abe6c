from hypothesis import given, settings

from pools import figure
from strategies import graphs
from thickgraphs.decomposition import (
    classify_atom,
    clique_cutset_decompose,
    is_quasi_thick_forest,
    recognize_cobipartite,
    validate_decomposition,
)
from thickgraphs.graph import from_edge_list, mask_of
from thickgraphs.oracles import brute_is_cobipartite, has_clique_cutset

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
K4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def test_decompose_examples():
    tree = clique_cutset_decompose(from_edge_list(3, [(0, 1), (1, 2)]))
    assert tree.nodes[tree.root].separator == (1,)
    assert sorted(tree.atoms()) == [(0, 1), (1, 2)]
    assert clique_cutset_decompose(K4).atoms() == [(0, 1, 2, 3)]
    g = figure("chordalthicktree")
    assert all(classify_atom(g, a).kind == "clique" for a in clique_cutset_decompose(g).atoms())


def test_classify_examples():
    assert classify_atom(K4, range(4)).kind == "clique"
    kind = classify_atom(C4, range(4))
    assert kind.kind == "cobipartite" and sorted(map(sorted, kind.sides)) == [[0, 1], [2, 3]]
    assert classify_atom(C5, range(5)).kind == "other"


def test_quasi_examples():
    k23 = from_edge_list(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert not is_quasi_thick_forest(k23)
    assert is_quasi_thick_forest(figure("unquasi"))
    assert is_quasi_thick_forest(figure("chordalthicktree"))


def test_cobipartite_examples():
    assert recognize_cobipartite(C4) == ([0, 1], [2, 3])
    assert recognize_cobipartite(C5) is None
    assert recognize_cobipartite(figure("incomparable-left")) is not None


@settings(max_examples=300)
@given(graphs())
def test_decomposition_is_valid_and_atoms_have_no_cutset(g):
    tree = clique_cutset_decompose(g)
    assert validate_decomposition(g, tree) is None
    for atom in tree.atoms():
        assert not has_clique_cutset(g, mask_of(atom))


@settings(max_examples=300)
@given(graphs())
def test_cobipartite_agrees_with_brute(g):
    assert (recognize_cobipartite(g) is not None) == brute_is_cobipartite(g)
