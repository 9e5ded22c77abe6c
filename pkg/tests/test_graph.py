import pytest
from hypothesis import given

from strategies import graphs
from thickgraphs.graph import (
    GraphInputError,
    bipartition,
    complement,
    components,
    format_graph,
    from_edge_list,
    induced,
    is_clique,
    parse_graph,
    separates,
    mask_of,
)

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_construction():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.m == 2 and p3.degree(1) == 2
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(0, 0)])


def test_complement_examples():
    assert complement(from_edge_list(3, [(0, 1), (1, 2), (0, 2)])).m == 0
    assert complement(C4).sorted_edges() == [(0, 2), (1, 3)]
    assert complement(C5).m == 5


def test_induced_and_components():
    sub, verts = induced(C4, [0, 1, 2])
    assert verts == (0, 1, 2) and sub.sorted_edges() == [(0, 1), (1, 2)]
    assert induced(C4, [])[0].n == 0
    assert sorted(map(sorted, components(from_edge_list(4, [(0, 1), (2, 3)])))) == [[0, 1], [2, 3]]
    assert len(components(from_edge_list(3, []))) == 3


def test_cliques_and_bipartition():
    assert is_clique(C4, [0, 1]) and not is_clique(C4, [0, 1, 2]) and is_clique(C4, [])
    sides = bipartition(C4)
    assert sorted(map(sorted, sides)) == [[0, 2], [1, 3]]
    assert bipartition(C5) is None
    assert bipartition(from_edge_list(1, [])) == ([0], [])


def test_separates_needs_two_sides():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert separates(p3, mask_of([1]))
    assert not separates(p3, mask_of([0, 1]))


@pytest.mark.parametrize("text, fragment", [
    ("", "header"),
    ("2 1\n0 0\n", "0 <= u < v"),
    ("3 2\n0 1\n", "promises 2"),
    ("3 2\n0 1\n0 1\n", "duplicate"),
    ("2 1\n0 x\n", "non-integer"),
    ("# names: a b c\n2 0\n", "names"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GraphInputError, match=fragment):
        parse_graph(text)


@given(graphs())
def test_format_round_trip(g):
    back = parse_graph(format_graph(g, comment="x"))
    assert back.n == g.n and back.edges == g.edges


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)).edges == g.edges
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2
