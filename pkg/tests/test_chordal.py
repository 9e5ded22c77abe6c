from hypothesis import given, settings

from pools import figure
from strategies import graphs
from thickgraphs.chordal import (
    cobipartite_max_clique_separators,
    is_chordal,
    lexbfs_order,
    maximal_cliques_chordal,
    mcs_m,
    minimal_triangulation,
    peo_violation,
)
from thickgraphs.generators import gen_cochain
from thickgraphs.graph import from_edge_list, from_masks
from thickgraphs.oracles import find_long_hole, four_holes, maximal_cliques

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
K3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
P3 = from_edge_list(3, [(0, 1), (1, 2)])


def test_lexbfs_examples():
    assert sorted(lexbfs_order(K3)) == [0, 1, 2]
    assert lexbfs_order(P3, start=2) == [2, 1, 0]
    assert lexbfs_order(from_edge_list(3, [])) == [0, 1, 2]


def test_is_chordal_examples():
    res = is_chordal(C4)
    assert not res and sorted(res.hole) == [0, 1, 2, 3]
    assert is_chordal(figure("unthick"))
    assert is_chordal(from_edge_list(5, [(0, 1), (1, 2), (1, 3), (3, 4)]))


def test_minimal_triangulation_examples():
    assert len(minimal_triangulation(C4)) == 1
    assert len(minimal_triangulation(C5)) == 2
    assert minimal_triangulation(P3) == frozenset()


def test_maximal_cliques_examples():
    k4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert maximal_cliques_chordal(k4, is_chordal(k4).peo) == [[0, 1, 2, 3]]
    assert sorted(maximal_cliques_chordal(P3, is_chordal(P3).peo)) == [[0, 1], [1, 2]]
    g = figure("unthick")
    found = {frozenset(g.label(v) for v in c) for c in maximal_cliques_chordal(g, is_chordal(g).peo)}
    assert {frozenset("efh"), frozenset("egd")} <= found


def test_cobipartite_separators_examples():
    c = gen_cochain(4)
    seps = cobipartite_max_clique_separators(c.graph, c.side_u, c.side_w)
    assert len(seps) == 3
    u = set(c.side_u)
    assert sorted(len(u & set(s)) for s in seps) == [1, 2, 3]
    full = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert cobipartite_max_clique_separators(full, [0, 1], [2, 3]) == []
    assert cobipartite_max_clique_separators(C4, [0, 1], [2, 3]) == []


@settings(max_examples=300)
@given(graphs())
def test_chordal_agrees_with_hole_search(g):
    res = is_chordal(g)
    holeless = not four_holes(g) and find_long_hole(g, 5) is None
    assert bool(res) == holeless
    if res:
        assert peo_violation(g, res.peo) is None
    else:
        h = res.hole
        assert len(h) >= 4 and all(g.has_edge(h[i], h[(i + 1) % len(h)]) for i in range(len(h)))


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_mcs_m_is_minimal(g):
    tri = mcs_m(g)
    filled = from_masks(g.n, tri.filled_masks(g))
    assert is_chordal(filled)
    # minimality: no single fill edge can be dropped
    for e in tri.fill:
        masks = list(tri.filled_masks(g))
        u, v = e
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        assert not is_chordal(from_masks(g.n, masks))


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_chordal_maximal_cliques_match_brute(g):
    res = is_chordal(g)
    if res:
        ours = {frozenset(c) for c in maximal_cliques_chordal(g, res.peo)}
        assert ours == {frozenset(i for i in range(g.n) if m >> i & 1) for m in maximal_cliques(g)}
