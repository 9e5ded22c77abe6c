import pytest
from hypothesis import given, settings

from strategies import graphs
from thickgraphs.generators import gen_cochain, gen_maxsepsb, gen_maxsepsc, gen_random_thick_forest
from thickgraphs.graph import from_edge_list
from thickgraphs.model import verify_model
from thickgraphs.oracles import (
    OracleCapError,
    brute_col_count,
    brute_ind_count,
    brute_max_clique_separators,
    chromatic_poly_delcon,
    count_maximal_independent_sets_cycle,
)
from thickgraphs.recognition import recognize_thick_forest
from thickgraphs.chordal import is_chordal
from thickgraphs.decomposition import recognize_cobipartite

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
K3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
P3 = from_edge_list(3, [(0, 1), (1, 2)])


def test_oracle_examples():
    assert brute_ind_count(C5) == 11
    assert brute_col_count(K3, 3) == 6
    assert brute_col_count(P3, 2) == 2
    assert chromatic_poly_delcon(C4, 3) == 18
    assert chromatic_poly_delcon(from_edge_list(2, [(0, 1)]), 2) == 2
    assert chromatic_poly_delcon(from_edge_list(3, []), 2) == 8
    assert brute_max_clique_separators(P3) == []
    assert brute_max_clique_separators(K3) == []


def test_oracle_caps():
    with pytest.raises(OracleCapError):
        brute_ind_count(from_edge_list(40, []))


def test_maxsepsb_small():
    seps = brute_max_clique_separators(gen_maxsepsb(2))
    assert len(seps) == 4 and all(len(s) == 2 for s in seps)
    assert len(brute_max_clique_separators(gen_maxsepsb(4))) >= 16


def test_maxsepsc_three():
    g = gen_maxsepsc(3)
    assert g.n == 10
    assert len(brute_max_clique_separators(g)) == 2 * count_maximal_independent_sets_cycle(6)


def test_perrin_values():
    # maximal independent sets of C_n follow the Perrin numbers
    assert [count_maximal_independent_sets_cycle(n) for n in range(3, 11)] == [3, 2, 5, 5, 7, 10, 12, 17]


@pytest.mark.parametrize("k", range(2, 9))
def test_cochain_shape(k):
    c = gen_cochain(k)
    assert is_chordal(c.graph) and recognize_cobipartite(c.graph) is not None
    assert len(brute_max_clique_separators(c.graph)) == k - 1


def test_nonstrict_cochain_loses_one():
    assert len(brute_max_clique_separators(gen_cochain(5, strict=False).graph)) == 3


def test_random_thick_forest_seed_one():
    g, m = gen_random_thick_forest(1, 6, 4, 0.5)
    assert verify_model(g, m, require="forest") and recognize_thick_forest(g).accepted


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_colour_oracles_agree(g):
    for q in range(4):
        assert brute_col_count(g, q) == chromatic_poly_delcon(g, q)
