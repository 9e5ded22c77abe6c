import pytest
from hypothesis import given, settings

from strategies import graphs
from thickgraphs.fpt import recognize_fpt_trianglefree
from thickgraphs.graph import from_edge_list
from thickgraphs.model import verify_model
from thickgraphs.oracles import min_trianglefree_thin_size

C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_c5():
    for nu in (4, 5):
        out = recognize_fpt_trianglefree(C5, nu)
        assert out.accepted and out.model.thin_n in (4, 5)
    assert not recognize_fpt_trianglefree(C5, 3).accepted


def test_forest_fast_path():
    path = from_edge_list(6, [(i, i + 1) for i in range(5)])
    out = recognize_fpt_trianglefree(path, 6)
    assert out.accepted and verify_model(path, out.model, require="triangle-free")
    assert recognize_fpt_trianglefree(from_edge_list(1, []), 1).accepted


def test_negative_nu():
    with pytest.raises(ValueError):
        recognize_fpt_trianglefree(C5, -1)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_agrees_with_cover_search(g):
    best = min_trianglefree_thin_size(g)
    for nu in (2, 3, 4, 5):
        out = recognize_fpt_trianglefree(g, nu)
        assert out.accepted == (best is not None and best <= nu)
        if out.accepted:
            assert verify_model(g, out.model, require="triangle-free") and out.model.thin_n <= nu
