import random

import pytest
from hypothesis import given, settings

from pools import atlas, figure
from strategies import graphs
from thickgraphs.generators import gen_forb_inf, gen_random_thick_forest
from thickgraphs.graph import from_edge_list, induced
from thickgraphs.model import model_from_blocks, verify_model
from thickgraphs.oracles import brute_is_unipolar, brute_thick_forest
from thickgraphs.recognition import (
    edge_partition,
    expand_clique,
    leaf_detach,
    recognize_thick_forest,
    unipolar_decompose,
)

C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def labels(g, vs):
    return sorted(g.label(v) for v in vs)


def vs(g, names):
    return [g.vertex(x) for x in names]


def test_edge_partition_on_chordal_thick_tree():
    g = figure("chordalthicktree")
    from thickgraphs.graph import bits, component_of, mask_of
    a = vs(g, "yzt")
    rest = g.full & ~mask_of(a)
    r = bits(component_of(g, g.vertex("s"), rest))
    left = [v for v in bits(rest) if v not in r]
    out = edge_partition(g, a, left, r)
    assert out.ok
    assert labels(g, out.thick_u) == ["y", "z"] and labels(g, out.w_prime) == ["s", "t"]


def test_edge_partition_fails_on_forced_hole():
    # C5 plus a pendant: no thick tree model exists
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    assert not brute_thick_forest(g)
    assert not edge_partition(g, [0], [5], [1, 2, 3, 4]).ok


def test_leaf_detach_examples():
    g = figure("thickedge")
    out = leaf_detach(g, vs(g, "fgij"))
    assert labels(g, out.thick_u) == ["h", "i", "j"] and labels(g, out.w_prime) == ["f", "g"]
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    out = leaf_detach(p3, [1], leaf=[0])
    assert out.ok and sorted(out.thick_u) == [0] and sorted(out.w_prime) == [1]
    two_paths = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
    assert leaf_detach(two_paths, [0]).step == "step 0"


def test_unipolar_examples():
    g = figure("thickedge")
    hub, sats = unipolar_decompose(g, hub_scan=False)
    assert labels(g, hub) == ["e", "f", "g"]
    assert sorted(labels(g, s) for s in sats) == [["a", "b"], ["c", "d"], ["h", "i", "j"]]
    k5 = from_edge_list(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert unipolar_decompose(k5) == (list(range(5)), [])
    assert unipolar_decompose(C5) is None


@settings(max_examples=300)
@given(graphs(max_n=9))
def test_unipolar_agrees_with_brute(g):
    out = unipolar_decompose(g)
    assert (out is not None) == brute_is_unipolar(g)
    if out is not None and g.n:
        hub, sats = out
        assert verify_model(g, model_from_blocks(g, [hub] + sats))


def test_expand_clique_examples():
    g = figure("expand")
    found = sorted(labels(g, c) for c in expand_clique(g, vs(g, "ab")))
    assert found == [list("abcd"), list("abch")]
    g2 = figure("expand2")
    assert [labels(g2, c) for c in expand_clique(g2, vs(g2, "b"))] == [["b", "e"]]
    k4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert expand_clique(k4, [0, 1, 2, 3]) == []
    with pytest.raises(ValueError):
        expand_clique(C5, [0, 2])


def test_recognize_figures():
    g = figure("chordalthicktree")
    out = recognize_thick_forest(g)
    assert out.accepted and verify_model(g, out.model, require="forest")
    k2_model = model_from_blocks(g, [[2 * i, 2 * i + 1] for i in range(13)])
    assert verify_model(g, k2_model, require="forest")
    assert not recognize_thick_forest(figure("unthick")).accepted
    hv = figure("hiddenV1")
    out = recognize_thick_forest(hv)
    assert out.accepted
    stated = model_from_blocks(hv, [vs(hv, b) for b in ("ac", "bf", "ij", "de", "gh", "kl")])
    assert verify_model(hv, stated, require="forest")


def test_rejection_witness_shape():
    out = recognize_thick_forest(figure("unthick"))
    data = out.to_json()
    assert data["accepted"] is False and data["model"] is None
    assert {"step", "vertices"} <= set(data["witness"])


@pytest.mark.parametrize("t", range(4))
def test_infinite_family_is_minimal_forbidden(t):
    g = gen_forb_inf(t)
    assert not recognize_thick_forest(g).accepted
    for v in range(g.n):
        sub, _ = induced(g, [u for u in range(g.n) if u != v])
        assert recognize_thick_forest(sub).accepted


def test_atlas_agrees_with_oracle():
    for g in atlas():
        out = recognize_thick_forest(g)
        assert out.accepted == brute_thick_forest(g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=8, max_n=10))
def test_random_agrees_with_oracle(g):
    assert recognize_thick_forest(g).accepted == brute_thick_forest(g)


def test_generated_forests_accepted():
    rng = random.Random(3)
    for seed in range(300):
        g, m = gen_random_thick_forest(seed, rng.randint(1, 12), rng.randint(1, 5), rng.random())
        assert verify_model(g, m, require="forest")
        out = recognize_thick_forest(g)
        assert out.accepted and verify_model(g, out.model, require="forest")


def test_backstop_off_still_sound():
    for g in atlas()[::7]:
        out = recognize_thick_forest(g, backstop=False)
        if out.accepted:
            assert verify_model(g, out.model, require="forest")
