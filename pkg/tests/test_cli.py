import json

import pytest

from pools import FIGURES
from thickgraphs.cli import main
from thickgraphs.graph import from_edge_list, read_graph, write_graph
from thickgraphs.model import read_model, verify_model


@pytest.fixture
def p3(tmp_path):
    path = tmp_path / "p3.graph"
    write_graph(from_edge_list(3, [(0, 1), (1, 2)]), path)
    return path


@pytest.fixture
def k4(tmp_path):
    path = tmp_path / "k4.graph"
    write_graph(from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]), path)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_count_col(capsys, p3):
    assert run(capsys, "count", "col", p3, "--q", 3) == (0, "12", "")


def test_count_ind(capsys, k4):
    assert run(capsys, "count", "ind", k4)[:2] == (0, "5")


def test_count_ind_weights_and_poly(capsys, tmp_path, p3):
    w = tmp_path / "w.json"
    w.write_text('{"weights": [2, 3, 5]}')
    assert run(capsys, "count", "ind", p3, "--weights", w)[1] == "21"
    assert json.loads(run(capsys, "count", "ind", p3, "--poly")[1]) == ["1", "3", "1"]


def test_recognize_unthick(capsys):
    code, out, _ = run(capsys, "recognize", "--class", "thick-forest", FIGURES / "unthick.graph")
    data = json.loads(out)
    assert code == 1 and data["accepted"] is False and data["witness"]["step"]


@pytest.mark.parametrize("cls, name, expected", [
    ("thick-forest", "hiddenV1", 0),
    ("quasi-thick-forest", "unquasi", 0),
    ("quasi-thick-forest", "incomparable-right", 1),
    ("cobipartite", "incomparable-left", 0),
    ("chordal", "unthick", 0),
    ("chordal", "unquasi", 1),
    ("unipolar", "thickedge", 0),
    ("unipolar", "forb-vc-1", 1),
])
def test_recognize_classes(capsys, cls, name, expected):
    code, out, _ = run(capsys, "recognize", "--class", cls, FIGURES / f"{name}.graph")
    assert code == expected and json.loads(out)["accepted"] == (expected == 0)


def test_recognize_fpt(capsys, tmp_path):
    path = tmp_path / "c5.graph"
    write_graph(from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)]), path)
    assert run(capsys, "recognize-fpt", "--nu", 4, path)[0] == 0
    assert run(capsys, "recognize-fpt", "--nu", 3, path)[0] == 1


def test_decompose(capsys, p3):
    code, out, _ = run(capsys, "decompose", p3)
    assert code == 0 and json.loads(out)


def test_count_ind_tw(capsys, tmp_path):
    g_path, m_path, td_path = tmp_path / "f.graph", tmp_path / "f.model.json", tmp_path / "f.td"
    assert run(capsys, "gen", "random-thick-forest", "--seed", 4, "--nh", 5, "-o", g_path)[0] == 0
    g, m = read_graph(g_path), read_model(m_path)
    assert verify_model(g, m, require="forest")
    from thickgraphs.treewidth import exact_td, write_td
    write_td(exact_td(m.thin_graph()), m.thin_n, td_path)
    code, out, _ = run(capsys, "count", "ind-tw", g_path, "--model", m_path, "--td", td_path)
    assert code == 0 and out == run(capsys, "count", "ind", g_path)[1]


def test_oracles(capsys, p3):
    assert run(capsys, "oracle", "ind", p3)[1] == "5"
    assert run(capsys, "oracle", "col", p3, "--q", 2)[1] == "2"
    assert run(capsys, "oracle", "thick-forest", p3)[0] == 0
    assert json.loads(run(capsys, "oracle", "mcs", p3)[1]) == []


@pytest.mark.parametrize("family", ["cochain", "maxsepsb", "maxsepsc", "forbinf"])
def test_gen_families(capsys, tmp_path, family):
    out = tmp_path / "g.graph"
    assert run(capsys, "gen", family, "--k", 3, "-o", out)[0] == 0
    assert read_graph(out).n > 0


def test_input_errors(capsys, tmp_path, p3):
    bad = tmp_path / "bad.graph"
    bad.write_text("3 1\n0 0\n")
    code, _, err = run(capsys, "recognize", "--class", "chordal", bad)
    assert code == 2 and err.startswith("thickgraphs: error:")
    assert run(capsys, "count", "col", tmp_path / "missing.graph", "--q", 2)[0] == 2
    assert run(capsys, "count", "col", p3)[0] == 2


def test_class_error_exit_code(capsys, tmp_path):
    path = tmp_path / "c5.graph"
    write_graph(from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)]), path)
    code, _, err = run(capsys, "count", "col", path, "--q", 3)
    assert code == 2 and "error" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["recognize", "--class", "nope", "x"])
    assert exc.value.code == 2
