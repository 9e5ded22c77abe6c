"""Write the figure corpus to data/figures with a manifest of expected verdicts.

Each verdict is checked against the brute-force oracle before anything is
written, so a stale manifest cannot be produced silently.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from thickgraphs.decomposition import is_quasi_thick_forest
from thickgraphs.graph import from_named_edges, write_graph
from thickgraphs.oracles import FOREST_CAP, brute_thick_forest
from thickgraphs.recognition import recognize_thick_forest


def _chordal_thick_tree() -> str:
    pairs = []
    for u, v, h1, h2 in [(1, 2, 19, 20), (3, 4, 19, 20), (5, 6, 19, 20), (7, 8, 21, 22),
                         (9, 10, 21, 22), (11, 12, 21, 22), (13, 14, 23, 24), (15, 16, 23, 24),
                         (17, 18, 23, 24), (19, 20, 25, 26), (21, 22, 25, 26), (23, 24, 25, 26)]:
        pairs += [(v, u), (u, h1), (h1, v), (v, h2)]
    pairs.append((25, 26))
    abc = "abcdefghijklmnopqrstuvwxyz"
    return " ".join(f"{abc[a - 1]}-{abc[b - 1]}" for a, b in pairs)


# name -> (edges, thick forest?, quasi thick forest?, note)
FIGURES = {
    "chordalthicktree": (_chordal_thick_tree(), True, True, "chordal thick tree with K2 thick vertices"),
    "unthick": ("f-h h-e e-g g-d f-e e-d h-g c-b b-a a-g g-b b-h h-c", False, None,
                "chordal but not a thick forest"),
    "unquasi": ("d-a a-e e-g g-c c-a a-b d-f f-b", False, True, "quasi thick forest, not a thick forest"),
    "hiddenV1": ("a-c c-b a-d d-e d-c g-h h-l l-k k-g b-f f-c d-g g-e f-i i-j j-f", True, True,
                 "model {a,c} {b,f} {i,j} {d,e} {g,h} {k,l}"),
    "thickedge": ("a-e e-f g-d d-c c-f f-b b-a h-i h-f b-e c-g g-j j-f f-i i-g f-g i-j g-e j-h",
                  True, True, "thick tree used for leaf detachment"),
    "expand": ("a-b b-e e-g g-c c-f f-d d-a a-c c-b b-d d-c a-e b-g a-h h-b c-h h-i i-c j-a k-b",
               None, None, "clique expansion from {a,b}"),
    "expand2": ("a-b b-c d-e e-f a-d d-g e-b c-f f-h", None, None, "clique expansion from {b}"),
    "incomparable-left": ("t-l l-b b-r r-t t-c c-b l-c c-r", True, True, "cobipartite, no clique cutset"),
    "incomparable-right": ("c1-l1 l1-l2 l2-l3 l3-c1 l1-c2 c2-l3 c1-r1 r1-r2 r2-r3 r3-c1 r1-c2 c2-r3",
                           False, False, "weakly chordal, outside the quasi class"),
    "forb-vc-1": ("a-d a-e a-f b-d b-e b-f", False, None, "K_{2,3}"),
    "forb-vc-2": ("g-c c-d d-e e-f f-g g-a a-c c-e", False, None, "minimal forbidden"),
    "forb-vc-3": ("g-c c-d d-e e-f f-g g-a a-b b-c c-e", False, None, "minimal forbidden"),
    "forb-vc-4": ("c-a c-b c-d c-e c-f c-g g-a a-b d-e e-f", False, None, "minimal forbidden"),
    "forb-vc-5": ("c-d d-e e-f f-g g-h h-a a-b b-c c-e e-g g-a a-c c-g", False, None, "minimal forbidden"),
}


def build(out: Path) -> dict:
    out.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, (edges, forest, quasi, note) in FIGURES.items():
        g = from_named_edges(edges)
        # above the oracle cap the recognizer's verified model decides
        truth = brute_thick_forest(g) if g.n <= FOREST_CAP else recognize_thick_forest(g).accepted
        if forest is not None and truth != forest:
            raise SystemExit(f"{name}: oracle says thick forest = {truth}, manifest says {forest}")
        q = bool(is_quasi_thick_forest(g))
        if quasi is not None and q != quasi:
            raise SystemExit(f"{name}: quasi check says {q}, manifest says {quasi}")
        write_graph(g, out / f"{name}.graph", comment=f"{name}: {note}")
        manifest[name] = {"file": f"{name}.graph", "thick_forest": truth, "quasi_thick_forest": q,
                          "minimal_forbidden": name.startswith("forb-vc"),
                          "source": "figure" if forest is not None else "oracle"}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "figures"))
    args = ap.parse_args()
    for name, row in build(Path(args.out)).items():
        print(f"{name:20s} forest={row['thick_forest']!s:5s} quasi={row['quasi_thick_forest']}")


if __name__ == "__main__":
    main()
