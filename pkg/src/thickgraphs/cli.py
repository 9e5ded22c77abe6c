"""Command line interface.  Results go to stdout, diagnostics to stderr.

Exit codes: 0 accepted / success, 1 rejected, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import counting, oracles
from .chordal import is_chordal
from .decomposition import clique_cutset_decompose, cobipartite_sides, is_quasi_thick_forest
from .fpt import recognize_fpt_trianglefree
from .generators import gen_cochain, gen_forb_inf, gen_maxsepsb, gen_maxsepsc, gen_random_thick_forest
from .graph import Graph, GraphInputError, bits, read_graph, write_graph
from .model import ThickModel, canonical, model_from_blocks, read_model, write_model
from .recognition import RecognitionOutcome, _unipolar, recognize_thick_forest
from .treewidth import count_ind_treewidth, make_nice, read_td

CLASSES = ("cobipartite", "chordal", "unipolar", "quasi-thick-forest", "thick-forest")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _blocks_model(g: Graph, blocks: list[int]) -> ThickModel:
    return canonical(model_from_blocks(g, [bits(b) for b in blocks if b]))


def recognize_class(g: Graph, cls: str) -> RecognitionOutcome:
    if cls == "thick-forest":
        return recognize_thick_forest(g)
    if cls == "cobipartite":
        sides = cobipartite_sides(g)
        if sides is None:
            return RecognitionOutcome(False, witness={"step": "complement not bipartite", "vertices": list(range(g.n))})
        return RecognitionOutcome(True, _blocks_model(g, list(sides)))
    if cls == "chordal":
        res = is_chordal(g)
        if res:
            return RecognitionOutcome(True)
        return RecognitionOutcome(False, witness={"step": "hole", "vertices": res.hole})
    if cls == "unipolar":
        out = _unipolar(g, g.full) if g.n else (0, [])
        if out is None:
            return RecognitionOutcome(False, witness={"step": "no hub", "vertices": list(range(g.n))})
        hub, sats = out
        return RecognitionOutcome(True, _blocks_model(g, [hub] + sats) if g.n else ThickModel(0, (), ()))
    if cls == "quasi-thick-forest":
        res = is_quasi_thick_forest(g)
        if res:
            return RecognitionOutcome(True)
        return RecognitionOutcome(False, witness={"step": "atom neither clique nor cobipartite",
                                                  "vertices": list(res.bad_atom)})
    raise ValueError(cls)


def _emit_verdict(out: RecognitionOutcome) -> int:
    print(out.dumps())
    return 0 if out.accepted else 1


def _cmd_recognize(args) -> int:
    return _emit_verdict(recognize_class(read_graph(args.graph), args.cls))


def _cmd_recognize_fpt(args) -> int:
    return _emit_verdict(recognize_fpt_trianglefree(read_graph(args.graph), args.nu))


def _cmd_decompose(args) -> int:
    g = read_graph(args.graph)
    print(clique_cutset_decompose(g).dumps(g))
    return 0


def _cmd_count(args) -> int:
    g = read_graph(args.graph)
    if args.what == "ind":
        weights = counting.read_weights(args.weights) if args.weights else None
        if args.poly:
            print(json.dumps(counting.independence_polynomial(g, weights).to_json()))
        else:
            print(counting._frac_str(counting.weighted_independent_sum(g, weights)))
    elif args.what == "col":
        if args.q is None:
            raise GraphInputError("count col needs --q")
        print(counting.count_colourings(g, args.q))
    else:
        if not (args.model and args.td):
            raise GraphInputError("count ind-tw needs --model and --td")
        m = read_model(args.model)
        td, n_h = read_td(args.td)
        h = m.thin_graph()
        if n_h != h.n:
            raise GraphInputError(f"decomposition is over {n_h} vertices, model has {h.n} thick vertices")
        try:
            print(count_ind_treewidth(g, m, make_nice(h, td)))
        except ValueError as exc:
            raise GraphInputError(str(exc)) from exc
    return 0


def _cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    if args.what == "ind":
        print(oracles.brute_ind_count(g))
    elif args.what == "col":
        if args.q is None:
            raise GraphInputError("oracle col needs --q")
        print(oracles.brute_col_count(g, args.q))
    elif args.what == "thick-forest":
        ok = oracles.brute_thick_forest(g)
        print(json.dumps({"accepted": ok}))
        return 0 if ok else 1
    else:
        print(json.dumps([list(s) for s in oracles.brute_max_clique_separators(g)]))
    return 0


def _cmd_gen(args) -> int:
    out = Path(args.out)
    if args.family == "random-thick-forest":
        g, m = gen_random_thick_forest(args.seed, args.nh, args.max_size, args.density, args.connected)
        write_graph(g, out, comment=f"random thick forest seed={args.seed} nH={args.nh}")
        write_model(m, args.model_out or out.with_suffix(".model.json"))
        return 0
    if args.k is None:
        raise GraphInputError(f"gen {args.family} needs --k")
    if args.family == "cochain":
        c = gen_cochain(args.k)
        write_graph(c.graph, out, comment=f"cochain k={args.k} U={list(c.side_u)} W={list(c.side_w)}")
    elif args.family == "maxsepsb":
        write_graph(gen_maxsepsb(args.k), out, comment=f"maxsepsb k={args.k}")
    elif args.family == "maxsepsc":
        write_graph(gen_maxsepsc(args.k), out, comment=f"maxsepsc k={args.k}")
    else:
        write_graph(gen_forb_inf(args.k), out, comment=f"forb-inf t={args.k}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thickgraphs", description="Thick graph recognition and exact counting.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="decide class membership")
    r.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    r.add_argument("graph")
    r.set_defaults(func=_cmd_recognize)

    f = sub.add_parser("recognize-fpt", help="triangle-free thin graph with at most N thick vertices")
    f.add_argument("--nu", type=int, required=True)
    f.add_argument("graph")
    f.set_defaults(func=_cmd_recognize_fpt)

    d = sub.add_parser("decompose", help="clique cutset decomposition as JSON")
    d.add_argument("graph")
    d.set_defaults(func=_cmd_decompose)

    c = sub.add_parser("count", help="exact counts on quasi thick forests")
    c.add_argument("what", choices=("ind", "col", "ind-tw"))
    c.add_argument("graph")
    c.add_argument("--weights")
    c.add_argument("--poly", action="store_true")
    c.add_argument("--q", type=int)
    c.add_argument("--model")
    c.add_argument("--td")
    c.set_defaults(func=_cmd_count)

    o = sub.add_parser("oracle", help="brute-force reference values (small graphs)")
    o.add_argument("what", choices=("ind", "col", "thick-forest", "mcs"))
    o.add_argument("graph")
    o.add_argument("--q", type=int)
    o.set_defaults(func=_cmd_oracle)

    gp = sub.add_parser("gen", help="write generated graphs")
    gp.add_argument("family", choices=("cochain", "maxsepsb", "maxsepsc", "forbinf", "random-thick-forest"))
    gp.add_argument("--k", type=int, help="size parameter (t for forbinf)")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--nh", type=int, default=6)
    gp.add_argument("--max-size", type=int, default=4)
    gp.add_argument("--density", type=float, default=0.5)
    gp.add_argument("--connected", action="store_true")
    gp.add_argument("--model-out")
    gp.add_argument("-o", "--out", required=True)
    gp.set_defaults(func=_cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # input errors, class errors and size caps are all ValueErrors
        print(f"thickgraphs: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
