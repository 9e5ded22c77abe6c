"""Recognition of cobipartite, unipolar and thick-forest graphs.

Vertex sets are bitmasks internally; the public wrappers take and return
sorted vertex lists.  The thick-forest recognizer is an exact search over
subproblems P(V, K): "G[V] has a thick-tree model with the clique K inside
one thick vertex".  Separator hubs, the EDGE repair and LEAF give the
candidate thick vertices tried first; a complete clique enumeration backs
them up, so the verdict never depends on the heuristics being right.
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .decomposition import (
    clique_cutset_decompose,
    cobipartite_sides,
    is_quasi_thick_forest,
    recognize_cobipartite,
)
from .graph import (
    Graph,
    bits,
    common_nbr_mask,
    component_of,
    components_in,
    is_clique_mask,
    lowest,
    mask_of,
    nbr_mask,
    separates,
)
from .model import ThickModel, canonical, verify_model

__all__ = [
    "EdgeResult",
    "RecognitionOutcome",
    "SEARCH_STATS",
    "edge_partition",
    "expand_clique",
    "leaf_detach",
    "recognize_cobipartite",
    "recognize_thick_forest",
    "unipolar_decompose",
    "verify_model",
]

# counters for how often each stage of the search produced the answer
SEARCH_STATS: Counter = Counter()


@dataclass(frozen=True)
class RecognitionOutcome:
    accepted: bool
    model: ThickModel | None = None
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "model": self.model.to_json() if self.model is not None else None,
            "witness": self.witness,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class EdgeResult:
    """Outcome of EDGE or LEAF.  On failure ``step`` names the failed check."""

    ok: bool
    thick_u: tuple[int, ...] = ()
    w_prime: tuple[int, ...] = ()
    step: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _cluster_parts(g: Graph, within: int) -> list[int] | None:
    parts = components_in(g, within)
    for c in parts:
        if not is_clique_mask(g, c):
            return None
    return parts


# --- EDGE -------------------------------------------------------------------

def _edge(g: Graph, a: int, l: int, r: int, u0: int | None = None) -> tuple[int, int] | str:
    """EDGE on masks.  Returns (thick u, W') or the name of the failed step."""
    masks = g.masks
    if u0 is None:
        u0 = 0
        for v in bits(a):
            if masks[v] & l:
                u0 |= 1 << v
    u = u0
    wp = 0
    last_u = u0
    while True:
        w_new = nbr_mask(g, last_u) & r & ~wp
        wp |= w_new
        if not is_clique_mask(g, wp):
            return "step 2"
        u_new = 0
        for w in bits(w_new):
            u_new |= a & ~masks[w]
        u_new &= ~u
        u |= u_new
        if not is_clique_mask(g, u):
            return "step 4"
        if not u_new:
            break
        last_u = u_new
    rest = a & ~u
    w_extra = 0
    for v in bits(rest):
        if masks[v] & r & ~wp:
            w_extra |= 1 << v
    wp |= w_extra
    thick_u = u | (rest & ~w_extra)
    return thick_u, wp


def _edge_post(g: Graph, thick_u: int, wp: int, l: int) -> bool:
    """thick_u and W' are cliques and every edge leaving thick_u (other than
    into L) ends in W'."""
    if not (is_clique_mask(g, thick_u) and is_clique_mask(g, wp)):
        return False
    return nbr_mask(g, thick_u) & ~l & ~wp == 0


def edge_partition(g: Graph, A: Iterable[int], L: Iterable[int], R: Iterable[int],
                   U0: Iterable[int] | None = None) -> EdgeResult:
    """Split the maximal clique separator A into the thick vertex u on the L
    side and the clique W' it cuts against on the R side."""
    a, l, r = mask_of(A), mask_of(L), mask_of(R)
    out = _edge(g, a, l, r, None if U0 is None else mask_of(U0))
    if isinstance(out, str):
        return EdgeResult(False, step=out)
    thick_u, wp = out
    if not _edge_post(g, thick_u, wp, l):
        return EdgeResult(False, step="cut check")
    return EdgeResult(True, tuple(bits(thick_u)), tuple(bits(wp)))


# --- LEAF -------------------------------------------------------------------

def _leaf(g: Graph, a: int, within: int, r_ref: int | None = None,
          leaf: int | None = None) -> tuple[int, int] | str:
    rest = within & ~a
    parts = components_in(g, rest)
    options = []
    for s in parts:
        if leaf is not None and not s & leaf:
            continue
        if is_clique_mask(g, s) and component_of(g, lowest(within & ~s), within & ~s) == within & ~s:
            options.append(s)
    if not options:
        return "step 0"
    # smallest clique remainder first, then least vertex
    options.sort(key=lambda s: (s.bit_count(), s & -s))
    failure = "step 0"
    for s in options:
        b = common_nbr_mask(g, s, a)
        a_prime = s | b
        r = (within if r_ref is None else r_ref) & ~s & ~a
        out = _edge(g, a_prime, 0, r, s)
        if isinstance(out, str):
            failure = out
            continue
        thick_u, wp = out
        wp |= nbr_mask(g, thick_u) & within
        if not is_clique_mask(g, wp):
            failure = "cut check"
            continue
        return thick_u, wp
    return failure


def leaf_detach(g: Graph, A: Iterable[int], leaf: Iterable[int] | None = None) -> EdgeResult:
    """Detach the leaf thick vertex hanging off the separator A.

    ``leaf`` may name a vertex (or set) of the leaf side when several
    components of G - A qualify; by default the smallest one that works is used.
    """
    out = _leaf(g, mask_of(A), g.full, leaf=None if leaf is None else mask_of(leaf))
    if isinstance(out, str):
        return EdgeResult(False, step=out)
    return EdgeResult(True, tuple(bits(out[0])), tuple(bits(out[1])))


# --- UNIPOLAR ---------------------------------------------------------------

def _max_clique_separators(g: Graph, within: int) -> list[int]:
    """Maximal clique separators grown from the separators of a clique cutset
    decomposition of G[within]: each separator S is grown greedily to a
    maximal clique once from S itself and once from S + x for every x complete
    to S; only growths that still separate are kept."""
    out: list[int] = []
    tree = clique_cutset_decompose(g, within)
    for nd in tree.internal():
        sep = mask_of(nd.separator)
        if not sep:
            continue
        common = common_nbr_mask(g, sep, within)
        for start in [sep] + [sep | (1 << x) for x in bits(common)]:
            a = start
            grow = common_nbr_mask(g, a, within)
            while grow:
                v = lowest(grow)
                a |= 1 << v
                grow &= g.masks[v]
            if a not in out and separates(g, a, within):
                out.append(a)
    return out


def _unipolar_steps(g: Graph, within: int, hub_scan: bool = True) -> tuple[int, list[int]] | None:
    if is_clique_mask(g, within):
        return within, []
    seps = _max_clique_separators(g, within)
    if not seps:
        sides = cobipartite_sides(g, within)
        if sides is None:
            return None
        return sides[0], [sides[1]]
    for a in seps if hub_scan else ():
        parts = _cluster_parts(g, within & ~a)
        if parts is not None:
            return a, parts
    current = within
    while not is_clique_mask(g, current):
        for a in _max_clique_separators(g, current):
            out = _leaf(g, a, current, r_ref=within)
            if not isinstance(out, str):
                current &= ~out[0]
                break
        else:
            return None
    parts = _cluster_parts(g, within & ~current)
    if parts is None:
        return None
    return current, parts


def _find_induced_p3(g: Graph, within: int) -> tuple[int, int, int] | None:
    masks = g.masks
    for c in components_in(g, within):
        if is_clique_mask(g, c):
            continue
        for v in bits(c):
            far = c & ~masks[v] & ~(1 << v)
            if far:
                break
        # shortest path from v to a non-neighbour: its first three vertices
        prev = {v: -1}
        frontier = [v]
        seen = 1 << v
        while frontier:
            nxt = []
            for x in frontier:
                for y in bits(masks[x] & c & ~seen):
                    seen |= 1 << y
                    prev[y] = x
                    nxt.append(y)
                    if (far >> y) & 1:
                        mid = prev[y]
                        return prev[mid], mid, y
            frontier = nxt
    return None


def _unipolar_branch(g: Graph, within: int) -> tuple[int, list[int]] | None:
    """Exact fallback: the hub must take a vertex of every induced P3."""

    def rec(hub: int, cand: int) -> int | None:
        p3 = _find_induced_p3(g, within & ~hub)
        if p3 is None:
            return hub
        for x in p3:
            if (cand >> x) & 1:
                got = rec(hub | (1 << x), cand & g.masks[x])
                if got is not None:
                    return got
        return None

    hub = rec(0, within)
    if hub is None:
        return None
    grow = common_nbr_mask(g, hub, within)
    while grow:
        v = lowest(grow)
        hub |= 1 << v
        grow &= g.masks[v]
    return hub, components_in(g, within & ~hub)


def _unipolar(g: Graph, within: int, hub_scan: bool = True) -> tuple[int, list[int]] | None:
    out = _unipolar_steps(g, within, hub_scan)
    if out is not None and is_clique_mask(g, out[0]) and _cluster_parts(g, within & ~out[0]) is not None:
        return out
    out = _unipolar_branch(g, within)
    if out is not None:
        SEARCH_STATS["unipolar fallback"] += 1
    return out


def unipolar_decompose(g: Graph, hub_scan: bool = True) -> tuple[list[int], list[list[int]]] | None:
    """Hub and satellites of a connected unipolar graph, or None.

    With ``hub_scan=False`` separators are never taken directly as the hub and
    every satellite is peeled off with LEAF, which is the slower route but
    tends to leave the smallest hub.
    """
    out = _unipolar(g, g.full, hub_scan)
    if out is None:
        return None
    hub, sats = out
    return bits(hub), [bits(s) for s in sats]


# --- expansion of a clique --------------------------------------------------

def _hub_candidates(g: Graph, within: int, c: int) -> list[int]:
    """Hubs of G_C (C plus the vertices complete to it) that are maximal
    cliques of G[within], in canonical order."""
    gc = c | common_nbr_mask(g, c, within)
    dec = _unipolar(g, gc)
    if dec is None:
        return []
    hub, sats = dec
    raw = [hub]
    for b in sats:
        raw.append(b | common_nbr_mask(g, b, hub))
    # every maximal clique separator of G_C leaving a cluster graph is a hub too
    raw.extend(_max_clique_separators(g, gc))
    out = set()
    for h in raw:
        if h & c != c or not is_clique_mask(g, h):
            continue
        if common_nbr_mask(g, h, within):
            continue
        if _cluster_parts(g, gc & ~h) is None:
            continue
        out.add(h)
    return sorted(out, key=bits)


def expand_clique(g: Graph, C: Iterable[int]) -> list[list[int]]:
    """Maximal clique separators A containing the clique C that arise as hubs
    of G_C, in canonical order.  Empty when G_C is not unipolar or no hub
    separates g."""
    c = mask_of(C)
    if not is_clique_mask(g, c):
        raise ValueError("C must be a clique")
    return [bits(h) for h in _hub_candidates(g, g.full, c) if separates(g, h)]


# --- thick forest search ----------------------------------------------------

Solution = tuple[tuple[int, ...], tuple[tuple[int, int], ...], int]


class _Search:
    def __init__(self, g: Graph, backstop: bool, pick: Callable[[list[int]], list[int]]):
        self.g = g
        self.backstop = backstop
        self.pick = pick
        self.memo: dict[tuple[int, int], Solution | None] = {}

    def twin_close(self, v: int, k: int) -> int:
        masks = self.g.masks
        out = k
        for x in bits(k):
            closed = (masks[x] & v) | (1 << x)
            for y in bits(common_nbr_mask(self.g, k, v) & masks[x]):
                if (masks[y] & v) | (1 << y) == closed:
                    out |= 1 << y
        return out

    def solve(self, v: int, k: int) -> Solution | None:
        k = self.twin_close(v, k)
        key = (v, k)
        if key in self.memo:
            return self.memo[key]
        res = self._solve(v, k)
        self.memo[key] = res
        return res

    def _solve(self, v: int, k: int) -> Solution | None:
        g = self.g
        if is_clique_mask(g, v):
            return (v,), (), 0
        tried: set[int] = set()

        def attempt(r: int, stage: str):
            if r in tried or r & k != k or not r or not is_clique_mask(g, r):
                return None, []
            tried.add(r)
            sol, failed = self.split(v, r)
            if sol is not None:
                SEARCH_STATS[stage] += 1
            return sol, failed

        hubs = self.pick(_hub_candidates(g, v, k))
        for a in hubs:
            sol, failed = attempt(a, "hub")
            if sol is not None:
                return sol
            if len(failed) != 1:
                continue
            # a single rejected branch: re-split A with EDGE so that the part
            # of A belonging to that branch moves across
            f = failed[0]
            l = v & ~a & ~f
            out = _edge(g, a, l, f, None if l else k)
            if isinstance(out, str) or out[0] & k != k:
                if not l:
                    continue
                out = _edge(g, a, l, f, k | _touching(g, a, l))
                if isinstance(out, str):
                    continue
            sol, _ = attempt(out[0], "edge repair")
            if sol is not None:
                return sol
        # the seed may lie in a leaf thick vertex: run EDGE outward from K
        for a in hubs:
            out = _edge(g, a, 0, v & ~a, k)
            if not isinstance(out, str):
                sol, _ = attempt(out[0], "leaf edge")
                if sol is not None:
                    return sol
        if not self.backstop:
            return None
        for r in _cliques_containing(g, k, common_nbr_mask(g, k, v)):
            sol, _ = attempt(r, "backstop")
            if sol is not None:
                return sol
        return None

    def split(self, v: int, r: int) -> tuple[Solution | None, list[int]]:
        """Use r as the thick vertex; recurse on the components of G[v] - r."""
        g = self.g
        frontier = nbr_mask(g, r)
        parts = components_in(g, v & ~r)
        failed = [p for p in parts if not is_clique_mask(g, frontier & p)]
        if failed:
            return None, failed
        subs = []
        for p in parts:
            sol = self.solve(p, frontier & p)
            if sol is None:
                failed.append(p)
            elif not failed:
                subs.append(sol)
        if failed:
            return None, failed
        blocks = [r]
        edges = []
        for sb, se, sk in subs:
            off = len(blocks)
            blocks.extend(sb)
            edges.append((0, off + sk))
            edges.extend((off + x, off + y) for x, y in se)
        return (tuple(blocks), tuple(edges), 0), []


def _touching(g: Graph, a: int, l: int) -> int:
    out = 0
    for v in bits(a):
        if g.masks[v] & l:
            out |= 1 << v
    return out


def _cliques_containing(g: Graph, k: int, cand: int) -> list[int]:
    """Every clique K + S with S a clique inside ``cand``, largest first."""
    out = []
    masks = g.masks

    def rec(cur: int, rest: int) -> None:
        out.append(cur)
        while rest:
            x = lowest(rest)
            rest &= ~(1 << x)
            rec(cur | (1 << x), rest & masks[x])

    rec(k, cand)
    out.sort(key=lambda m: (-m.bit_count(), bits(m)))
    return out


def recognize_thick_forest(g: Graph, backstop: bool = True,
                           hub_order: str | int = "first") -> RecognitionOutcome:
    """Decide whether g is a thick forest; on acceptance return a model whose
    thin graph is a forest.

    ``hub_order`` rotates the list of hub candidates at every expansion
    ("first" keeps canonical order, "last" reverses it, an int rotates by that
    amount).  ``backstop=False`` stops after the hub and EDGE candidates, so
    the heuristic path can be measured on its own.
    """
    if g.n == 0:
        return RecognitionOutcome(True, ThickModel(0, (), ()))
    quasi = is_quasi_thick_forest(g)
    if not quasi:
        return RecognitionOutcome(False, witness={
            "step": "quasi thick forest check", "vertices": list(quasi.bad_atom)})

    def pick(cands: list[int]) -> list[int]:
        if hub_order == "first" or not cands:
            return cands
        if hub_order == "last":
            return cands[::-1]
        i = int(hub_order) % len(cands)
        return cands[i:] + cands[:i]

    search = _Search(g, backstop, pick)
    blocks: list[int] = []
    edges: list[tuple[int, int]] = []
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20 * g.n + 1000))
    try:
        for comp in components_in(g, g.full):
            sol = search.solve(comp, 1 << lowest(comp))
            if sol is None:
                return RecognitionOutcome(False, witness={
                    "step": "no thick tree model", "vertices": bits(comp), "seed": [lowest(comp)]})
            sb, se, _ = sol
            off = len(blocks)
            blocks.extend(sb)
            edges.extend((off + x, off + y) for x, y in se)
    finally:
        sys.setrecursionlimit(old)
    phi = [0] * g.n
    for t, b in enumerate(blocks):
        for v in bits(b):
            phi[v] = t
    model = canonical(ThickModel(len(blocks), tuple(sorted((min(e), max(e)) for e in edges)), tuple(phi)))
    check = verify_model(g, model, require="forest")
    if not check:
        raise AssertionError(f"recognizer produced an invalid model: {check.reason}")
    return RecognitionOutcome(True, model)
