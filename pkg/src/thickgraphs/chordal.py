"""Chordality, minimal triangulation (MCS-M) and the cobipartite listing of
maximal clique separators.

Orderings follow one convention throughout: an *elimination ordering* lists
vertices in the order they are eliminated, so a perfect elimination ordering
(PEO) has every vertex's later neighbours forming a clique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    bits,
    is_clique_mask,
    lowest,
    mask_of,
    separates,
)


def lexbfs_order(g: Graph, start: int | None = None) -> list[int]:
    """Lexicographic BFS visiting order, ties broken by smallest index.

    Partition refinement over bitmask blocks: the front block holds the
    vertices with the lexicographically largest labels.
    """
    if g.n == 0:
        return []
    masks = g.masks
    blocks = [g.full]
    if start is not None:
        blocks = [1 << start, g.full & ~(1 << start)]
    order = []
    while blocks:
        head = blocks[0]
        v = lowest(head)
        order.append(v)
        rest = head & ~(1 << v)
        if rest:
            blocks[0] = rest
        else:
            blocks.pop(0)
        nb = masks[v]
        refined = []
        for b in blocks:
            inside = b & nb
            if inside:
                refined.append(inside)
            outside = b & ~nb
            if outside:
                refined.append(outside)
        blocks = refined
    return order


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    peo: list[int] | None = None
    hole: list[int] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def peo_violation(g: Graph, order: list[int]) -> tuple[int, int, int] | None:
    """First (v, parent, x) where x is a later neighbour of v not adjacent to
    v's parent, or None when ``order`` is a perfect elimination ordering."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    masks = g.masks
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << p)
        bad = rest & ~masks[p]
        if bad:
            return v, p, lowest(bad)
    return None


def is_chordal(g: Graph) -> ChordalResult:
    order = lexbfs_order(g)
    peo = order[::-1]
    bad = peo_violation(g, peo)
    if bad is None:
        return ChordalResult(True, peo=peo)
    v, p, x = bad
    hole = _hole_through(g, v, p, x)
    if hole is None:
        hole = find_hole(g)
    assert hole is not None, "PEO check failed but no hole found"
    return ChordalResult(False, hole=hole)


def _hole_through(g: Graph, v: int, a: int, b: int) -> list[int] | None:
    """Chordless cycle v, a, ..., b when a, b are nonadjacent neighbours of v
    joined by a path avoiding the rest of N[v]."""
    masks = g.masks
    allowed = (g.full & ~masks[v] & ~(1 << v)) | (1 << a) | (1 << b)
    prev = {a: -1}
    frontier = [a]
    seen = 1 << a
    while frontier:
        nxt = []
        for x in frontier:
            for y in bits(masks[x] & allowed & ~seen):
                seen |= 1 << y
                prev[y] = x
                if y == b:
                    path = [b]
                    while prev[path[-1]] != -1:
                        path.append(prev[path[-1]])
                    return [v] + path[::-1]
                nxt.append(y)
        frontier = nxt
    return None


def find_hole(g: Graph) -> list[int] | None:
    """Some chordless cycle of length >= 4, or None if g is chordal."""
    masks = g.masks
    for v in range(g.n):
        nb = g.adj[v]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not (masks[a] >> b) & 1:
                    hole = _hole_through(g, v, a, b)
                    if hole is not None:
                        return hole
    return None


@dataclass(frozen=True)
class Triangulation:
    """Output of MCS-M.

    ``order`` is a minimal elimination ordering; ``higher[v]`` is the mask of
    neighbours of v in the filled graph G* that are eliminated after v;
    ``fill`` lists the added edges as (u, v) with u < v.
    """

    order: list[int]
    higher: list[int]
    fill: frozenset[tuple[int, int]]

    def filled_masks(self, g: Graph) -> list[int]:
        out = list(g.masks)
        for u, v in self.fill:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out


def mcs_m(g: Graph) -> Triangulation:
    """Maximum cardinality search with the MCS-M reach rule.

    At each step the selected vertex v reaches every unnumbered u joined to v
    by a path whose interior vertices all have weight below w(u); reached
    vertices gain weight and become neighbours of v in G*.  Reach sets are
    computed level by level on bitmasks: the component of v through
    vertices lighter than L is grown incrementally as L rises.
    """
    n = g.n
    masks = g.masks
    buckets: dict[int, int] = {0: g.full} if n else {}
    top = 0
    selected_before = [0] * n
    selection: list[int] = []
    fill = set()
    unnumbered = g.full
    for _ in range(n):
        while not buckets.get(top):
            buckets.pop(top, None)
            top -= 1
        v = lowest(buckets[top])
        buckets[top] &= ~(1 << v)
        unnumbered &= ~(1 << v)
        selection.append(v)
        reached = 0
        comp = 1 << v
        nb = masks[v] & unnumbered
        allowed = 0
        for level in sorted(buckets):
            layer = buckets[level]
            if not layer:
                continue
            # grow comp through vertices lighter than this level; growth is
            # resumable, so stop once the whole layer is already reached
            frontier = nb & allowed & ~comp
            while frontier and layer & ~nb:
                comp |= frontier
                grow = 0
                for u in bits(frontier):
                    grow |= masks[u]
                nb |= grow & unnumbered
                frontier = nb & allowed & ~comp
            reached |= nb & layer
            allowed |= layer
        # bump weights of reached vertices
        for level in sorted(buckets, reverse=True):
            moving = buckets[level] & reached
            if moving:
                buckets[level] &= ~moving
                buckets[level + 1] = buckets.get(level + 1, 0) | moving
                if level + 1 > top:
                    top = level + 1
        not_adj = reached & ~masks[v]
        for u in bits(not_adj):
            fill.add((min(u, v), max(u, v)))
        for u in bits(reached):
            selected_before[u] |= 1 << v
    order = selection[::-1]
    return Triangulation(order, selected_before, frozenset(fill))


def minimal_triangulation(g: Graph) -> frozenset[tuple[int, int]]:
    """Fill edges F of an inclusion-minimal triangulation of g."""
    return mcs_m(g).fill


def maximal_cliques_chordal(g: Graph, peo: list[int]) -> list[list[int]]:
    """All maximal cliques of a chordal graph from a perfect elimination ordering.

    The candidate clique of v is v plus its later neighbours; it fails to be
    maximal exactly when some u with parent v has one more later neighbour.
    """
    if peo_violation(g, peo) is not None:
        raise ValueError("ordering is not a perfect elimination ordering")
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    later_count = [0] * g.n
    later_mask = [0] * g.n
    parent = [-1] * g.n
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        later_count[v] = len(later)
        later_mask[v] = mask_of(later)
        if later:
            parent[v] = min(later, key=pos.__getitem__)
    dominated = [False] * g.n
    for u in range(g.n):
        p = parent[u]
        if p >= 0 and later_count[u] == later_count[p] + 1:
            dominated[p] = True
    out = [bits(later_mask[v] | (1 << v)) for v in peo if not dominated[v]]
    return sorted(out)


def cobipartite_max_clique_separators(g: Graph, side_u, side_w, method: str = "exact") -> list[list[int]]:
    """Maximal clique separators of a cobipartite graph with sides U, W.

    ``method="pipeline"`` runs triangulate, enumerate, shrink: the maximal
    cliques of G* that separate G*, each shrunk by dropping the vertices X_i
    of W_i that see U_i only through fill edges.  A single triangulation can
    miss separators, so the default ``"exact"`` also runs a threshold scan
    and returns the union.  Results are sorted by |A & U|.
    """
    um, wm = mask_of(side_u), mask_of(side_w)
    if um & wm or (um | wm) != g.full:
        raise ValueError("sides must partition the vertex set")
    if not (is_clique_mask(g, um) and is_clique_mask(g, wm)):
        raise ValueError("sides must be cliques")
    if method not in ("exact", "pipeline", "scan"):
        raise ValueError(f"unknown method {method!r}")
    found: set[int] = set()
    if method in ("exact", "pipeline"):
        found |= _pipeline_separators(g, um, wm)
    if method in ("exact", "scan"):
        found |= _threshold_separators(g, um, wm)
    out = sorted(found, key=lambda a: ((a & um).bit_count(), bits(a)))
    return [bits(a) for a in out]


def _pipeline_separators(g: Graph, um: int, wm: int) -> set[int]:
    tri = mcs_m(g)
    star = Graph(g.n, tuple(tuple(bits(m)) for m in tri.filled_masks(g)))
    fill_nb = [0] * g.n
    for a, b in tri.fill:
        fill_nb[a] |= 1 << b
        fill_nb[b] |= 1 << a
    out = set()
    for clique in maximal_cliques_chordal(star, tri.order):
        c = mask_of(clique)
        if not separates(star, c):
            continue
        u_i, w_i = c & um, c & wm
        x_i = 0
        for w in bits(w_i):
            if fill_nb[w] & u_i:
                x_i |= 1 << w
        shrunk = u_i | (w_i & ~x_i)
        # shrunken cliques that stopped being maximal or separating are dropped
        if shrunk and is_clique_mask(g, shrunk) and _is_maximal_clique(g, shrunk) and separates(g, shrunk):
            out.add(shrunk)
    return out


def _threshold_separators(g: Graph, um: int, wm: int) -> set[int]:
    """Every maximal clique separator A splits U as X | U' where each
    neighbourhood (into W) of X is strictly inside A & W, which in turn lies
    inside every neighbourhood of U'.  So X is a prefix of U sorted by
    neighbourhood size, cut between distinct sizes; try each such prefix.
    """
    side_u = bits(um)
    nb = {u: g.masks[u] & wm for u in side_u}
    order = sorted(side_u, key=lambda u: (nb[u].bit_count(), u))
    out = set()
    seen_x = 0
    for i in range(1, len(order)):
        seen_x |= nb[order[i - 1]]
        if nb[order[i - 1]].bit_count() == nb[order[i]].bit_count():
            continue
        x = order[:i]
        u_part = um & ~mask_of(x)
        p = wm
        for u in bits(u_part):
            p &= nb[u]
        if seen_x & ~p or p == wm:
            continue
        if any(p & ~nb[v] == 0 for v in x):
            continue
        out.add(u_part | p)
    return out


def _is_maximal_clique(g: Graph, c: int) -> bool:
    common = g.full & ~c
    for v in bits(c):
        common &= g.masks[v]
    return common == 0


def is_maximal_clique(g: Graph, s) -> bool:
    c = mask_of(s)
    return is_clique_mask(g, c) and _is_maximal_clique(g, c)
