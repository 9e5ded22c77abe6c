"""Brute-force ground truth.

Everything here is exponential and deliberately naive.  The functions exist
so the fast algorithms elsewhere in the package have something obviously
correct to be compared against.  Each oracle refuses inputs above its size
cap instead of silently truncating.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .graph import Graph, bits, component_of, is_clique_mask, lowest, separates

IND_CAP = 24
COL_CAP = 14
FOREST_CAP = 16
MCS_CAP = 20
DELCON_CAP = 12
COVER_CAP = 12


class OracleCapError(ValueError):
    pass


def _cap(g: Graph, cap: int, name: str) -> None:
    if g.n > cap:
        raise OracleCapError(f"{name}: n={g.n} exceeds the oracle cap {cap}")


# --- independent sets ------------------------------------------------------

def independent_sets(g: Graph, cap: int = IND_CAP):
    """Yield every independent set as a bitmask (including the empty set)."""
    _cap(g, cap, "independent_sets")
    masks = g.masks

    def rec(avail: int, chosen: int):
        if not avail:
            yield chosen
            return
        low = avail & -avail
        v = low.bit_length() - 1
        yield from rec(avail & ~low, chosen)
        yield from rec(avail & ~low & ~masks[v], chosen | low)

    yield from rec(g.full, 0)


def brute_ind_count(g: Graph, cap: int = IND_CAP) -> int:
    return sum(1 for _ in independent_sets(g, cap))


def brute_weighted_ind(g: Graph, weights: Sequence[Fraction], cap: int = IND_CAP) -> Fraction:
    total = Fraction(0)
    for s in independent_sets(g, cap):
        w = Fraction(1)
        for v in bits(s):
            w *= weights[v]
        total += w
    return total


def brute_ind_poly(g: Graph, weights: Sequence[Fraction] | None = None, cap: int = IND_CAP) -> list[Fraction]:
    coeffs = [Fraction(0)] * (g.n + 1)
    for s in independent_sets(g, cap):
        w = Fraction(1)
        if weights is not None:
            for v in bits(s):
                w *= weights[v]
        coeffs[s.bit_count()] += w
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def brute_alpha(g: Graph, cap: int = IND_CAP) -> int:
    return max(s.bit_count() for s in independent_sets(g, cap))


# --- colourings ------------------------------------------------------------

def independent_partition_counts(g: Graph, cap: int = COL_CAP) -> list[int]:
    """a[k] = number of partitions of V into k nonempty independent sets."""
    _cap(g, cap, "independent_partition_counts")
    counts = [0] * (g.n + 1)
    masks = g.masks
    blocks: list[int] = []

    def rec(v: int):
        if v == g.n:
            counts[len(blocks)] += 1
            return
        for i, b in enumerate(blocks):
            if not b & masks[v]:
                blocks[i] = b | (1 << v)
                rec(v + 1)
                blocks[i] = b
        blocks.append(1 << v)
        rec(v + 1)
        blocks.pop()

    rec(0)
    return counts


def brute_col_count(g: Graph, q: int, cap: int = COL_CAP) -> int:
    """Proper q-colourings, summed over independent partitions.

    A partition into k independent blocks yields exactly (q)_k colourings
    (blocks get distinct colours), and every colouring arises from exactly
    one partition, its colour classes.
    """
    return brute_col_counts(g, [q], cap)[0]


def brute_col_counts(g: Graph, qs: Sequence[int], cap: int = COL_CAP) -> list[int]:
    """brute_col_count for several q, enumerating partitions once."""
    parts = independent_partition_counts(g, cap)
    out = []
    for q in qs:
        total = 0
        for k, a in enumerate(parts):
            ff = 1
            for i in range(k):
                ff *= q - i
            total += a * ff
        out.append(total)
    return out


def chromatic_poly_delcon(g: Graph, q: int, cap: int = DELCON_CAP) -> int:
    """Evaluate the chromatic polynomial at q by deletion-contraction.

    Sparse graphs use deletion-contraction P(G) = P(G-e) - P(G/e); dense
    ones use the dual addition-contraction P(G) = P(G+e) + P(G/e) so the
    recursion bottoms out at cliques instead of edgeless graphs.
    """
    _cap(g, cap, "chromatic_poly_delcon")

    def ff(a: int, b: int) -> int:
        out = 1
        for i in range(b):
            out *= a - i
        return out

    @lru_cache(maxsize=None)
    def rec(n: int, edges: frozenset) -> int:
        if not edges:
            return q ** n
        if len(edges) == n * (n - 1) // 2:
            return ff(q, n)
        if 2 * len(edges) <= n * (n - 1) // 2:
            u, v = min(edges)
            return rec(n, edges - {(u, v)}) - rec(*_contract(n, edges, u, v))
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in edges:
                    return rec(n, edges | {(u, v)}) + rec(*_contract(n, edges, u, v))
        raise AssertionError("unreachable")

    return rec(g.n, frozenset(g.edges))


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, frozenset]:
    # merge v into u, then shift labels above v down by one
    def relabel(x: int) -> int:
        x = u if x == v else x
        return x - 1 if x > v else x

    out = set()
    for a, b in edges:
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            out.add((min(a2, b2), max(a2, b2)))
    return n - 1, frozenset(out)


# --- thick forests via the 2-colouring characterisation -------------------

def induced_p3s(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for b in range(g.n):
        for a, c in combinations(g.adj[b], 2):
            if not g.has_edge(a, c):
                out.append((a, b, c))
    return out


def four_holes(g: Graph) -> list[tuple[int, int, int, int]]:
    """Induced 4-cycles as (a, b, c, d) in cyclic order, each listed once."""
    out = []
    for a in range(g.n):
        for b, d in combinations(g.adj[a], 2):
            if g.has_edge(b, d):
                continue
            for c in g.adj[b]:
                if c > a and c != d and g.has_edge(c, d) and not g.has_edge(a, c):
                    if a < b and a < d and b < d:
                        out.append((a, b, c, d))
    return out


def find_long_hole(g: Graph, min_len: int = 5) -> list[int] | None:
    """An induced cycle with at least ``min_len`` vertices, or None."""
    masks = g.masks
    for s in range(g.n):
        higher = g.full & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(forbidden: int) -> list[int] | None:
            last = path[-1]
            for x in bits(masks[last] & higher & ~forbidden):
                # x must not touch interior path vertices other than ``last``
                if len(path) >= 2 and masks[x] & _mask(path[1:-1]):
                    continue
                touches_start = (masks[x] >> s) & 1
                if touches_start:
                    if len(path) >= 2 and len(path) + 1 >= min_len:
                        return path + [x]
                    if len(path) >= 2:
                        continue
                path.append(x)
                res = extend(forbidden | (1 << x))
                if res:
                    return res
                path.pop()
            return None

        res = extend(1 << s)
        if res:
            return res
    return None


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def forest_colouring(g: Graph, cap: int = FOREST_CAP) -> list[int] | None:
    """A 2-colouring with no monochromatic induced P3 and no alternating 4-hole.

    Returns None if the graph has a long hole or no such colouring exists.
    """
    _cap(g, cap, "forest_colouring")
    if find_long_hole(g) is not None:
        return None
    checks: list[list[tuple]] = [[] for _ in range(g.n)]
    for a, b, c in induced_p3s(g):
        checks[max(a, b, c)].append(("p3", a, b, c))
    for a, b, c, d in four_holes(g):
        checks[max(a, b, c, d)].append(("c4", a, b, c, d))
    colour = [0] * g.n

    def ok(v: int) -> bool:
        for chk in checks[v]:
            if chk[0] == "p3":
                _, a, b, c = chk
                if colour[a] == colour[b] == colour[c]:
                    return False
            else:
                _, a, b, c, d = chk
                if colour[a] == colour[c] and colour[b] == colour[d] and colour[a] != colour[b]:
                    return False
        return True

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        for col in ((0,) if v == 0 else (0, 1)):
            colour[v] = col
            if ok(v) and rec(v + 1):
                return True
        return False

    return list(colour) if rec(0) else None


def brute_thick_forest(g: Graph, cap: int = FOREST_CAP) -> bool:
    return forest_colouring(g, cap) is not None


# --- clique covers ---------------------------------------------------------

def clique_partitions(g: Graph, cap: int = COVER_CAP):
    """Yield every partition of V into cliques, as a list of bitmasks."""
    _cap(g, cap, "clique_partitions")
    masks = g.masks
    blocks: list[int] = []

    def rec(v: int):
        if v == g.n:
            yield list(blocks)
            return
        for i, b in enumerate(blocks):
            if b & ~masks[v] == 0:
                blocks[i] = b | (1 << v)
                yield from rec(v + 1)
                blocks[i] = b
        blocks.append(1 << v)
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def quotient_edges(g: Graph, blocks: list[int]) -> set[tuple[int, int]]:
    where = [0] * g.n
    for i, b in enumerate(blocks):
        for v in bits(b):
            where[v] = i
    out = set()
    for u, v in g.edges:
        a, b = where[u], where[v]
        if a != b:
            out.add((min(a, b), max(a, b)))
    return out


def _has_triangle(k: int, edges: set[tuple[int, int]]) -> bool:
    nb = [0] * k
    for a, b in edges:
        nb[a] |= 1 << b
        nb[b] |= 1 << a
    return any(nb[a] & nb[b] for a, b in edges)


def _is_forest(k: int, edges: set[tuple[int, int]]) -> bool:
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def brute_forest_model(g: Graph, cap: int = COVER_CAP) -> list[int] | None:
    """A clique partition whose quotient is a forest, found by enumeration."""
    for blocks in clique_partitions(g, cap):
        if _is_forest(len(blocks), quotient_edges(g, blocks)):
            return blocks
    return None


def min_trianglefree_thin_size(g: Graph, cap: int = COVER_CAP) -> int | None:
    """Fewest thick vertices over all models whose thin graph is triangle-free."""
    best = None
    for blocks in clique_partitions(g, cap):
        k = len(blocks)
        if best is not None and k >= best:
            continue
        if not _has_triangle(k, quotient_edges(g, blocks)):
            best = k
    return best


def brute_trianglefree_model(g: Graph, nu: int, cap: int = COVER_CAP) -> bool:
    best = min_trianglefree_thin_size(g, cap)
    return best is not None and best <= nu


# --- maximal clique separators --------------------------------------------

def maximal_cliques(g: Graph, cap: int = MCS_CAP) -> list[int]:
    """All maximal cliques by plain extension search (no pivoting)."""
    _cap(g, cap, "maximal_cliques")
    masks = g.masks
    out = []

    def rec(clique: int, cand: int, start: int):
        extendable = False
        common = g.full & ~clique
        for v in bits(clique):
            common &= masks[v]
        if common == 0:
            out.append(clique)
            return
        for v in bits(cand):
            if v < start:
                continue
            extendable = True
            rec(clique | (1 << v), cand & masks[v], v + 1)
        del extendable

    for v in range(g.n):
        rec(1 << v, masks[v], v + 1)
    if g.n == 0:
        return []
    return sorted(set(out), key=lambda m: bits(m))


def brute_max_clique_separators(g: Graph, cap: int = MCS_CAP) -> list[list[int]]:
    return [bits(c) for c in maximal_cliques(g, cap) if separates(g, c)]


def has_clique_cutset(g: Graph, within: int, cap: int = MCS_CAP) -> bool:
    """Whether G[within] has a clique separator (exhaustive over cliques)."""
    verts = bits(within)
    if len(verts) > cap:
        raise OracleCapError(f"has_clique_cutset: {len(verts)} vertices exceeds cap {cap}")
    masks = g.masks

    def rec(clique: int, cand: int) -> bool:
        if clique and separates(g, clique, within):
            return True
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if rec(clique | low, cand & masks[v]):
                return True
        return False

    return rec(0, within)


def count_maximal_independent_sets_cycle(length: int) -> int:
    """Maximal independent sets of the cycle C_length, by subset enumeration."""
    count = 0
    for s in range(1 << length):
        ok = True
        for i in range(length):
            j = (i + 1) % length
            if (s >> i) & 1 and (s >> j) & 1:
                ok = False
                break
        if not ok:
            continue
        for i in range(length):
            if not (s >> i) & 1:
                a, b = (i - 1) % length, (i + 1) % length
                if not ((s >> a) & 1 or (s >> b) & 1):
                    ok = False
                    break
        if ok:
            count += 1
    return count


def brute_is_cobipartite(g: Graph) -> bool:
    for s in range(1 << g.n):
        if is_clique_mask(g, s) and is_clique_mask(g, g.full & ~s):
            return True
    return False


def brute_is_unipolar(g: Graph) -> bool:
    """Some clique whose removal leaves a disjoint union of cliques."""
    for s in range(1 << g.n):
        if not is_clique_mask(g, s):
            continue
        rest = g.full & ~s
        ok = True
        while rest:
            c = component_of(g, lowest(rest), g.full & ~s)
            if not is_clique_mask(g, c):
                ok = False
                break
            rest &= ~c
        if ok:
            return True
    return False


def brute_xp_ind_count(g: Graph, phi: Sequence[int], thin_n: int) -> int:
    """Count independent sets picking at most one vertex per thick vertex."""
    groups = [[v for v in range(g.n) if phi[v] == t] for t in range(thin_n)]
    masks = g.masks

    def rec(t: int, chosen: int) -> int:
        if t == thin_n:
            return 1
        total = rec(t + 1, chosen)
        for v in groups[t]:
            if not masks[v] & chosen:
                total += rec(t + 1, chosen | (1 << v))
        return total

    return rec(0, 0)
