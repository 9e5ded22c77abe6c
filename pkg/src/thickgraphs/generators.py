"""Graph families: extremal separator constructions, an infinite family of
minimal non-thick-forests, and random thick forests with known models."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, from_edge_list
from .model import ThickModel


@dataclass(frozen=True)
class Cochain:
    graph: Graph
    side_u: tuple[int, ...]
    side_w: tuple[int, ...]


def gen_cochain(k: int, strict: bool = True) -> Cochain:
    """Cochain graph on cliques u_1..u_k and w_1..w_k.

    With ``strict`` u_i w_j is an edge iff i > j, which has exactly k-1
    internal maximal clique separators.  ``strict=False`` uses i >= j; there
    U + {w_1} is a maximal clique but separates nothing, so only k-2 remain.
    Vertex u_i is i-1 and w_j is k+j-1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    u = list(range(k))
    w = list(range(k, 2 * k))
    edges = [(a, b) for side in (u, w) for i, a in enumerate(side) for b in side[i + 1:]]
    edges += [(u[i], w[j]) for i in range(k) for j in range(k) if i > j or (i == j and not strict)]
    names = [f"u{i + 1}" for i in range(k)] + [f"w{j + 1}" for j in range(k)]
    return Cochain(from_edge_list(2 * k, edges, names), tuple(u), tuple(w))


def gen_maxsepsb(k: int) -> Graph:
    """K_2k minus the matching u_i w_i, with pendants u' on u_1 and w' on w_1.

    u_i is i-1, w_i is k+i-1, u' is 2k and w' is 2k+1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if b - a != k]
    edges += [(0, n), (k, n + 1)]
    names = [f"u{i + 1}" for i in range(k)] + [f"w{i + 1}" for i in range(k)] + ["u'", "w'"]
    return from_edge_list(n + 2, edges, names)


def gen_maxsepsc(k: int) -> Graph:
    """Two (2k+1)-cliques meeting in a 2k-clique C, minus a Hamiltonian cycle of C.

    The cycle is u_1 w_2 u_2 w_3 ... u_k w_1.  Vertices: u_1..u_k are 0..k-1,
    w_1..w_k are k..2k-1, then u_0, w_0, and pendants u' (on u_0), w' (on w_0).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    c = 2 * k
    u0, w0, up, wp = c, c + 1, c + 2, c + 3
    cycle = []
    for i in range(k):
        cycle += [i, k + (i + 1) % k]
    removed = {frozenset((cycle[i], cycle[(i + 1) % c])) for i in range(c)}
    edges = [(a, b) for a in range(c + 2) for b in range(a + 1, c + 2)
             if frozenset((a, b)) not in removed and {a, b} != {u0, w0}]
    edges += [(u0, up), (w0, wp)]
    names = ([f"u{i + 1}" for i in range(k)] + [f"w{i + 1}" for i in range(k)]
             + ["u0", "w0", "u'", "w'"])
    return from_edge_list(c + 4, edges, names)


def gen_forb_inf(t: int) -> Graph:
    """Two diamonds joined by a chain of t triangles.

    The spine is a path p_0 .. p_{t+2}; every spine edge p_i p_{i+1} gets one
    apex vertex adjacent to both ends, and the first and last spine edges get
    a second apex.  t = 0 would make the two diamonds share a spine vertex.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    spine_len = t + 2
    spine = list(range(spine_len + 1))
    nxt = len(spine)
    edges = [(spine[i], spine[i + 1]) for i in range(spine_len)]
    names = [f"p{i}" for i in spine]
    for i in range(spine_len):
        apexes = 2 if i in (0, spine_len - 1) else 1
        for j in range(apexes):
            edges += [(nxt, spine[i]), (nxt, spine[i + 1])]
            names.append(f"x{i}" if j == 0 else f"y{i}")
            nxt += 1
    return from_edge_list(nxt, edges, names)


def random_forest_edges(rng: random.Random, n: int, keep: float = 0.9) -> list[tuple[int, int]]:
    """A uniform labelled tree (Pruefer decoding) with each edge kept with prob ``keep``."""
    return [e for e in _pruefer_tree(rng, n) if rng.random() < keep]


def gen_random_thick_forest(seed: int, n_h: int, max_size: int = 4, density: float = 0.5,
                            connected: bool = False) -> tuple[Graph, ThickModel]:
    """Random thick forest together with the model it was built from.

    Each thin edge becomes a cobipartite join whose crossing pairs are kept
    independently with probability ``density``; a thin edge whose sample came
    out empty is dropped from the returned model, so the model stays exact.
    With ``connected`` the thin tree keeps all its edges and each thick edge
    keeps at least one crossing pair.
    """
    rng = random.Random(seed)
    if connected:
        thin = _pruefer_tree(rng, n_h)
    else:
        thin = random_forest_edges(rng, n_h)
    sizes = [rng.randint(1, max_size) for _ in range(n_h)]
    phi: list[int] = []
    members: list[list[int]] = []
    for t, s in enumerate(sizes):
        members.append(list(range(len(phi), len(phi) + s)))
        phi.extend([t] * s)
    edges = []
    for block in members:
        edges += [(a, b) for i, a in enumerate(block) for b in block[i + 1:]]
    kept = []
    for a, b in thin:
        cross = [(x, y) for x in members[a] for y in members[b] if rng.random() < density]
        if not cross and connected:
            cross = [(rng.choice(members[a]), rng.choice(members[b]))]
        if cross:
            kept.append((a, b))
            edges += cross
    # shuffle labels so thick vertices are not contiguous index ranges
    perm = list(range(len(phi)))
    rng.shuffle(perm)
    g = from_edge_list(len(phi), [(perm[a], perm[b]) for a, b in edges])
    new_phi = [0] * len(phi)
    for v, t in enumerate(phi):
        new_phi[perm[v]] = t
    return g, ThickModel(n_h, tuple(sorted(kept)), tuple(new_phi))


def _pruefer_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    tree = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        tree.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    a, b = [v for v in range(n) if degree[v] == 1]
    tree.append((a, b))
    return tree
