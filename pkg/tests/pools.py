"""Graph pools shared by the unit tests and the acceptance suite."""

from __future__ import annotations

import json
import random
from functools import lru_cache
from pathlib import Path

import networkx as nx

from thickgraphs.graph import Graph, from_edge_list, read_graph

FIGURES = Path(__file__).resolve().parent.parent / "data" / "figures"


@lru_cache(maxsize=None)
def manifest() -> dict:
    return json.loads((FIGURES / "manifest.json").read_text())


def figure(name: str) -> Graph:
    return read_graph(FIGURES / manifest()[name]["file"])


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes)}
    return from_edge_list(len(index), [(index[a], index[b]) for a, b in h.edges])


@lru_cache(maxsize=None)
def atlas() -> tuple[Graph, ...]:
    """Every graph on at most seven vertices, one per isomorphism class."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g()[1:])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.uniform(0.15, 0.85) if p is None else p
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, pairs)


def random_pool(count: int, lo: int = 8, hi: int = 10, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(lo, hi))


@lru_cache(maxsize=None)
def small_pool(count: int = 2000, seed: int = 7) -> tuple[Graph, ...]:
    """The atlas plus ``count`` random graphs with 8 to 10 vertices."""
    return atlas() + tuple(random_pool(count, seed=seed))


def random_clique_partition(g: Graph, rng: random.Random) -> list[list[int]]:
    """Greedy random partition of V(g) into cliques."""
    order = list(range(g.n))
    rng.shuffle(order)
    blocks: list[list[int]] = []
    for v in order:
        fits = [b for b in blocks if all(g.has_edge(v, u) for u in b)]
        if fits and rng.random() < 0.8:
            rng.choice(fits).append(v)
        else:
            blocks.append([v])
    return blocks


def random_triple(rng: random.Random, max_n: int = 12):
    """A random graph, a random model of it and a tree decomposition of the
    thin graph from a random elimination order."""
    from thickgraphs.model import model_from_blocks
    from thickgraphs.treewidth import make_nice, td_from_order

    g = random_graph(rng, rng.randint(1, max_n), rng.uniform(0.2, 0.8))
    m = model_from_blocks(g, random_clique_partition(g, rng))
    h = m.thin_graph()
    order = list(range(h.n))
    rng.shuffle(order)
    return g, m, make_nice(h, td_from_order(h, order))


def leaf_first_order(h: Graph) -> list[int]:
    """Elimination order peeling leaves; width at most 1 on a forest."""
    deg = [h.degree(v) for v in range(h.n)]
    gone = [False] * h.n
    order = []
    while len(order) < h.n:
        v = min((u for u in range(h.n) if not gone[u]), key=lambda u: deg[u])
        gone[v] = True
        order.append(v)
        for u in h.neighbors(v):
            deg[u] -= 1
    return order
