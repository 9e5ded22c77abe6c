"""Models (H, phi) of thick graphs and their verification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Sequence

from .graph import Graph, GraphInputError, is_clique_mask

Require = Literal["any", "triangle-free", "forest"]


@dataclass(frozen=True)
class ThickModel:
    """Thin graph H on 0..thin_n-1 plus the map phi from V(G) to V(H)."""

    thin_n: int
    thin_edges: tuple[tuple[int, int], ...]
    phi: tuple[int, ...]

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.thin_n)]
        for v, t in enumerate(self.phi):
            out[t].append(v)
        return out

    def thin_graph(self) -> Graph:
        from .graph import from_edge_list
        return from_edge_list(self.thin_n, self.thin_edges)

    def to_json(self) -> dict:
        return {
            "thin_n": self.thin_n,
            "thin_edges": [list(e) for e in sorted(self.thin_edges)],
            "phi": list(self.phi),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ThickModel":
        try:
            thin_n = int(data["thin_n"])
            edges = tuple(sorted((min(int(a), int(b)), max(int(a), int(b))) for a, b in data["thin_edges"]))
            phi = tuple(int(x) for x in data["phi"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed model JSON: {exc}") from exc
        return cls(thin_n, edges, phi)


def model_from_blocks(g: Graph, blocks: Sequence[Sequence[int]]) -> ThickModel:
    """The model whose thick vertices are ``blocks`` and whose thin edges are
    exactly the pairs of blocks joined by at least one edge of g."""
    phi = [-1] * g.n
    for t, block in enumerate(blocks):
        for v in block:
            phi[v] = t
    if min(phi, default=0) < 0:
        raise ValueError("blocks do not cover every vertex")
    edges = set()
    for u, v in g.edges:
        a, b = phi[u], phi[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return ThickModel(len(blocks), tuple(sorted(edges)), tuple(phi))


def canonical(m: ThickModel) -> ThickModel:
    """Renumber thick vertices in order of their least member."""
    least = [len(m.phi) + t for t in range(m.thin_n)]
    for v in reversed(range(len(m.phi))):
        least[m.phi[v]] = v
    order = sorted(range(m.thin_n), key=least.__getitem__)
    new = {t: i for i, t in enumerate(order)}
    edges = tuple(sorted((min(new[a], new[b]), max(new[a], new[b])) for a, b in m.thin_edges))
    return ThickModel(m.thin_n, edges, tuple(new[t] for t in m.phi))


@dataclass(frozen=True)
class ModelCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_model(g: Graph, m: ThickModel, require: Require = "any") -> ModelCheck:
    """Check the two model conditions, plus the shape of H if ``require`` asks.

    Raises GraphInputError for a model of the wrong dimensions; every other
    problem comes back as a failed check naming the first violation found.
    """
    if len(m.phi) != g.n:
        raise GraphInputError(f"phi has length {len(m.phi)}, graph has {g.n} vertices")
    if any(not 0 <= t < m.thin_n for t in m.phi):
        raise GraphInputError("phi value outside 0..thin_n-1")
    for a, b in m.thin_edges:
        if not (0 <= a < m.thin_n and 0 <= b < m.thin_n) or a == b:
            raise GraphInputError(f"bad thin edge ({a},{b})")
    blocks = [0] * m.thin_n
    for v, t in enumerate(m.phi):
        blocks[t] |= 1 << v
    for t, b in enumerate(blocks):
        if b == 0:
            return ModelCheck(False, f"condition 1: thick vertex {t} is empty")
        if not is_clique_mask(g, b):
            return ModelCheck(False, f"condition 1: thick vertex {t} is not a clique")
    thin = {(min(a, b), max(a, b)) for a, b in m.thin_edges}
    for u, v in g.sorted_edges():
        a, b = m.phi[u], m.phi[v]
        if a != b and (min(a, b), max(a, b)) not in thin:
            return ModelCheck(False, f"condition 2: edge {u}-{v} joins thick vertices {a},{b} with no thin edge")
    if require == "any":
        return ModelCheck(True)
    h = m.thin_graph()
    if require == "triangle-free":
        masks = h.masks
        for a, b in h.sorted_edges():
            if masks[a] & masks[b]:
                return ModelCheck(False, f"thin graph has a triangle on edge {a}-{b}")
        return ModelCheck(True)
    if require == "forest":
        parent = list(range(m.thin_n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in h.sorted_edges():
            ra, rb = find(a), find(b)
            if ra == rb:
                return ModelCheck(False, f"thin graph has a cycle through edge {a}-{b}")
            parent[ra] = rb
        return ModelCheck(True)
    raise ValueError(f"unknown requirement {require!r}")


def read_model(path: str | Path) -> ThickModel:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path}: not valid JSON ({exc})") from exc
    return ThickModel.from_json(data)


def write_model(m: ThickModel, path: str | Path) -> None:
    Path(path).write_text(dumps_model(m) + "\n")


def dumps_model(m: ThickModel) -> str:
    return json.dumps(m.to_json())
