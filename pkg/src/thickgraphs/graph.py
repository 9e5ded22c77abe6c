"""Immutable simple undirected graphs on vertices 0..n-1.

Adjacency is stored twice: as sorted neighbour tuples (for iteration) and as
integer bitmasks (for O(1) pair queries and fast set algebra).  Most of the
package manipulates vertex sets as bitmasks; the helpers at the bottom of this
module convert between masks and sorted lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Malformed graph data (bad endpoint, self-loop, duplicate edge, ...)."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for nb in self.adj:
            m = 0
            for u in nb:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def vertex(self, name: str) -> int:
        if self.names is None:
            return int(name)
        return self.names.index(name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], names: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphInputError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop ({u},{v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if names is not None and len(names) != n:
        raise GraphInputError(f"expected {n} names, got {len(names)}")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), tuple(names) if names is not None else None)


def from_masks(n: int, masks: Sequence[int], names: Sequence[str] | None = None) -> Graph:
    return Graph(n, tuple(tuple(bits(m)) for m in masks), tuple(names) if names is not None else None)


def complement(g: Graph) -> Graph:
    full = g.full
    return from_masks(g.n, [full & ~g.masks[v] & ~(1 << v) for v in range(g.n)], g.names)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabelled 0..|s|-1; also returns new->old map."""
    verts = tuple(sorted(set(s)))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    adj = tuple(tuple(sorted(index[u] for u in g.adj[v] if u in index)) for v in verts)
    names = tuple(g.names[v] for v in verts) if g.names else None
    return Graph(len(verts), adj, names), verts


def components(g: Graph) -> list[list[int]]:
    return [bits(c) for c in components_in(g, g.full)]


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    return is_clique_mask(g, mask_of(s))


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return [v for v in range(g.n) if colour[v] == 0], [v for v in range(g.n) if colour[v] == 1]


# --- bitmask helpers -------------------------------------------------------

def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def bits(m: int) -> list[int]:
    count = m.bit_count()
    if count <= 8:
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out
    # peeling bits one at a time is quadratic on long masks; scan the digits
    s = bin(m)[:1:-1]
    if 4 * count > len(s):
        return [i for i, c in enumerate(s) if c == "1"]
    out = []
    i = s.find("1")
    while i >= 0:
        out.append(i)
        i = s.find("1", i + 1)
    return out


def lowest(m: int) -> int:
    return (m & -m).bit_length() - 1


def is_clique_mask(g: Graph, s: int) -> bool:
    masks = g.masks
    for v in bits(s):
        if s & ~masks[v] & ~(1 << v):
            return False
    return True


def nbr_mask(g: Graph, s: int) -> int:
    """Open neighbourhood N(S) = (union of N(v), v in S) minus S."""
    out = 0
    masks = g.masks
    for v in bits(s):
        out |= masks[v]
    return out & ~s


def common_nbr_mask(g: Graph, s: int, within: int) -> int:
    """Vertices of ``within`` outside S that are complete to S."""
    out = within & ~s
    masks = g.masks
    for v in bits(s):
        if not out:
            break
        out &= masks[v]
    return out


def component_of(g: Graph, v: int, within: int) -> int:
    masks = g.masks
    comp = 1 << v
    frontier = comp
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= masks[u]
        frontier = grow & within & ~comp
        comp |= frontier
    return comp


def components_in(g: Graph, within: int) -> list[int]:
    """Connected components of G[within], ordered by least vertex."""
    out = []
    rest = within
    while rest:
        c = component_of(g, lowest(rest), within)
        out.append(c)
        rest &= ~c
    return out


def is_connected_mask(g: Graph, within: int) -> bool:
    return within == 0 or component_of(g, lowest(within), within) == within


def separates(g: Graph, s: int, within: int | None = None) -> bool:
    """True when removing S leaves at least two components of G[within]."""
    if within is None:
        within = g.full
    rest = within & ~s
    if not rest:
        return False
    return component_of(g, lowest(rest), rest) != rest


# --- text format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the ``.graph`` format; a comment ``# names: a b c`` supplies labels."""
    names: list[str] | None = None
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("names:"):
                names = body[len("names:"):].split()
            continue
        rows.append([lineno, *line.split()])
    if not rows:
        raise GraphInputError("missing header line 'n m'")
    head = rows[0]
    if len(head) != 3:
        raise GraphInputError(f"line {head[0]}: header must be 'n m'")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise GraphInputError(f"line {head[0]}: header must be two integers") from exc
    if n < 0 or m < 0:
        raise GraphInputError(f"line {head[0]}: negative count")
    if len(rows) - 1 != m:
        raise GraphInputError(f"header promises {m} edges, found {len(rows) - 1}")
    seen: set[tuple[int, int]] = set()
    pairs = []
    for row in rows[1:]:
        if len(row) != 3:
            raise GraphInputError(f"line {row[0]}: edge lines need two vertices")
        try:
            u, v = int(row[1]), int(row[2])
        except ValueError as exc:
            raise GraphInputError(f"line {row[0]}: non-integer vertex") from exc
        if not (0 <= u < v < n):
            raise GraphInputError(f"line {row[0]}: edge must satisfy 0 <= u < v < n, got {u} {v}")
        if (u, v) in seen:
            raise GraphInputError(f"line {row[0]}: duplicate edge {u} {v}")
        seen.add((u, v))
        pairs.append((u, v))
    if names is not None and len(names) != n:
        raise GraphInputError(f"names comment lists {len(names)} labels for {n} vertices")
    return from_edge_list(n, pairs, names)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    if g.names:
        lines.append("# names: " + " ".join(g.names))
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def from_named_edges(spec: str) -> Graph:
    """Build a graph from a whitespace list of ``a-b`` pairs over letter labels.

    Labels are sorted so that single letters map a->0, b->1, ... .
    Isolated labels can be listed bare.
    """
    tokens = spec.split()
    labels: set[str] = set()
    pairs = []
    for tok in tokens:
        if "-" in tok:
            a, b = tok.split("-")
            labels.update((a, b))
            pairs.append((a, b))
        else:
            labels.add(tok)
    order = sorted(labels, key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(order)}
    return from_edge_list(len(order), [(index[a], index[b]) for a, b in pairs], order)
