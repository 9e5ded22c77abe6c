"""Clique cutset decomposition (Tarjan's scheme over a minimal elimination
ordering), atom classification and membership in the class Q of quasi thick
forests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chordal import mcs_m
from .graph import (
    Graph,
    bits,
    component_of,
    components_in,
    induced,
    is_clique_mask,
    lowest,
    mask_of,
)


@dataclass(frozen=True)
class AtomKind:
    kind: str  # "clique" | "cobipartite" | "other"
    sides: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class DecompNode:
    vertices: tuple[int, ...]
    separator: tuple[int, ...] | None = None
    left: int | None = None
    right: int | None = None

    @property
    def is_leaf(self) -> bool:
        return self.separator is None


@dataclass
class DecompositionTree:
    nodes: list[DecompNode] = field(default_factory=list)
    root: int = -1

    def atoms(self) -> list[tuple[int, ...]]:
        return [nd.vertices for nd in self.nodes if nd.is_leaf]

    def internal(self) -> list[DecompNode]:
        return [nd for nd in self.nodes if not nd.is_leaf]

    def leaf_ids(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if nd.is_leaf]

    def to_json(self, g: Graph | None = None) -> dict:
        out = []
        for i, nd in enumerate(self.nodes):
            entry: dict = {"id": i, "vertices": list(nd.vertices)}
            if nd.is_leaf:
                entry["sep"] = None
                entry["atom"] = list(nd.vertices)
                if g is not None:
                    k = classify_atom(g, nd.vertices)
                    entry["kind"] = k.kind
                    entry["sides"] = [list(s) for s in k.sides] if k.sides else None
                entry["children"] = []
            else:
                entry["sep"] = list(nd.separator)
                entry["atom"] = None
                entry["kind"] = "separator"
                entry["children"] = [nd.left, nd.right]
            out.append(entry)
        return {"root": self.root, "nodes": out}

    def dumps(self, g: Graph | None = None) -> str:
        return json.dumps(self.to_json(g))


def _add(tree: DecompositionTree, node: DecompNode) -> int:
    tree.nodes.append(node)
    return len(tree.nodes) - 1


def clique_cutset_decompose(g: Graph, within: int | None = None) -> DecompositionTree:
    """Decompose G (or G[within]) by clique cutsets.

    Components are split off first on the empty separator.  Inside a
    component, vertices are scanned in MCS-M elimination order; for v with
    higher filled-graph neighbourhood C, if C is a clique of G the component
    B of G' - C containing v is split off as atom B + C, provided G' - (B + C)
    is nonempty.
    """
    if within is None:
        within = g.full
    tree = DecompositionTree()
    if within == 0:
        tree.root = _add(tree, DecompNode(()))
        return tree
    comps = components_in(g, within)
    sub_roots = [_decompose_connected(g, c, tree) for c in comps]
    # right-nested chain of empty separators over the components
    root = sub_roots[-1]
    covered = comps[-1]
    for c, r in zip(reversed(comps[:-1]), reversed(sub_roots[:-1])):
        covered |= c
        root = _add(tree, DecompNode(tuple(bits(covered)), (), r, root))
    tree.root = root
    return tree


def _decompose_connected(g: Graph, comp: int, tree: DecompositionTree) -> int:
    if comp & (comp - 1) == 0 or is_clique_mask(g, comp):
        return _add(tree, DecompNode(tuple(bits(comp))))
    sub, verts = induced(g, bits(comp))
    tri = mcs_m(sub)
    to_g = verts
    steps: list[tuple[int, int, int]] = []  # (current vertex set, separator, atom)
    current = sub.full
    for v in tri.order:
        if not (current >> v) & 1:
            continue
        c = tri.higher[v] & current
        if not c or not is_clique_mask(sub, c):
            continue
        b = component_of(sub, v, current & ~c)
        if current & ~(b | c):
            steps.append((current, c, b | c))
            current &= ~b
    last = _add(tree, DecompNode(tuple(to_g[i] for i in bits(current))))
    node = last
    for cur, sep, atom in reversed(steps):
        leaf = _add(tree, DecompNode(tuple(to_g[i] for i in bits(atom))))
        node = _add(tree, DecompNode(
            tuple(to_g[i] for i in bits(cur)),
            tuple(to_g[i] for i in bits(sep)),
            leaf,
            node,
        ))
    return node


# --- cobipartite recognition and atom classes -----------------------------

def cobipartite_sides(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """Sides (U, W) of G[within] as masks by 2-colouring the complement.

    Each complement component puts the side containing its least vertex into U.
    """
    if within is None:
        within = g.full
    masks = g.masks
    side_u = side_w = 0
    todo = within
    while todo:
        root = lowest(todo)
        colour_a, colour_b = 1 << root, 0
        frontier, in_a = colour_a, True
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= within & ~masks[v] & ~(1 << v)
            if reach & (colour_a if in_a else colour_b):
                return None
            if in_a:
                frontier = reach & ~colour_b
                colour_b |= frontier
            else:
                frontier = reach & ~colour_a
                colour_a |= frontier
            in_a = not in_a
        side_u |= colour_a
        side_w |= colour_b
        todo &= ~(colour_a | colour_b)
    return side_u, side_w


def recognize_cobipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    sides = cobipartite_sides(g)
    if sides is None:
        return None
    return bits(sides[0]), bits(sides[1])


def classify_atom(g: Graph, atom) -> AtomKind:
    m = mask_of(atom)
    if is_clique_mask(g, m):
        return AtomKind("clique")
    sides = cobipartite_sides(g, m)
    if sides is not None:
        return AtomKind("cobipartite", (tuple(bits(sides[0])), tuple(bits(sides[1]))))
    return AtomKind("other")


@dataclass(frozen=True)
class QuasiResult:
    accepted: bool
    tree: DecompositionTree
    bad_atom: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.accepted


def is_quasi_thick_forest(g: Graph, within: int | None = None) -> QuasiResult:
    tree = clique_cutset_decompose(g, within)
    for atom in tree.atoms():
        if classify_atom(g, atom).kind == "other":
            return QuasiResult(False, tree, atom)
    return QuasiResult(True, tree)


def validate_decomposition(g: Graph, tree: DecompositionTree, within: int | None = None) -> str | None:
    """Structural check of a decomposition; returns a message or None."""
    if within is None:
        within = g.full
    if mask_of(tree.nodes[tree.root].vertices) != within:
        return "root does not cover the vertex set"
    for nd in tree.nodes:
        vs = mask_of(nd.vertices)
        if nd.is_leaf:
            continue
        sep = mask_of(nd.separator)
        if not is_clique_mask(g, sep):
            return f"separator {nd.separator} is not a clique"
        left = mask_of(tree.nodes[nd.left].vertices)
        right = mask_of(tree.nodes[nd.right].vertices)
        if left | right != vs:
            return "children do not cover the parent"
        if left & right != sep:
            return "children overlap outside the separator"
        if not (left & ~sep) or not (right & ~sep):
            return "a side of the split is empty"
        for v in bits(left & ~sep):
            if g.masks[v] & right & ~sep:
                return f"separator {nd.separator} does not separate"
    return None
