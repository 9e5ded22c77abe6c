"""Tree decompositions of the thin graph and the dynamic program counting
independent sets of a thick graph from a model (H, phi) plus a nice tree
decomposition of H."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from .graph import Graph, GraphInputError, bits, mask_of
from .model import ModelCheck, ThickModel, verify_model

EXACT_TD_CAP = 15


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags (0-based ids) joined by tree edges; no niceness assumed."""

    bags: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class NiceNode:
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    bag: frozenset[int]
    vertex: int | None = None
    children: tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode] = field(default_factory=list)
    root: int = -1

    @property
    def width(self) -> int:
        return max((len(nd.bag) for nd in self.nodes), default=0) - 1

    def add(self, node: NiceNode) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1


def _occupancy_connected(n_nodes: int, adjacency: list[list[int]], holders: list[int]) -> bool:
    if not holders:
        return True
    inside = set(holders)
    seen = {holders[0]}
    stack = [holders[0]]
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(inside)


def _axioms(h: Graph, bags: list[frozenset[int]], adjacency: list[list[int]]) -> str | None:
    covered = set()
    for b in bags:
        if any(not 0 <= v < h.n for v in b):
            return "bag vertex out of range"
        covered |= b
    missing = set(range(h.n)) - covered
    if missing:
        return f"axiom 1: vertex {min(missing)} is in no bag"
    for u, v in h.sorted_edges():
        if not any(u in b and v in b for b in bags):
            return f"axiom 2: edge {u}-{v} is in no bag"
    for v in range(h.n):
        holders = [i for i, b in enumerate(bags) if v in b]
        if not _occupancy_connected(len(bags), adjacency, holders):
            return f"axiom 3: bags holding vertex {v} are not connected"
    return None


def validate_raw_td(h: Graph, td: TreeDecomposition) -> ModelCheck:
    k = len(td.bags)
    if k == 0:
        return ModelCheck(h.n == 0, None if h.n == 0 else "no bags")
    adjacency: list[list[int]] = [[] for _ in range(k)]
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            return ModelCheck(False, f"bad tree edge ({a},{b})")
        ra, rb = find(a), find(b)
        if ra == rb:
            return ModelCheck(False, "bag graph has a cycle")
        parent[ra] = rb
        adjacency[a].append(b)
        adjacency[b].append(a)
    if len(td.edges) != k - 1:
        return ModelCheck(False, "bag graph is not connected")
    reason = _axioms(h, [frozenset(b) for b in td.bags], adjacency)
    return ModelCheck(reason is None, reason)


def validate_td(h: Graph, td: NiceTreeDecomposition) -> ModelCheck:
    """The three tree decomposition axioms plus niceness of every node."""
    nodes = td.nodes
    if not nodes or not 0 <= td.root < len(nodes):
        return ModelCheck(False, "no root")
    if nodes[td.root].bag:
        return ModelCheck(False, "niceness: root bag is not empty")
    adjacency: list[list[int]] = [[] for _ in nodes]
    indegree = [0] * len(nodes)
    for i, nd in enumerate(nodes):
        for c in nd.children:
            if not 0 <= c < len(nodes):
                return ModelCheck(False, f"node {i} has a missing child")
            adjacency[i].append(c)
            adjacency[c].append(i)
            indegree[c] += 1
        kids = [nodes[c].bag for c in nd.children]
        if nd.kind == "leaf":
            if kids or nd.bag:
                return ModelCheck(False, f"niceness: leaf {i} must have an empty bag and no children")
        elif nd.kind == "introduce":
            if len(kids) != 1 or nd.vertex is None or nd.vertex in kids[0] or nd.bag != kids[0] | {nd.vertex}:
                return ModelCheck(False, f"niceness: introduce node {i} is malformed")
        elif nd.kind == "forget":
            if len(kids) != 1 or nd.vertex is None or nd.vertex not in kids[0] or nd.bag != kids[0] - {nd.vertex}:
                return ModelCheck(False, f"niceness: forget node {i} is malformed")
        elif nd.kind == "join":
            if len(kids) != 2 or kids[0] != nd.bag or kids[1] != nd.bag:
                return ModelCheck(False, f"niceness: join node {i} has unequal child bags")
        else:
            return ModelCheck(False, f"niceness: unknown kind {nd.kind!r}")
    if indegree[td.root] or any(d != 1 for i, d in enumerate(indegree) if i != td.root):
        return ModelCheck(False, "nodes do not form a rooted tree")
    # every node reachable from the root
    seen = {td.root}
    stack = [td.root]
    while stack:
        for c in nodes[stack.pop()].children:
            if c not in seen:
                seen.add(c)
                stack.append(c)
    if len(seen) != len(nodes):
        return ModelCheck(False, "nodes do not form a rooted tree")
    reason = _axioms(h, [nd.bag for nd in nodes], adjacency)
    return ModelCheck(reason is None, reason)


def make_nice(h: Graph, td: TreeDecomposition, root: int = 0) -> NiceTreeDecomposition:
    """Nice form of a tree decomposition, rooted at bag ``root``.

    Each tree edge becomes a run of forgets then introduces, several
    children are merged by binary joins, and leaves and the root are padded
    down to empty bags.  Width is unchanged.
    """
    check = validate_raw_td(h, td)
    if not check:
        raise GraphInputError(f"invalid tree decomposition: {check.reason}")
    out = NiceTreeDecomposition()
    if not td.bags:
        out.root = out.add(NiceNode("leaf", frozenset()))
        return out
    adjacency: list[list[int]] = [[] for _ in td.bags]
    for a, b in td.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)

    def walk(node: int, bag: frozenset[int], target: frozenset[int]) -> tuple[int, frozenset[int]]:
        for v in sorted(bag - target):
            bag = bag - {v}
            node = out.add(NiceNode("forget", bag, v, (node,)))
        for v in sorted(target - bag):
            bag = bag | {v}
            node = out.add(NiceNode("introduce", bag, v, (node,)))
        return node, bag

    # iterative post-order over the rooted bag tree
    order, parent = [], {root: -1}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adjacency[x]:
            if y != parent[x]:
                parent[y] = x
                stack.append(y)
    built: dict[int, int] = {}
    for x in reversed(order):
        target = frozenset(td.bags[x])
        subs = []
        for y in adjacency[x]:
            if y != parent[x]:
                node, _ = walk(built[y], frozenset(td.bags[y]), target)
                subs.append(node)
        if not subs:
            node, _ = walk(out.add(NiceNode("leaf", frozenset())), frozenset(), target)
            subs.append(node)
        node = subs[0]
        for other in subs[1:]:
            node = out.add(NiceNode("join", target, None, (node, other)))
        built[x] = node
    top, _ = walk(built[root], frozenset(td.bags[root]), frozenset())
    out.root = top
    return out


def count_ind_treewidth(g: Graph, m: ThickModel, td: NiceTreeDecomposition) -> int:
    """Number of independent sets of g, by dynamic programming over a nice
    tree decomposition of the thin graph H.

    Table keys are independent sets S inside phi^-1(bag), at most one vertex
    per thick vertex since thick vertices are cliques.
    """
    check = verify_model(g, m, "any")
    if not check:
        raise ValueError(f"invalid model: {check.reason}")
    h = m.thin_graph()
    tcheck = validate_td(h, td)
    if not tcheck:
        raise ValueError(f"invalid tree decomposition: {tcheck.reason}")
    members = [mask_of(b) for b in m.members()]
    masks = g.masks
    limit = td.width + 1
    tables: dict[int, dict[int, int]] = {}
    # children always precede parents once the node list is topologically sorted
    for i in _post_order(td):
        nd = td.nodes[i]
        if nd.kind == "leaf":
            table = {0: 1}
        elif nd.kind == "introduce":
            child = tables.pop(nd.children[0])
            table = dict(child)
            for s, count in child.items():
                for x in bits(members[nd.vertex]):
                    if not masks[x] & s:
                        key = s | (1 << x)
                        table[key] = table.get(key, 0) + count
        elif nd.kind == "forget":
            child = tables.pop(nd.children[0])
            drop = ~members[nd.vertex]
            table = {}
            for s, count in child.items():
                key = s & drop
                table[key] = table.get(key, 0) + count
        else:
            a = tables.pop(nd.children[0])
            b = tables.pop(nd.children[1])
            table = {s: c * b[s] for s, c in a.items() if s in b}
        assert all(s.bit_count() <= limit for s in table), "table key larger than a bag"
        tables[i] = table
    return tables[td.root].get(0, 0)


def _post_order(td: NiceTreeDecomposition) -> list[int]:
    out = []
    stack = [(td.root, False)]
    while stack:
        x, done = stack.pop()
        if done:
            out.append(x)
            continue
        stack.append((x, True))
        for c in td.nodes[x].children:
            stack.append((c, False))
    return out


# --- exact treewidth (test utility) ----------------------------------------

def exact_td(h: Graph, cap: int = EXACT_TD_CAP) -> TreeDecomposition:
    """A minimum width tree decomposition by dynamic programming over vertex
    subsets (best elimination ordering).  Exponential; small H only."""
    n = h.n
    if n > cap:
        raise ValueError(f"exact treewidth is limited to {cap} vertices, got {n}")
    if n == 0:
        return TreeDecomposition((), ())
    masks = h.masks
    full = h.full

    def q_size(s: int, v: int) -> int:
        # vertices outside s + v reachable from v through s
        seen = 1 << v
        frontier = 1 << v
        out = 0
        while frontier:
            reach = 0
            for x in bits(frontier):
                reach |= masks[x]
            reach &= ~seen
            seen |= reach
            out |= reach & ~s
            frontier = reach & s
        return out.bit_count()

    best = {0: -1}
    choice = {}
    for size in range(1, n + 1):
        for s in _subsets_of_size(n, size):
            val, arg = None, -1
            for v in bits(s):
                cand = max(best[s & ~(1 << v)], q_size(s & ~(1 << v), v))
                if val is None or cand < val:
                    val, arg = cand, v
            best[s] = val
            choice[s] = arg
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return td_from_order(h, order)


def _subsets_of_size(n: int, k: int):
    s = (1 << k) - 1
    while s < 1 << n:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


def td_from_order(h: Graph, order: list[int]) -> TreeDecomposition:
    """Bags of the elimination game: v with its later neighbours in the
    filled graph, hung below the bag of the earliest of those neighbours."""
    pos = {v: i for i, v in enumerate(order)}
    nb = list(h.masks)
    bags = []
    parent_of = []
    for v in order:
        later = [u for u in bits(nb[v]) if pos[u] > pos[v]]
        lm = mask_of(later)
        for u in later:
            nb[u] |= lm & ~(1 << u)
        bags.append(tuple(sorted([v] + later)))
        parent_of.append(min((pos[u] for u in later), default=-1))
    edges = []
    roots = []
    for i, p in enumerate(parent_of):
        if p < 0:
            roots.append(i)
        else:
            edges.append((min(i, p), max(i, p)))
    # join the trees of different components into one tree
    for a, b in zip(roots, roots[1:]):
        edges.append((min(a, b), max(a, b)))
    return TreeDecomposition(tuple(bags), tuple(sorted(edges)))


# --- PACE .td files ---------------------------------------------------------

def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """PACE 2017 ``.td`` text: returns the decomposition (0-based) and n."""
    header = None
    bags: dict[int, tuple[int, ...]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if header is not None or len(parts) != 5 or parts[1] != "td":
                    raise GraphInputError(f"line {lineno}: bad solution line")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise GraphInputError(f"line {lineno}: bag before the solution line")
                bid = int(parts[1])
                if bid in bags or not 1 <= bid <= header[0]:
                    raise GraphInputError(f"line {lineno}: bad bag id {bid}")
                vs = tuple(sorted(int(x) - 1 for x in parts[2:]))
                if any(not 0 <= v < header[2] for v in vs):
                    raise GraphInputError(f"line {lineno}: vertex out of range")
                bags[bid] = vs
            else:
                if header is None or len(parts) != 2:
                    raise GraphInputError(f"line {lineno}: unexpected line")
                a, b = int(parts[0]), int(parts[1])
                if not (1 <= a <= header[0] and 1 <= b <= header[0]):
                    raise GraphInputError(f"line {lineno}: tree edge names a missing bag")
                edges.append((a - 1, b - 1))
        except ValueError as exc:
            if isinstance(exc, GraphInputError):
                raise
            raise GraphInputError(f"line {lineno}: {exc}") from exc
    if header is None:
        raise GraphInputError("missing 's td' line")
    num_bags, width_plus_one, n = header
    if len(bags) != num_bags:
        raise GraphInputError(f"expected {num_bags} bags, found {len(bags)}")
    ordered = tuple(bags[i + 1] for i in range(num_bags))
    if max((len(b) for b in ordered), default=0) > width_plus_one:
        raise GraphInputError("a bag is larger than the declared width")
    return TreeDecomposition(ordered, tuple(edges)), n


def format_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, b in enumerate(td.bags):
        lines.append(" ".join(["b", str(i + 1)] + [str(v + 1) for v in b]))
    for a, b in td.edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def read_td(path: str | Path) -> tuple[TreeDecomposition, int]:
    return parse_td(Path(path).read_text())


def write_td(td: TreeDecomposition, n: int, path: str | Path) -> None:
    Path(path).write_text(format_td(td, n))
