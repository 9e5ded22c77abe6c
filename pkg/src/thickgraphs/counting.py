"""Exact counting on quasi thick forests: weighted independent sets and
proper q-colourings, both driven by the clique cutset decomposition."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .decomposition import DecompositionTree, classify_atom, clique_cutset_decompose
from .graph import (
    Graph,
    GraphInputError,
    bipartition,
    bits,
    is_clique_mask,
    mask_of,
)

MATCHING_CAP = 24


class NotInClassError(ValueError):
    """Input lies outside the class an algorithm needs; ``atom`` is the
    offending atom when one is known."""

    def __init__(self, message: str, atom: tuple[int, ...] | None = None):
        super().__init__(message)
        self.atom = atom


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class CountPolynomial:
    """Coefficients c_0..c_d, trailing zeros trimmed."""

    coeffs: tuple

    @classmethod
    def of(cls, coeffs: Sequence) -> "CountPolynomial":
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> list[str]:
        return [_frac_str(Fraction(c)) for c in self.coeffs]


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=4096)
def falling_factorial(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("falling factorial needs a, b >= 0")
    if b > a:
        return 0
    out = 1
    for i in range(b):
        out *= a - i
    return out


# --- matchings and the cobipartite colouring formula ------------------------

def matching_counts(b: Graph, side_p=None, side_q=None, cap: int = MATCHING_CAP) -> CountPolynomial:
    """kappa_k, the number of k-edge matchings of a bipartite graph.

    Subset DP: the larger side is processed vertex by vertex and the state is
    the set of used vertices on the smaller side.
    """
    if side_p is None or side_q is None:
        sides = bipartition(b)
        if sides is None:
            raise GraphInputError("graph is not bipartite")
        side_p, side_q = sides
    p, q = list(side_p), list(side_q)
    if len(p) > len(q):
        p, q = q, p
    if len(p) > cap:
        raise CapExceededError(f"smaller side has {len(p)} vertices, cap is {cap}")
    index = {v: i for i, v in enumerate(p)}
    states = {0: 1}
    for v in q:
        opts = [1 << index[u] for u in b.adj[v] if u in index]
        if not opts:
            continue
        nxt = dict(states)
        for used, count in states.items():
            for bit in opts:
                if not used & bit:
                    key = used | bit
                    nxt[key] = nxt.get(key, 0) + count
        states = nxt
    kappa = [0] * (len(p) + 1)
    for used, count in states.items():
        kappa[used.bit_count()] += count
    return CountPolynomial.of(kappa)


def _crossing_complement(g: Graph, um: int, wm: int) -> Graph:
    """B-bar: the non-edges of g between the two sides, as a bipartite graph."""
    edges = []
    for u in bits(um):
        for w in bits(wm & ~g.masks[u]):
            edges.append((u, w))
    from .graph import from_edge_list
    return from_edge_list(g.n, edges)


def _cobipartite_count(g: Graph, um: int, wm: int, q: int, kappa_fn) -> int:
    n = (um | wm).bit_count()
    kappa = kappa_fn(_crossing_complement(g, um, wm), bits(um), bits(wm))
    return sum(kappa[k] * falling_factorial(q, n - k) for k in range(len(kappa)) if n - k <= q)


def cobipartite_colourings(g: Graph, sides, q: int, cap: int = MATCHING_CAP) -> int:
    """Proper q-colourings of a cobipartite graph: sum of kappa_k (q)_(n-k)."""
    um, wm = mask_of(sides[0]), mask_of(sides[1])
    if um & wm or (um | wm) != g.full:
        raise ValueError("sides must partition the vertex set")
    if not (is_clique_mask(g, um) and is_clique_mask(g, wm)):
        raise ValueError("sides must be cliques")
    return _cobipartite_count(g, um, wm, q, lambda b, p, s: matching_counts(b, p, s, cap))


def _atom_kinds(g: Graph, tree: DecompositionTree) -> dict:
    kinds = {}
    for atom in tree.atoms():
        k = classify_atom(g, atom)
        if k.kind == "other":
            raise NotInClassError(f"atom {list(atom)} is neither a clique nor cobipartite", atom)
        kinds[atom] = k
    return kinds


def _colour_tree(g: Graph, q: int, atom_count) -> int:
    tree = clique_cutset_decompose(g)
    kinds = _atom_kinds(g, tree)

    def rec(i: int) -> int:
        nd = tree.nodes[i]
        if nd.is_leaf:
            k = kinds[nd.vertices]
            if k.kind == "clique":
                return falling_factorial(q, len(nd.vertices))
            return atom_count(mask_of(k.sides[0]), mask_of(k.sides[1]))
        s = len(nd.separator)
        if s > q:
            return 0
        left = rec(nd.left)
        if left == 0:
            return 0
        right = rec(nd.right)
        num = left * right
        den = falling_factorial(q, s)
        quot, rem = divmod(num, den)
        assert rem == 0, "clique cutset division left a remainder"
        return quot

    if g.n == 0:
        return 1
    return _iterative(rec, tree)


def _iterative(rec, tree: DecompositionTree):
    # decomposition trees are chains of depth up to n; raise the limit locally
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(tree.nodes) + 1000))
    try:
        return rec(tree.root)
    finally:
        sys.setrecursionlimit(old)


def count_colourings(g: Graph, q: int, cap: int = MATCHING_CAP) -> int:
    """Proper q-colourings of a quasi thick forest via clique cutsets."""
    if q < 0:
        raise ValueError("q must be nonnegative")

    def atom(um: int, wm: int) -> int:
        return _cobipartite_count(g, um, wm, q, lambda b, p, s: matching_counts(b, p, s, cap))

    return _colour_tree(g, q, atom)


def _enumerated_matchings(b: Graph, side_p, side_q) -> list[int]:
    """kappa_k by listing every matching; fine when both sides are small."""
    p = list(side_p)
    qset = mask_of(side_q)
    kappa = [0] * (len(p) + 1)

    def rec(i: int, used: int, size: int) -> None:
        if i == len(p):
            kappa[size] += 1
            return
        rec(i + 1, used, size)
        for w in bits(b.masks[p[i]] & qset & ~used):
            rec(i + 1, used | (1 << w), size + 1)

    rec(0, 0, 0)
    return kappa


def clique_number(g: Graph) -> int:
    """omega(G) of a quasi thick forest: the largest atom clique, where a
    cobipartite atom on n vertices has omega = n - (maximum matching of B-bar)."""
    if g.n == 0:
        return 0
    tree = clique_cutset_decompose(g)
    best = 0
    for atom, k in _atom_kinds(g, tree).items():
        if k.kind == "clique":
            best = max(best, len(atom))
        else:
            um, wm = mask_of(k.sides[0]), mask_of(k.sides[1])
            b = _crossing_complement(g, um, wm)
            nu = matching_counts(b, bits(um), bits(wm)).degree
            best = max(best, len(atom) - nu)
    return best


def chi_parameter_colour_count(g: Graph, q: int, chi: int | None = None) -> int:
    """Colour count where every cobipartite atom's matchings are listed
    outright.  With omega(G) <= chi both atom sides have at most chi vertices,
    so there are fewer than chi^(2k) matchings of size k."""
    omega = clique_number(g)
    if chi is not None and omega > chi:
        raise NotInClassError(f"clique number {omega} exceeds the bound {chi}")
    out = _colour_tree(g, q, lambda um, wm: _cobipartite_count(g, um, wm, q, _enumerated_matchings))
    assert out == count_colourings(g, q), "enumerated and DP matching counts disagree"
    return out


# --- weighted independent sets ----------------------------------------------

def _as_weights(g: Graph, weights) -> list[Fraction]:
    if weights is None:
        return [Fraction(1)] * g.n
    w = [Fraction(x) for x in weights]
    if len(w) != g.n:
        raise GraphInputError(f"{len(w)} weights for {g.n} vertices")
    if any(x < 0 for x in w):
        raise GraphInputError("weights must be nonnegative")
    return w


def _alpha2_sum(g: Graph, s: int, w: list[Fraction]) -> Fraction:
    """W(G[s]) when alpha(G[s]) <= 2: 1 + sum w + sum over non-adjacent pairs."""
    vs = bits(s)
    total = Fraction(1) + sum((w[v] for v in vs), Fraction(0))
    masks = g.masks
    for i, u in enumerate(vs):
        rest = s & ~masks[u] & ~((1 << (u + 1)) - 1)
        for v in bits(rest):
            total += w[u] * w[v]
    return total


def _alpha2_max(g: Graph, s: int, w: list[int]) -> int:
    vs = bits(s)
    best = max((w[v] for v in vs), default=0)
    best = max(best, 0)
    masks = g.masks
    for u in vs:
        for v in bits(s & ~masks[u] & ~((1 << (u + 1)) - 1)):
            best = max(best, w[u] + w[v])
    return best


def _separator_recursion(g: Graph, weights: list, atom_value, combine_weight, empty, product):
    """Fold the decomposition, conditioning on the (at most one) vertex of each
    clique separator in the set.

    At a node with separator S and atom B + S, f_0 = value(G[B]) and
    f_s = value(G[B] - N[s]) for s in S.  The rest of the graph is then solved
    with w(s) replaced by combine_weight(w(s), f_s, f_0), times f_0.
    """
    tree = clique_cutset_decompose(g)
    kinds = _atom_kinds(g, tree)
    masks = g.masks

    def rec(i: int, w: list) -> object:
        nd = tree.nodes[i]
        if nd.is_leaf:
            return atom_value(mask_of(nd.vertices), w)
        sep = mask_of(nd.separator)
        if not sep:
            return product(rec(nd.left, w), rec(nd.right, w))
        left = tree.nodes[nd.left]
        assert left.is_leaf and left.vertices in kinds
        body = mask_of(left.vertices) & ~sep
        f0 = atom_value(body, w)
        w2 = list(w)
        for s in bits(sep):
            fs = atom_value(body & ~masks[s], w)
            w2[s] = combine_weight(w[s], fs, f0)
        return product(f0, rec(nd.right, w2))

    if g.n == 0:
        return empty
    return _iterative(lambda root: rec(root, weights), tree)


def weighted_independent_sum(g: Graph, weights=None) -> Fraction:
    """W(G), the sum over independent sets of the product of vertex weights."""
    w = _as_weights(g, weights)
    return _separator_recursion(
        g, w,
        atom_value=lambda s, ww: _alpha2_sum(g, s, ww),
        combine_weight=lambda ws, fs, f0: ws * fs / f0,
        empty=Fraction(1),
        product=lambda a, b: a * b,
    )


def independence_number(g: Graph) -> int:
    """alpha(G) for a quasi thick forest, by the same separator recursion in
    the (max, +) semiring."""
    return _separator_recursion(
        g, [1] * g.n,
        atom_value=lambda s, ww: _alpha2_max(g, s, ww),
        combine_weight=lambda ws, fs, f0: ws + fs - f0,
        empty=0,
        product=lambda a, b: a + b,
    )


def independence_polynomial(g: Graph, weights=None) -> CountPolynomial:
    """Coefficients W_k (weight of independent sets of size k), recovered by
    exact interpolation of W(G) at lambda = 1 .. alpha+1."""
    w = _as_weights(g, weights)
    alpha = independence_number(g)
    xs = list(range(1, alpha + 2))
    ys = [weighted_independent_sum(g, [lam * x for x in w]) for lam in xs]
    coeffs = _interpolate(xs, ys)
    assert coeffs[0] == 1, "interpolated constant term is not 1"
    return CountPolynomial.of(coeffs)


def _interpolate(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    """Monomial coefficients of the polynomial through (xs, ys), via Newton
    divided differences."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    # Horner expansion of the Newton form from the innermost term outwards
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [shifted[k] - xs[i] * coeffs[k] for k in range(n)]
        coeffs[0] += dd[i]
    return coeffs


# --- weights files ----------------------------------------------------------

def parse_weights(text: str) -> list[Fraction]:
    try:
        data = json.loads(text)
        return [Fraction(str(x)) for x in data["weights"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise GraphInputError(f"malformed weights: {exc}") from exc


def read_weights(path: str | Path) -> list[Fraction]:
    return parse_weights(Path(path).read_text())


def dumps_weights(weights: Sequence) -> str:
    return json.dumps({"weights": [_frac_str(Fraction(x)) for x in weights]})
