"""Recognition of thick triangle-free graphs with at most nu thick vertices.

The answer is exact.  The thick-forest recognizer and the local checks run
first (every closed neighbourhood must be unipolar, and alpha(G) <= nu);
after that a backtracking search assigns vertices to at most nu cliques
while keeping the quotient triangle-free.  The search is exponential in n
in the worst case, not only in nu.
"""

from __future__ import annotations

from .counting import independence_number
from .decomposition import is_quasi_thick_forest
from .graph import Graph, bits, lowest, mask_of
from .model import ThickModel, canonical, model_from_blocks, verify_model
from .recognition import RecognitionOutcome, _unipolar, recognize_thick_forest


def _contract_greedily(g: Graph, blocks: list[int], nu: int) -> list[int]:
    """Merge adjacent thick vertices whose union is a clique while more than
    nu remain.  Merging along a thin edge of a forest keeps it a forest."""
    masks = g.masks
    changed = True
    while changed and len(blocks) > nu:
        changed = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                u = blocks[i] | blocks[j]
                if all(not (u & ~masks[v] & ~(1 << v)) for v in bits(u)):
                    blocks[i] = u
                    del blocks[j]
                    changed = True
                    break
            if changed:
                break
    return blocks


def _true_twin_classes(g: Graph) -> list[int]:
    classes: dict[int, int] = {}
    for v in range(g.n):
        key = g.masks[v] | (1 << v)
        classes[key] = classes.get(key, 0) | (1 << v)
    return sorted(classes.values(), key=lambda c: c & -c)


def _search(g: Graph, nu: int) -> list[int] | None:
    """Blocks of a clique partition with <= nu parts and triangle-free
    quotient, or None.  True twins are kept together, which loses nothing:
    a twin can always join its twin's thick vertex."""
    classes = _true_twin_classes(g)
    rep = [lowest(c) for c in classes]
    k = len(classes)
    # class adjacency on representatives
    cadj = [0] * k
    for i, v in enumerate(rep):
        for j, u in enumerate(rep):
            if i != j and (g.masks[v] >> u) & 1:
                cadj[i] |= 1 << j
    # visit classes in BFS order so constraints bite early
    order = []
    seen = 0
    for start in range(k):
        if (seen >> start) & 1:
            continue
        frontier = [start]
        seen |= 1 << start
        while frontier:
            nxt = []
            for x in frontier:
                order.append(x)
                for y in bits(cadj[x] & ~seen):
                    seen |= 1 << y
                    nxt.append(y)
            frontier = nxt
    block_of = [-1] * k
    members: list[int] = []   # class masks per block
    badj: list[int] = []      # block adjacency masks
    failed: set[tuple] = set()

    def place(pos: int) -> bool:
        if pos == k:
            return True
        state = (pos, tuple(block_of))
        if state in failed:
            return False
        c = order[pos]
        options = list(range(len(members)))
        if len(members) < nu:
            options.append(len(members))
        for b in options:
            new = b == len(members)
            if not new and members[b] & ~cadj[c]:
                continue
            touch = 0
            for j in bits(cadj[c]):
                t = block_of[j]
                if t >= 0 and t != b:
                    touch |= 1 << t
            # the new edges b-t for t in touch must not close a triangle
            old_b = 0 if new else badj[b]
            added = touch & ~old_b
            ok = True
            for t in bits(added):
                if badj[t] & (old_b | touch) & ~(1 << b):
                    ok = False
                    break
            if ok:
                for t1 in bits(added):
                    if badj[t1] & added:
                        ok = False
                        break
            if not ok:
                continue
            saved = None if new else (members[b], badj[b])
            saved_t = [(t, badj[t]) for t in bits(added)]
            if new:
                members.append(1 << c)
                badj.append(touch)
            else:
                members[b] |= 1 << c
                badj[b] |= touch
            for t in bits(added):
                badj[t] |= 1 << b
            block_of[c] = b
            if place(pos + 1):
                return True
            block_of[c] = -1
            for t, m in saved_t:
                badj[t] = m
            if new:
                members.pop()
                badj.pop()
            else:
                members[b], badj[b] = saved
        failed.add(state)
        return False

    if not place(0):
        return None
    blocks = []
    for cm in members:
        blk = 0
        for i in bits(cm):
            blk |= classes[i]
        blocks.append(blk)
    return blocks


def recognize_fpt_trianglefree(g: Graph, nu: int) -> RecognitionOutcome:
    """Decide whether g has a model with a triangle-free thin graph on at
    most ``nu`` vertices, returning such a model on acceptance."""
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    if g.n == 0:
        return RecognitionOutcome(True, ThickModel(0, (), ()))
    forest = recognize_thick_forest(g)
    if forest:
        blocks = [mask_of(b) for b in forest.model.members()]
        blocks = _contract_greedily(g, blocks, nu)
        if len(blocks) <= nu:
            return _accept(g, blocks, nu)
    for v in range(g.n):
        closed = g.masks[v] | (1 << v)
        if _unipolar(g, closed) is None:
            return RecognitionOutcome(False, witness={
                "step": "closed neighbourhood not unipolar", "vertices": bits(closed), "vertex": v})
    if is_quasi_thick_forest(g):
        alpha = independence_number(g)
        if alpha > nu:
            return RecognitionOutcome(False, witness={
                "step": "independence number exceeds nu", "vertices": list(range(g.n)), "alpha": alpha})
    blocks = _search(g, nu)
    if blocks is None:
        return RecognitionOutcome(False, witness={
            "step": "no partition into at most nu cliques with triangle-free quotient",
            "vertices": list(range(g.n))})
    return _accept(g, blocks, nu)


def _accept(g: Graph, blocks: list[int], nu: int) -> RecognitionOutcome:
    model = canonical(model_from_blocks(g, [bits(b) for b in blocks]))
    check = verify_model(g, model, require="triangle-free")
    if not check or model.thin_n > nu:
        raise AssertionError(f"invalid triangle-free model: {check.reason or 'too many thick vertices'}")
    return RecognitionOutcome(True, model)
