from hypothesis import strategies as st

from thickgraphs.graph import from_edge_list


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])
