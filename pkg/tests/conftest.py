"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from subcomp.graph import Graph, members_of


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Random simple graph with min_n <= n <= max_n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph(n, edges)


@st.composite
def graphs_with_subset(draw, min_n=0, max_n=8):
    """(graph, vertex tuple) pair; the subset can be any of the 2^n."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    smask = draw(st.integers(min_value=0, max_value=(1 << g.n) - 1))
    return g, members_of(smask)


@st.composite
def graphs_with_vertex(draw, max_n=8):
    """(graph, vertex) pair with n >= 1."""
    g = draw(graphs(min_n=1, max_n=max_n))
    v = draw(st.integers(min_value=0, max_value=g.n - 1))
    return g, v
