import pytest
from hypothesis import strategies as st

from coxgraph.corpus import corpus
from coxgraph.embedding import build_context
from coxgraph.graphs import Graph


@pytest.fixture(scope="session")
def corpus_graphs():
    return corpus()


@pytest.fixture(scope="session")
def corpus_contexts(corpus_graphs):
    return {name: build_context(g) for name, g in corpus_graphs.items()}


@st.composite
def random_connected_graphs(draw, max_n: int = 6):
    """Random connected graphs: a random tree plus a few extra edges."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = set()
    for v in range(2, n + 1):
        p = draw(st.integers(min_value=1, max_value=v - 1))
        pairs.add((p, v))
    extras = draw(
        st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=4)
    )
    for u, v in extras:
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    return Graph(
        n, [(f"e{i}", a, b) for i, (a, b) in enumerate(sorted(pairs), start=1)]
    )
