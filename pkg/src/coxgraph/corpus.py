"""Reference graphs used by the test suite, the scripts, and the docs.

Labels are chosen so the deterministic minimum-label spanning tree picks the
intended tree: path/cycle graphs get consecutive letters along the path, the
six-vertex example keeps its customary lettering with chords x, y, z.
"""

from __future__ import annotations

import random
import string

from .graphs import Graph
from .presentation import tsaranov_graph

RANDOM7_SEED = 731  # frozen; rebuilding must reproduce the same graph


def path_graph(n: int) -> Graph:
    edges = [(string.ascii_lowercase[i], i + 1, i + 2) for i in range(n - 1)]
    return Graph(n, edges)


def cycle_graph(n: int) -> Graph:
    edges = [(string.ascii_lowercase[i], i + 1, i + 2) for i in range(n - 1)]
    edges.append((string.ascii_lowercase[n - 1], 1, n))
    return Graph(n, edges)


def y_graph() -> Graph:
    return Graph(4, [("a", 1, 2), ("b", 1, 3), ("c", 1, 4)])


def complete4() -> Graph:
    return Graph(
        4,
        [
            ("a", 1, 2), ("b", 1, 3), ("c", 1, 4),
            ("d", 2, 3), ("e", 2, 4), ("f", 3, 4),
        ],
    )


def complete4_minus_edge() -> Graph:
    return Graph(
        4,
        [("a", 1, 2), ("b", 1, 3), ("c", 1, 4), ("d", 2, 3), ("e", 2, 4)],
    )


def sixpts_graph() -> Graph:
    """Six vertices, a square and two triangles; tree a..e, chords x, y, z."""
    return Graph(
        6,
        [
            ("a", 1, 2), ("b", 2, 3), ("c", 1, 5), ("d", 2, 6), ("e", 4, 5),
            ("x", 1, 4), ("y", 3, 6), ("z", 5, 6),
        ],
    )


def book_graph() -> Graph:
    """Three triangles sharing one edge (the hexagonal Tsaranov graph)."""
    return tsaranov_graph(3, 3, 3)


def random7_graph() -> Graph:
    """A seeded random connected graph with n = 7 and cycle rank 3.

    Tree edges get labels e1..e6 so the minimum-label tree is the generated
    tree; the three chords are e7..e9.
    """
    rng = random.Random(RANDOM7_SEED)
    n = 7
    edges: list[tuple[str, int, int]] = []
    pairs: set[tuple[int, int]] = set()
    for v in range(2, n + 1):
        p = rng.randrange(1, v)
        edges.append((f"e{v - 1}", min(p, v), max(p, v)))
        pairs.add((min(p, v), max(p, v)))
    non_edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in pairs
    ]
    for k, (u, v) in enumerate(rng.sample(non_edges, 3), start=n):
        edges.append((f"e{k}", u, v))
    return Graph(n, edges)


def corpus() -> dict[str, Graph]:
    """All reference graphs, keyed by short names."""
    graphs: dict[str, Graph] = {}
    for n in range(2, 8):
        graphs[f"p{n}"] = path_graph(n)
    graphs["y"] = y_graph()
    for n in range(3, 9):
        graphs[f"c{n}"] = cycle_graph(n)
    graphs["k4me"] = complete4_minus_edge()
    graphs["k4"] = complete4()
    graphs["sixpts"] = sixpts_graph()
    graphs["book33"] = book_graph()
    graphs["rand7"] = random7_graph()
    return graphs
