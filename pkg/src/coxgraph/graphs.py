"""Simple labeled graphs: parsing, spanning trees, basic cycles, duals.

Vertices are the integers 1..n.  Edges carry unique string labels and are
undirected; an edge is always stored with its smaller endpoint first, and
that endpoint doubles as the edge's canonical starting point wherever a
direction is needed (chord orientation, cycle labeling).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GraphError(ValueError):
    """A structurally invalid graph (loops, duplicate pairs/labels, bad vertices)."""


class GraphParseError(GraphError):
    """Malformed graph file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DisconnectedError(GraphError):
    """Raised by operations that require a connected graph."""


@dataclass(frozen=True)
class Edge:
    label: str
    a: int  # smaller endpoint
    b: int  # larger endpoint

    def touches(self, v: int) -> bool:
        return v == self.a or v == self.b

    def other(self, v: int) -> int:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise ValueError(f"vertex {v} not on edge {self.label}")

    def shares_vertex(self, e: "Edge") -> bool:
        return bool({self.a, self.b} & {e.a, e.b})


class Graph:
    """An immutable simple graph with labeled edges on vertices 1..n."""

    def __init__(self, n: int, edges: Iterable[tuple[str, int, int]]):
        if n < 1:
            raise GraphError(f"need at least one vertex, got n={n}")
        normalized = []
        seen_labels: set[str] = set()
        seen_pairs: set[tuple[int, int]] = set()
        for label, a, b in edges:
            if not LABEL_RE.match(label):
                raise GraphError(f"bad edge label {label!r}")
            if a < 1 or b < 1 or a > n or b > n:
                raise GraphError(f"edge {label}: vertex out of range 1..{n}")
            if a == b:
                raise GraphError(f"edge {label}: loop at vertex {a}")
            lo, hi = min(a, b), max(a, b)
            if (lo, hi) in seen_pairs:
                raise GraphError(f"edge {label}: duplicate pair {{{lo},{hi}}}")
            if label in seen_labels:
                raise GraphError(f"duplicate label {label}")
            seen_labels.add(label)
            seen_pairs.add((lo, hi))
            normalized.append(Edge(label, lo, hi))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(normalized, key=lambda e: e.label))
        self._by_label = {e.label: e for e in self.edges}
        adj: dict[int, list[tuple[int, str]]] = {v: [] for v in range(1, n + 1)}
        for e in self.edges:
            adj[e.a].append((e.b, e.label))
            adj[e.b].append((e.a, e.label))
        self._adj = {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def edge(self, label: str) -> Edge:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"unknown edge label {label!r}") from None

    def has_label(self, label: str) -> bool:
        return label in self._by_label

    def neighbors(self, v: int) -> tuple[tuple[int, str], ...]:
        """Pairs (neighbor, edge label) in ascending neighbor order."""
        return self._adj[v]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def parse_graph(text: str) -> Graph:
    """Parse the plain-text edge list format.

    Each non-empty, non-comment line reads ``A B LABEL`` with positive
    integer endpoints; ``#`` starts a comment.  The vertex count is the
    largest endpoint mentioned.
    """
    rows: list[tuple[str, int, int]] = []
    seen_labels: set[str] = set()
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphParseError(f"expected 'A B LABEL', got {line!r}", lineno)
        sa, sb, label = parts
        try:
            a, b = int(sa), int(sb)
        except ValueError:
            raise GraphParseError(f"bad vertex in {line!r}", lineno) from None
        if a < 1 or b < 1:
            raise GraphParseError(f"vertices must be positive, got {a} {b}", lineno)
        if not LABEL_RE.match(label):
            raise GraphParseError(f"bad label {label!r}", lineno)
        if a == b:
            raise GraphParseError(f"edge {label}: loop at vertex {a}", lineno)
        pair = (min(a, b), max(a, b))
        if pair in seen_pairs:
            raise GraphParseError(
                f"edge {label}: duplicate pair {{{pair[0]},{pair[1]}}}", lineno
            )
        if label in seen_labels:
            raise GraphParseError(f"duplicate label {label}", lineno)
        seen_labels.add(label)
        seen_pairs.add(pair)
        rows.append((label, a, b))
    if not rows:
        raise GraphParseError("no edges", 1)
    n = max(max(a, b) for _, a, b in rows)
    return Graph(n, rows)


def graph_text(g: Graph) -> str:
    """Serialize a graph into the format accepted by parse_graph."""
    return "\n".join(f"{e.a} {e.b} {e.label}" for e in g.edges) + "\n"


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, smallest first."""
    seen: set[int] = set()
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w, _ in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class SpanningTreeData:
    """A spanning tree, rooted at vertex 1 for path computations."""

    tree_edges: frozenset[str]
    parent: dict[int, tuple[int, str]]  # vertex -> (parent vertex, edge label)
    depth: dict[int, int]

    def contains(self, label: str) -> bool:
        return label in self.tree_edges


def spanning_tree(g: Graph) -> SpanningTreeData:
    """Deterministic spanning tree: scan edges in label order, keep the ones
    joining new components (minimum-label tree).  Unique labels make this a
    pure function of the graph.
    """
    if not is_connected(g):
        raise DisconnectedError("spanning_tree requires a connected graph")
    root_of = {v: v for v in g.vertices()}

    def find(v: int) -> int:
        while root_of[v] != v:
            root_of[v] = root_of[root_of[v]]
            v = root_of[v]
        return v

    chosen: list[Edge] = []
    for e in g.edges:  # already label-sorted
        ra, rb = find(e.a), find(e.b)
        if ra != rb:
            root_of[ra] = rb
            chosen.append(e)
    assert len(chosen) == g.n - 1
    adj: dict[int, list[tuple[int, str]]] = {v: [] for v in g.vertices()}
    for e in chosen:
        adj[e.a].append((e.b, e.label))
        adj[e.b].append((e.a, e.label))
    parent: dict[int, tuple[int, str]] = {}
    depth = {1: 0}
    stack = [1]
    while stack:
        v = stack.pop()
        for w, label in sorted(adj[v]):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = (v, label)
                stack.append(w)
    return SpanningTreeData(frozenset(e.label for e in chosen), parent, depth)


def tree_path(t0: SpanningTreeData, a: int, b: int) -> list[tuple[str, int]]:
    """The unique tree path from a to b as (edge label, direction) pairs.

    Direction is +1 when the edge is traversed from its stored smaller
    endpoint to the larger one, -1 otherwise.
    """
    verts = tree_path_vertices(t0, a, b)
    return [
        (label, +1 if u < v else -1)
        for u, v, label in _path_edges(t0, verts)
    ]


def tree_path_labels(t0: SpanningTreeData, a: int, b: int) -> tuple[str, ...]:
    return tuple(label for label, _ in tree_path(t0, a, b))


def tree_path_vertices(t0: SpanningTreeData, a: int, b: int) -> list[int]:
    """Vertices along the unique tree path, starting at a and ending at b."""
    up_a, up_b = [a], [b]
    x, y = a, b
    while t0.depth[x] > t0.depth[y]:
        x = t0.parent[x][0]
        up_a.append(x)
    while t0.depth[y] > t0.depth[x]:
        y = t0.parent[y][0]
        up_b.append(y)
    while x != y:
        x = t0.parent[x][0]
        y = t0.parent[y][0]
        up_a.append(x)
        up_b.append(y)
    return up_a + up_b[-2::-1]


def _path_edges(t0: SpanningTreeData, verts: Sequence[int]):
    for u, v in zip(verts, verts[1:]):
        if u in t0.parent and t0.parent[u][0] == v:
            yield u, v, t0.parent[u][1]
        else:
            yield u, v, t0.parent[v][1]


@dataclass(frozen=True)
class BasicCycle:
    """The unique cycle closed by one chord over the spanning tree.

    Cycle-local vertex i (1-based) is ``local_to_global[i-1]``; local vertex 1
    is the chord's starting point and local vertex m its end.  ``cycle_edges``
    lists the tree edges u_2..u_m, the i-th joining local vertices i-1 and i;
    the chord itself plays the role of u_1.
    """

    chord: str
    local_to_global: tuple[int, ...]
    cycle_edges: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.local_to_global)

    def edge_at(self, i: int) -> str:
        """Edge u_i with wraparound: u_{m+1} means u_1 (the chord)."""
        i = (i - 1) % self.m + 1
        return self.chord if i == 1 else self.cycle_edges[i - 2]

    def local_index(self, v: int) -> int | None:
        try:
            return self.local_to_global.index(v) + 1
        except ValueError:
            return None


def basic_cycles(g: Graph, t0: SpanningTreeData) -> tuple[BasicCycle, ...]:
    """One basic cycle per chord, in chord label order."""
    cycles = []
    for e in g.edges:
        if e.label in t0.tree_edges:
            continue
        verts = tree_path_vertices(t0, e.a, e.b)
        labels = tree_path_labels(t0, e.a, e.b)
        cycles.append(BasicCycle(e.label, tuple(verts), labels))
    return tuple(cycles)


def cycle_rank(g: Graph) -> int:
    return len(g.edges) - g.n + 1


def dual_graph(g: Graph) -> Graph:
    """The graph on the edges of g, with adjacency given by edge intersection.

    Dual vertices are 1..|edges| in label order of the original edges.
    """
    k = len(g.edges)
    dual_edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if g.edges[i].shares_vertex(g.edges[j]):
                dual_edges.append((f"d{i + 1}_{j + 1}", i + 1, j + 1))
    return Graph(max(k, 1), dual_edges)


def has_forbidden_fork(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Detect the four-vertex fork: a middle vertex with three distinct
    neighbors (a length-2 path plus a pendant edge at its middle).

    Returns (found, witness) with witness = (middle, leaf, leaf, leaf).
    """
    for v in g.vertices():
        nbrs = [w for w, _ in g.neighbors(v)]
        if len(nbrs) >= 3:
            return True, (v, nbrs[0], nbrs[1], nbrs[2])
    return False, None


def edge_subgraph(g: Graph, labels: Iterable[str]) -> tuple[Graph, dict[int, int]]:
    """The subgraph spanned by the given edges, vertices renumbered 1..k in
    increasing order of their original names.  Returns (graph, old->new map).
    """
    chosen = [g.edge(label) for label in labels]
    verts = sorted({v for e in chosen for v in (e.a, e.b)})
    renum = {old: new for new, old in enumerate(verts, start=1)}
    sub = Graph(len(verts), [(e.label, renum[e.a], renum[e.b]) for e in chosen])
    return sub, renum
